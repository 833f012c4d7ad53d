"""Torus-fixed points of ``S^[d]`` and their tangent representations."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .linalg import rank
from .polynomial import Character, Polynomial, product_of_forms
from .staircase import Staircase, _check_chart, enumerate_staircases, tangent_characters, clefts
from .toric import ToricSurface


@dataclass(frozen=True)
class HilbFixedPoint:
    """Tuple of staircases at the toric points; empty parts are omitted."""

    parts: Tuple[Tuple[str, Staircase], ...]

    @property
    def length(self) -> int:
        return sum(len(E) for _, E in self.parts)

    def part(self, point: str) -> Staircase:
        for name, E in self.parts:
            if name == point:
                return E
        return Staircase()

    def as_dict(self) -> Dict[str, Staircase]:
        return dict(self.parts)

    @property
    def label(self) -> str:
        if not self.parts:
            return "empty"
        return " ".join(f"{name}:{E}" for name, E in self.parts)

    def __str__(self):
        return self.label

    @classmethod
    def from_parts(cls, S: ToricSurface, parts: Dict[str, Staircase]) -> "HilbFixedPoint":
        unknown = set(parts) - set(S.point_names)
        if unknown:
            raise KeyError(f"not fixed points of {S.name}: {sorted(unknown)}")
        return cls(tuple((p, parts[p]) for p in S.point_names if p in parts and len(parts[p])))

    @classmethod
    def parse(cls, S: ToricSurface, label: str) -> "HilbFixedPoint":
        parts = {}
        for tok in label.split():
            name, _, stair = tok.partition(":")
            parts[name] = Staircase.parse(stair)
        return cls.from_parts(S, parts)


def enumerate_fixed_points(S: ToricSurface, d: int) -> List[HilbFixedPoint]:
    """All tuples of staircases at the toric points with ``d`` cells in total."""
    if d < 0:
        raise ValueError("negative length")
    names = S.point_names
    out = []

    def rec(i: int, left: int, acc: List[Tuple[str, Staircase]]):
        if i == len(names) - 1:
            for E in enumerate_staircases(left):
                out.append(HilbFixedPoint(tuple(acc + ([(names[i], E)] if left else []))))
            return
        for s in range(left, -1, -1):
            for E in enumerate_staircases(s):
                rec(i + 1, left - s, acc + ([(names[i], E)] if s else []))

    rec(0, d, [])
    return out


@dataclass(frozen=True)
class TangentRep:
    weights: Tuple[Character, ...]

    def __len__(self):
        return len(self.weights)

    def count_proportional(self, chi) -> int:
        return sum(1 for w in self.weights if w.is_proportional(chi))


def tangent_representation(S: ToricSurface, P: HilbFixedPoint) -> TangentRep:
    ws: List[Character] = []
    for name, E in P.parts:
        pt = S.point(name)
        ws.extend(tangent_characters(E, pt.chi_x, pt.chi_y))
    return TangentRep(tuple(sorted(ws)))


def tangent_oracle(E: Staircase, chi_x, chi_y, bound: int = 8) -> List[Character]:
    """Characters of ``Hom(I, k[x,y]/I)`` computed by linear algebra.

    For each exponent shift ``w`` a homomorphism of weight ``w`` sends each
    minimal generator ``g`` to ``c_g * x^(g+w)`` (zero unless ``g + w`` is in
    ``E``); the only conditions come from the syzygies between consecutive
    generators, both sides landing on ``lcm + w``.
    """
    _check_chart(chi_x, chi_y)
    if len(E) > bound:
        raise ValueError(f"staircase with {len(E)} cells exceeds the oracle bound {bound}")
    if not len(E):
        raise ValueError("the empty staircase has no tangent space")
    gens = clefts(E)
    shifts = {(e[0] - g[0], e[1] - g[1]) for g in gens for e in E.cells}
    mult: Counter = Counter()
    for w in shifts:
        unknowns = [i for i, g in enumerate(gens) if (g[0] + w[0], g[1] + w[1]) in E.cells]
        col = {i: c for c, i in enumerate(unknowns)}
        rows = []
        for i in range(len(gens) - 1):
            g, h = gens[i], gens[i + 1]
            lcm = (max(g[0], h[0]), max(g[1], h[1]))
            if (lcm[0] + w[0], lcm[1] + w[1]) not in E.cells:
                continue
            r = [0] * len(unknowns)
            if i in col:
                r[col[i]] += 1
            if i + 1 in col:
                r[col[i + 1]] -= 1
            rows.append(r)
        dim = len(unknowns) - (rank(rows, len(unknowns)) if rows and unknowns else 0)
        if dim:
            chi = Character(w[0] * chi_x[0] + w[1] * chi_y[0], w[0] * chi_x[1] + w[1] * chi_y[1])
            mult[chi] += dim
    return sorted(mult.elements())


def euler_class(rep: TangentRep) -> Polynomial:
    """Top equivariant Chern class: the product of the tangent weights."""
    zero = [w for w in rep.weights if w.is_zero()]
    if zero:
        raise ValueError("tangent representation has a zero weight")
    return product_of_forms(rep.weights)


def generic_direction(weights: Iterable[Character]) -> Tuple[int, int]:
    """A one-parameter subgroup pairing nonzero with every given weight."""
    ws = list(weights)
    m = 1 + max((abs(w.a) for w in ws), default=0)
    return (1, m)


def betti_bb(S: ToricSurface, d: int, lam: Optional[Sequence[int]] = None) -> List[int]:
    """Betti numbers ``b_0, b_2, ..., b_{4d}`` of ``S^[d]`` by counting positive weights."""
    reps = [tangent_representation(S, P) for P in enumerate_fixed_points(S, d)]
    if lam is None:
        lam = generic_direction(w for r in reps for w in r.weights)
    counts = [0] * (2 * d + 1)
    for r in reps:
        k = 0
        for w in r.weights:
            v = w.pairing(lam)
            if v == 0:
                raise ValueError(f"direction {tuple(lam)} is not generic: it kills the weight {tuple(w)}")
            if v > 0:
                k += 1
        counts[k] += 1
    return counts
