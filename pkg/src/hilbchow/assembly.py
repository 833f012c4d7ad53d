"""Equivariant Chow ring of ``S^[d]`` as an intersection over one-dimensional subtori.

For each codimension-one subtorus ``T'`` the fixed locus ``(S^[d])^{T'}`` is
a disjoint union of components, each a product of graded Hilbert schemes (at
the isolated points of ``S^{T'}``) and of products of projective spaces (on
the fixed toric lines).  The image of ``A_T^*`` of a component in
``R^{fixed points}`` is the tensor product of its factors' images; the image
for ``T'`` is the direct sum over components, and ``A_T^*(S^[d])`` is the
intersection of these images over all ``T'``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from .fixed_points import HilbFixedPoint, enumerate_fixed_points, tangent_representation
from .graded import GradedHilbModel, graded_hilbert_model, module_M
from .linalg import Echelon, kernel, rref
from .module import GradedSubmodule, GradedVector
from .polynomial import Character, Polynomial
from .staircase import Staircase, weighted_hilbert_function
from .toric import Subtorus, ToricSurface, build_surface, fixed_locus


# --- factors -----------------------------------------------------------

@dataclass(frozen=True)
class PointFactor:
    """Graded Hilbert scheme at an isolated point of ``S^{T'}``.

    ``model`` is ``None`` when the two local weights have opposite signs; the
    factor is then the single point ``rigid``.
    """

    point: str
    chart: Tuple[Character, Character]
    model: Optional[GradedHilbModel]
    rigid: Optional[Staircase] = None

    @property
    def states(self) -> Tuple[Staircase, ...]:
        return (self.rigid,) if self.model is None else self.model.fixed_points

    def parts(self, state: Staircase) -> Dict[str, Staircase]:
        return {self.point: state}

    def module(self, bound: int) -> GradedSubmodule:
        if self.model is None or len(self.states) == 1:
            return GradedSubmodule.free(self.states, bound)
        return _cached_module_M(self.model, self.chart, bound)

    def describe(self) -> str:
        if self.model is None:
            return f"{self.point}: point {self.rigid}"
        return f"{self.point}: {self.model}"


@lru_cache(maxsize=None)
def _cached_module_M(model, chart, bound):
    return module_M(model, chart, bound)


@dataclass(frozen=True)
class LineFactor:
    """Subschemes of a fixed toric line, a product of ``P^m`` over strand lengths.

    A strand of length ``l`` is a horizontal scheme meeting the line in one
    point and of length ``l`` transversally.  ``lengths`` lists the pairs
    ``(l, m_l)``; a state records, for each length, how many of its strands
    sit at the start endpoint.
    """

    line: str
    start: str
    end: str
    direction: Character
    lengths: Tuple[Tuple[int, int], ...]

    @property
    def states(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(itertools.product(*[range(m + 1) for _, m in self.lengths]))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.lengths)

    def parts(self, state: Sequence[int]) -> Dict[str, Staircase]:
        at_start, at_end = [], []
        for (l, m), k in zip(self.lengths, state):
            at_start += [l] * k
            at_end += [l] * (m - k)
        start = Staircase.from_partition(sorted(at_start, reverse=True))
        end = Staircase.from_partition(sorted(at_end, reverse=True)).transpose()
        return {self.start: start, self.end: end}

    def generators(self) -> List[GradedVector]:
        """Tensor products of the ``P^m`` generators ``(w_j^k)_j``, ``w_j = j*direction``."""
        per_length = []
        for _, m in self.lengths:
            per_length.append([[Character(*(j * self.direction)).linear_form() ** k for j in range(m + 1)]
                               for k in range(m + 1)])
        out = []
        for choice in itertools.product(*[range(len(g)) for g in per_length]):
            entries = {}
            for state in self.states:
                val = Polynomial.constant(1)
                for gi, (gens, k) in enumerate(zip(per_length, choice)):
                    val = val * gens[k][state[gi]]
                entries[state] = val
            out.append(GradedVector(entries, sum(choice)))
        return out

    def module(self, bound: int) -> GradedSubmodule:
        return module_N(self, bound)

    def describe(self) -> str:
        ps = " x ".join(f"P{m}" for _, m in self.lengths) or "point"
        return f"{self.line}: {ps} (strand lengths {dict(self.lengths)})"


def module_N(factor: LineFactor, degree_bound: int) -> GradedSubmodule:
    return GradedSubmodule.generated_by(factor.generators(), factor.states, degree_bound)


Factor = object


@dataclass
class ComponentModel:
    """One irreducible component of ``(S^[d])^{T'}``."""

    subtorus: Subtorus
    key: Tuple
    factors: List[Factor]
    fixed_point_map: Dict[Tuple, str] = field(default_factory=dict)

    @property
    def points(self) -> List[str]:
        return list(self.fixed_point_map.values())

    def factor_shapes(self, bound: int) -> List[str]:
        """Each non-trivial factor as ``P<n>`` when its Betti numbers are those of ``P^n``."""
        out = []
        for f in self.factors:
            if isinstance(f, LineFactor):
                out += [f"P{m}" for _, m in f.lengths if m]
            elif len(f.states) > 1:
                betti = f.module(bound).quotient_betti()
                top = max(i for i, b in enumerate(betti) if b)
                out.append(f"P{top}" if betti[:top + 1] == [1] * (top + 1) else str(f.model))
        return out

    def dimension(self, bound: int) -> int:
        dim = 0
        for f in self.factors:
            if isinstance(f, LineFactor):
                dim += f.dimension
            elif len(f.states) > 1:
                betti = f.module(bound).quotient_betti()
                dim += max(i for i, b in enumerate(betti) if b)
        return dim


def _point_key(T: Subtorus, pt, E: Staircase):
    a, b = T.weight(pt.chi_x), T.weight(pt.chi_y)
    if a * b < 0:
        return ("rigid", pt.name, E)
    if a < 0:
        a, b = -a, -b
    return ("graded", pt.name, weighted_hilbert_function(E, a, b))


def _strands(S: ToricSurface, line, P: HilbFixedPoint) -> List[int]:
    return list(P.part(line.start).heights) + list(P.part(line.end).row_lengths())


def _line_hilbert(strands: Sequence[int]) -> Tuple[int, ...]:
    top = max(strands, default=0)
    return tuple(sum(1 for s in strands if s > k) for k in range(top))


def component_key(S: ToricSurface, T: Subtorus, P: HilbFixedPoint) -> Tuple:
    loc = fixed_locus(S, T)
    key = [_point_key(T, S.point(w), P.part(w)) for w in loc.isolated_points]
    for name in loc.fixed_lines:
        ln = S.line(name)
        key.append(("line", name, _line_hilbert(_strands(S, ln, P))))
    return tuple(key)


def _factors_from_key(S: ToricSurface, T: Subtorus, key) -> List[Factor]:
    out = []
    for entry in key:
        kind, name, data = entry
        if kind == "rigid":
            pt = S.point(name)
            out.append(PointFactor(name, (pt.chi_x, pt.chi_y), None, data))
        elif kind == "graded":
            pt = S.point(name)
            out.append(PointFactor(name, (pt.chi_x, pt.chi_y), graded_hilbert_model(data)))
        else:
            ln = S.line(name)
            H = list(data) + [0]
            lengths = tuple((l, H[l - 1] - H[l]) for l in range(1, len(H)) if H[l - 1] - H[l])
            out.append(LineFactor(name, ln.start, ln.end, ln.direction_start, lengths))
    return out


def component_decomposition(S: ToricSurface, d: int, T: Subtorus,
                            points: Optional[Sequence[HilbFixedPoint]] = None) -> List[ComponentModel]:
    """Components of ``(S^[d])^{T'}`` grouped by Hilbert-function key, in fixed-point order."""
    T = T if isinstance(T, Subtorus) else Subtorus(Character(*T))
    points = list(points) if points is not None else enumerate_fixed_points(S, d)
    groups: Dict[Tuple, List[HilbFixedPoint]] = {}
    for P in points:
        groups.setdefault(component_key(S, T, P), []).append(P)
    comps = []
    for key, members in groups.items():
        factors = _factors_from_key(S, T, key)
        labels = {P: P.label for P in members}
        fmap: Dict[Tuple, str] = {}
        for states in itertools.product(*[f.states for f in factors]):
            parts: Dict[str, Staircase] = {}
            for f, s in zip(factors, states):
                parts.update(f.parts(s))
            P = HilbFixedPoint.from_parts(S, parts)
            if P not in labels:
                raise AssertionError(f"factor state {states} of component {key} gives {P}, outside the component")
            fmap[states] = labels[P]
        if sorted(fmap.values()) != sorted(labels.values()):
            raise AssertionError(f"component {key}: factor fixed points do not biject onto the group")
        comps.append(ComponentModel(T, key, factors, fmap))
    return comps


def kunneth_tensor(factor_modules: Sequence[GradedSubmodule], fixed_point_map: Dict[Tuple, Hashable],
                   points: Sequence[Hashable], degree_bound: int) -> GradedSubmodule:
    """Span of entrywise products of factor generators, re-indexed into ``R^points``."""
    gens_per = [M.minimal_generators() for M in factor_modules]
    expected = set(itertools.product(*[M.points for M in factor_modules]))
    if set(fixed_point_map) != expected:
        raise ValueError("fixed-point map is not a bijection from the product of factor fixed points")
    return GradedSubmodule.generated_by(_product_generators(gens_per, fixed_point_map, degree_bound),
                                        points, degree_bound)


def _product_generators(gens_per, fixed_point_map, degree_bound: int) -> List[GradedVector]:
    out = []
    for combo in itertools.product(*gens_per):
        deg = sum(g.degree for g in combo)
        if deg > degree_bound:
            continue
        entries = {}
        for states, target in fixed_point_map.items():
            val = Polynomial.constant(1)
            for g, s in zip(combo, states):
                val = val * g[s]
                if val.is_zero():
                    break
            entries[target] = val
        out.append(GradedVector(entries, deg))
    return out


def component_generators(comp: ComponentModel, degree_bound: int) -> List[GradedVector]:
    gens_per = [f.module(degree_bound).minimal_generators() for f in comp.factors]
    return _product_generators(gens_per, comp.fixed_point_map, degree_bound)


def relevant_subtori(S: ToricSurface, d: int) -> List[Subtorus]:
    """Subtori ``ker(chi)`` with ``chi`` proportional to some tangent weight."""
    dirs = set()
    for P in enumerate_fixed_points(S, d):
        for w in tangent_representation(S, P).weights:
            dirs.add(w.primitive())
    return [Subtorus(c) for c in sorted(dirs)]


def image_subtorus(S: ToricSurface, d: int, T: Subtorus, degree_bound: int,
                   points: Optional[Sequence[HilbFixedPoint]] = None) -> GradedSubmodule:
    """Image of ``A_T^*((S^[d])^{T'})`` in ``R^{fixed points}``."""
    T = T if isinstance(T, Subtorus) else Subtorus(Character(*T))
    points = list(points) if points is not None else enumerate_fixed_points(S, d)
    labels = [P.label for P in points]
    gens = []
    for comp in component_decomposition(S, d, T, points):
        gens.extend(component_generators(comp, degree_bound))
    return GradedSubmodule.generated_by(gens, labels, degree_bound)


def _image_job(args):
    rays, d, chi, bound = args
    return image_subtorus(ToricSurface(rays), d, Subtorus(Character(*chi)), bound)


def equivariant_chow(S: ToricSurface, d: int, degree_bound: Optional[int] = None,
                     jobs: int = 1) -> GradedSubmodule:
    """``i_T^* A_T^*(S^[d])`` inside ``R^{fixed points}``, up to ``degree_bound`` (default ``2d``)."""
    bound = 2 * d if degree_bound is None else degree_bound
    points = enumerate_fixed_points(S, d)
    labels = [P.label for P in points]
    subtori = relevant_subtori(S, d)
    if jobs > 1 and len(subtori) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            images = list(ex.map(_image_job, [(S.rays, d, tuple(T.chi), bound) for T in subtori]))
        images = [GradedSubmodule(labels, bound, M.pieces) for M in images]
    else:
        images = [image_subtorus(S, d, T, bound, points) for T in subtori]
    if not images:
        return GradedSubmodule.free(labels, bound)
    return _intersect_images(images)


def _intersect_images(images: Sequence[GradedSubmodule]) -> GradedSubmodule:
    first = images[0]
    pieces = []
    for k in range(first.degree_bound + 1):
        n = first.ambient_dim(k)
        constraints = Echelon(n)
        for M in images:
            constraints.extend(kernel(M.pieces[k], n))
        pieces.append(rref(kernel(constraints.rows, n), n)[0])
    return GradedSubmodule(first.points, first.degree_bound, pieces)


def classical_betti(S: ToricSurface, d: int, degree_bound: Optional[int] = None, jobs: int = 1) -> List[int]:
    """Dimensions of ``A^k(S^[d])`` from the quotient of the equivariant ring."""
    return equivariant_chow(S, d, degree_bound, jobs).quotient_betti()
