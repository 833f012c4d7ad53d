"""Monomial ideals of ``k[x, y]`` of finite colength and their combinatorics.

A staircase is the set of exponents ``(a, b)`` of monomials ``x^a y^b`` that
are *not* in the ideal.  It is written in partition notation as the list of
column heights by x-degree, e.g. ``[2, 1]`` is ``{1, y, x}``, the staircase
of ``(x^2, xy, y^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .polynomial import Character, det2

Cell = Tuple[int, int]


class Staircase:
    """Finite order ideal of ``N^2``."""

    __slots__ = ("cells", "_heights")

    def __init__(self, cells: Iterable[Cell] = ()):
        cells = frozenset((int(a), int(b)) for a, b in cells)
        for a, b in cells:
            if a < 0 or b < 0:
                raise ValueError(f"cell {(a, b)} outside N^2")
            if (a > 0 and (a - 1, b) not in cells) or (b > 0 and (a, b - 1) not in cells):
                raise ValueError(f"not a staircase: {(a, b)} present without its divisors")
        self.cells: FrozenSet[Cell] = cells
        width = max((a for a, _ in cells), default=-1) + 1
        heights = [0] * width
        for a, _ in cells:
            heights[a] += 1
        self._heights = tuple(heights)

    @classmethod
    def from_partition(cls, heights: Sequence[int]) -> "Staircase":
        heights = [int(h) for h in heights if h]
        if any(heights[i] < heights[i + 1] for i in range(len(heights) - 1)):
            raise ValueError(f"column heights must be weakly decreasing: {heights}")
        return cls((a, b) for a, h in enumerate(heights) for b in range(h))

    @classmethod
    def parse(cls, text: str) -> "Staircase":
        body = text.strip().strip("[]").strip()
        if not body:
            return cls()
        return cls.from_partition([int(x) for x in body.split(",")])

    @property
    def heights(self) -> Tuple[int, ...]:
        """Column heights ``(h_0, h_1, ...)`` by x-degree."""
        return self._heights

    def row_lengths(self) -> Tuple[int, ...]:
        return self.transpose().heights

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return tuple(cell) in self.cells

    def __iter__(self):
        return iter(sorted(self.cells))

    def __eq__(self, other):
        return isinstance(other, Staircase) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __lt__(self, other):
        return (len(self), [-h for h in self.heights]) < (len(other), [-h for h in other.heights])

    def __str__(self):
        return "[" + ",".join(map(str, self.heights)) + "]"

    def __repr__(self):
        return f"Staircase({self})"

    def transpose(self) -> "Staircase":
        return Staircase((b, a) for a, b in self.cells)

    def fits_in_box(self, n: int) -> bool:
        return all(a < n and b < n for a, b in self.cells)


def _partitions(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_staircases(n: int) -> List[Staircase]:
    """All staircases with ``n`` cells, column-height partitions in decreasing lex order."""
    if n < 0:
        raise ValueError("negative colength")
    return [Staircase.from_partition(p) for p in _partitions(n, n)]


def clefts(E: Staircase) -> List[Cell]:
    """Minimal generators of the ideal, by increasing x-exponent."""
    h = E.heights
    if not h:
        return [(0, 0)]
    out = [(0, h[0])]
    for i in range(1, len(h)):
        if h[i] < h[i - 1]:
            out.append((i, h[i]))
    out.append((len(h), 0))
    return out


@dataclass(frozen=True)
class CleftCouple:
    cleft: Cell
    member: Cell
    axis: str  # "x" or "y"


def _x_cleft_couples(E: Staircase) -> List[Tuple[Cell, Cell]]:
    cs = clefts(E)
    out = []
    for k in range(len(cs) - 1):
        (ak, bk), (anext, _) = cs[k], cs[k + 1]
        shift = anext - ak
        for m in sorted(E.cells):
            # members below the cleft whose shift by x^(a_{k+1}-a_k) leaves the staircase
            if m[1] < bk and (m[0] + shift, m[1]) not in E.cells:
                out.append(((ak, bk), m))
    return out


def cleft_couples(E: Staircase) -> List[CleftCouple]:
    """x-cleft couples followed by y-cleft couples; ``2*len(E)`` of them."""
    if not len(E):
        raise ValueError("the empty staircase has no tangent space")
    xs = [CleftCouple(c, m, "x") for c, m in _x_cleft_couples(E)]
    ys = [CleftCouple((c[1], c[0]), (m[1], m[0]), "y") for c, m in _x_cleft_couples(E.transpose())]
    return xs + ys


def cell_character(cell: Cell, chi_x, chi_y) -> Character:
    a, b = cell
    return Character(a * chi_x[0] + b * chi_y[0], a * chi_x[1] + b * chi_y[1])


def _check_chart(chi_x, chi_y):
    if abs(det2(chi_x, chi_y)) != 1:
        raise ValueError(f"chart characters {tuple(chi_x)}, {tuple(chi_y)} are not a lattice basis")


def tangent_characters(E: Staircase, chi_x, chi_y) -> List[Character]:
    """Characters ``chi(member) - chi(cleft)`` of all cleft couples, sorted."""
    _check_chart(chi_x, chi_y)
    return sorted(cell_character(C.member, chi_x, chi_y) - cell_character(C.cleft, chi_x, chi_y)
                  for C in cleft_couples(E))


@dataclass(frozen=True)
class WeightedHilbertFunction:
    """Dimensions ``H_d`` of the degree-``d`` parts for ``deg x = a, deg y = b``."""

    weights: Tuple[int, int]
    values: Tuple[int, ...]

    def __post_init__(self):
        a, b = self.weights
        if a < 0 or b < 0 or (a, b) == (0, 0):
            raise ValueError(f"weights must lie in N^2 minus the origin: {(a, b)}")
        if gcd(a, b) != 1:
            raise ValueError(f"weights must be coprime: {(a, b)}")
        vals = list(self.values)
        while vals and vals[-1] == 0:
            vals.pop()
        if any(v < 0 for v in vals):
            raise ValueError("negative dimension")
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def make(cls, weights, values) -> "WeightedHilbertFunction":
        """Like the constructor, but divides the weights by their gcd first."""
        a, b = weights
        g = gcd(a, b) or 1
        return cls((a // g, b // g), tuple(values))

    def __getitem__(self, d: int) -> int:
        return self.values[d] if 0 <= d < len(self.values) else 0

    @property
    def total(self) -> int:
        return sum(self.values)

    def monomials_in_degree(self, d: int) -> List[Cell]:
        """Exponents ``(i, j)`` with ``a*i + b*j = d`` ordered by decreasing ``i``."""
        a, b = self.weights
        if a == 0 or b == 0:
            raise ValueError("graded pieces are infinite when a weight vanishes")
        return [(i, (d - a * i) // b) for i in range(d // a, -1, -1) if (d - a * i) % b == 0]

    def __str__(self):
        return "(" + ",".join(map(str, self.values)) + ")"


def weighted_hilbert_function(E: Staircase, a: int, b: int) -> WeightedHilbertFunction:
    if a < 0 or b < 0 or (a, b) == (0, 0):
        raise ValueError(f"weights must lie in N^2 minus the origin: {(a, b)}")
    g = gcd(a, b)
    a, b = a // g, b // g
    top = max((a * i + b * j for i, j in E.cells), default=-1)
    vals = [0] * (top + 1)
    for i, j in E.cells:
        vals[a * i + b * j] += 1
    return WeightedHilbertFunction((a, b), tuple(vals))


def enumerate_ideals_with_hilbert_function(H: WeightedHilbertFunction) -> List[Staircase]:
    a, b = H.weights
    return [E for E in enumerate_staircases(H.total) if weighted_hilbert_function(E, a, b) == H]


@dataclass(frozen=True)
class ReversePlanePartition:
    shape: Staircase
    entries: Dict[Cell, int] = field(hash=False)

    def __post_init__(self):
        if set(self.entries) != set(self.shape.cells):
            raise ValueError("entries must be indexed by the cells of the shape")
        for (a, b), n in self.entries.items():
            if n < 0:
                raise ValueError("entries must be nonnegative")
            for nb in ((a + 1, b), (a, b + 1)):
                if nb in self.entries and self.entries[nb] < n:
                    raise ValueError(f"not weakly increasing at {(a, b)} -> {nb}")

    def image(self) -> List[Cell]:
        return [(a + n, b - n) for (a, b), n in self.entries.items()]

    def is_zero(self) -> bool:
        return not any(self.entries.values())

    def __str__(self):
        rows = self.shape.row_lengths()
        return "\n".join(" ".join(str(self.entries[(a, b)]) for a in range(r)) for b, r in enumerate(rows))


def is_linkage_witness(I: Staircase, J: Staircase, rpp: ReversePlanePartition) -> bool:
    """Check ``E(I) = {(a + n, b - n)}`` bijectively for an RPP on ``E(J)``."""
    if rpp.shape != J:
        return False
    img = rpp.image()
    return all(b >= 0 for _, b in img) and len(set(img)) == len(img) and set(img) == set(I.cells)


def linkage(I: Staircase, J: Staircase) -> Optional[ReversePlanePartition]:
    """A reverse plane partition on ``E(J)`` linking ``I`` to ``J``, or ``None``.

    Cells move along anti-diagonals, so the search runs diagonal by diagonal;
    within a diagonal cells are taken by increasing x and candidate targets
    by increasing x.  The first witness in that order is returned.
    """
    if len(I) != len(J):
        raise ValueError(f"colengths differ: {len(I)} != {len(J)}")
    src: Dict[int, List[Cell]] = {}
    tgt: Dict[int, List[int]] = {}
    for a, b in J.cells:
        src.setdefault(a + b, []).append((a, b))
    for a, b in I.cells:
        tgt.setdefault(a + b, []).append(a)
    diags = sorted(set(src) | set(tgt))
    for s in diags:
        if len(src.get(s, ())) != len(tgt.get(s, ())):
            return None
    for s in diags:
        src[s].sort()
        tgt[s].sort()

    dead = set()
    values: Dict[Cell, int] = {}

    def assign(di: int) -> bool:
        if di == len(diags):
            return True
        s = diags[di]
        cells = src[s]
        lower = []
        for a, b in cells:
            lo = 0
            for nb in ((a - 1, b), (a, b - 1)):
                if nb in values:
                    lo = max(lo, values[nb])
            lower.append(a + lo)
        targets = tgt[s]
        used = [False] * len(targets)
        chosen: List[int] = []

        def place(i: int) -> bool:
            if i == len(cells):
                key = (s, tuple(chosen))
                if key in dead:
                    return False
                for c, t in zip(cells, chosen):
                    values[c] = t - c[0]
                if assign(di + 1):
                    return True
                for c in cells:
                    del values[c]
                dead.add(key)
                return False
            for ti, t in enumerate(targets):
                if not used[ti] and t >= lower[i]:
                    used[ti] = True
                    chosen.append(t)
                    if place(i + 1):
                        return True
                    chosen.pop()
                    used[ti] = False
            return False

        return place(0)

    if not assign(0):
        return None
    return ReversePlanePartition(J, dict(values))


def complement_in_box(I: Staircase, n: int) -> Staircase:
    """Staircase of ``{(a, b) : a, b < n, (n-1-a, n-1-b) not in E(I)}``."""
    if not I.fits_in_box(n):
        raise ValueError(f"{I} does not fit in the {n}x{n} box")
    return Staircase((a, b) for a in range(n) for b in range(n) if (n - 1 - a, n - 1 - b) not in I.cells)


def complement(I: Staircase) -> Staircase:
    """Complement ideal, with box size equal to the colength of ``I``."""
    return complement_in_box(I, len(I))


def incidence_necessary(I: Staircase, I_prime: Staircase, weights: Tuple[int, int] = (1, 1)) -> bool:
    """Necessary condition for the closure of the cell of ``I`` to meet the cell of ``I_prime``.

    ``False`` certifies that the two Schubert cells of the graded Hilbert
    scheme do not meet in that way.
    """
    if len(I) != len(I_prime):
        raise ValueError("the two ideals have different colengths")
    if weighted_hilbert_function(I, *weights) != weighted_hilbert_function(I_prime, *weights):
        raise ValueError("the two ideals have different Hilbert functions")
    if tuple(weights) != (1, 1):
        raise NotImplementedError("linkage is defined for the homogeneous grading only")
    if linkage(I, I_prime) is None:
        return False
    return linkage(complement(I), complement(I_prime)) is not None
