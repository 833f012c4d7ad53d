"""Graded submodules of ``R^F`` handled degree by degree.

``R = Q[t1, t2]`` and ``F`` is a finite ordered list of fixed-point ids.  The
degree-``k`` piece of ``R^F`` has coordinates ``(f, j)`` for ``f`` in ``F``
and the monomial ``t1^(k-j) t2^j``; the flat index is ``f*(k+1) + j``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Sequence

from .linalg import Echelon, format_rational, intersect, kernel
from .polynomial import Polynomial, normalize_rational


class GradedVector:
    """Homogeneous element of ``R^F``; zero entries are not stored."""

    __slots__ = ("entries", "degree")

    def __init__(self, entries: Mapping[Hashable, Polynomial], degree: int):
        clean = {}
        for p, f in entries.items():
            if not isinstance(f, Polynomial):
                f = Polynomial.constant(f)
            if f.is_zero():
                continue
            if not f.is_homogeneous(degree):
                raise ValueError(f"entry at {p!r} is not homogeneous of degree {degree}: {f}")
            clean[p] = f
        if degree < 0:
            raise ValueError("negative degree")
        self.entries: Dict[Hashable, Polynomial] = clean
        self.degree = degree

    @classmethod
    def constant(cls, points: Iterable[Hashable], value=1) -> "GradedVector":
        return cls({p: Polynomial.constant(value) for p in points}, 0)

    @classmethod
    def from_row(cls, points: Sequence[Hashable], k: int, row: Sequence) -> "GradedVector":
        n = k + 1
        entries = {}
        for i, p in enumerate(points):
            chunk = row[i * n:(i + 1) * n]
            if any(chunk):
                entries[p] = Polynomial.from_coefficients(k, chunk)
        return cls(entries, k)

    def __getitem__(self, p) -> Polynomial:
        return self.entries.get(p, Polynomial())

    def row(self, points: Sequence[Hashable]) -> list:
        unknown = set(self.entries) - set(points)
        if unknown:
            raise KeyError(f"entries outside the index set: {sorted(map(str, unknown))}")
        out = []
        for p in points:
            f = self.entries.get(p)
            out.extend(f.coefficients_in_degree(self.degree) if f is not None else [0] * (self.degree + 1))
        return out

    def __mul__(self, other):
        if isinstance(other, GradedVector):
            keys = set(self.entries) & set(other.entries)
            return GradedVector({p: self.entries[p] * other.entries[p] for p in keys},
                                self.degree + other.degree)
        if isinstance(other, Polynomial):
            if not other.is_homogeneous():
                raise ValueError("scalar must be homogeneous")
            d = max(other.degree(), 0)
            return GradedVector({p: f * other for p, f in self.entries.items()}, self.degree + d)
        return GradedVector({p: f.scale(other) for p, f in self.entries.items()}, self.degree)

    __rmul__ = __mul__

    def __add__(self, other: "GradedVector"):
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        keys = set(self.entries) | set(other.entries)
        return GradedVector({p: self[p] + other[p] for p in keys}, self.degree)

    def __sub__(self, other: "GradedVector"):
        return self + other * -1

    def __eq__(self, other):
        return isinstance(other, GradedVector) and self.degree == other.degree and self.entries == other.entries

    def __hash__(self):
        return hash((self.degree, frozenset(self.entries.items())))

    def relabel(self, mapping: Mapping[Hashable, Hashable]) -> "GradedVector":
        return GradedVector({mapping[p]: f for p, f in self.entries.items()}, self.degree)

    def __repr__(self):
        inner = ", ".join(f"{p}: {f}" for p, f in self.entries.items())
        return f"GradedVector(deg={self.degree}, {{{inner}}})"


def _times_t(row: Sequence, k: int, nF: int, var: int) -> list:
    """Multiply a degree-``k`` coordinate row by ``t1`` (var 0) or ``t2`` (var 1)."""
    n, m = k + 1, k + 2
    out = [0] * (nF * m)
    for f in range(nF):
        base_in, base_out = f * n, f * m + var
        for j in range(n):
            c = row[base_in + j]
            if c:
                out[base_out + j] = c
    return out


def _monomial_multiples(vec_row: Sequence, e: int, k: int, nF: int) -> List[list]:
    """All ``t1^(k-e-s) t2^s * v`` for a degree-``e`` row ``v``."""
    out = []
    shift = k - e
    n, m = e + 1, k + 1
    for s in range(shift + 1):
        r = [0] * (nF * m)
        for f in range(nF):
            for j in range(n):
                c = vec_row[f * n + j]
                if c:
                    r[f * m + j + s] = c
        out.append(r)
    return out


def span_piece(generators: Sequence[GradedVector], k: int, points: Sequence[Hashable]) -> List[list]:
    """Reduced basis of the degree-``k`` part of the R-span of ``generators``."""
    nF = len(points)
    ech = Echelon(nF * (k + 1))
    for g in generators:
        if g.degree <= k:
            ech.extend(_monomial_multiples(g.row(points), g.degree, k, nF))
    return ech.rref()


class GradedSubmodule:
    """Graded R-submodule of ``R^F`` known in degrees ``0..degree_bound``.

    ``pieces[k]`` is the canonical reduced row-echelon basis of the degree-k
    piece.  Two submodules with the same index set and bound are equal iff
    their pieces are equal as lists.
    """

    def __init__(self, points: Sequence[Hashable], degree_bound: int, pieces: Sequence[Sequence[Sequence]]):
        self.points = tuple(points)
        self.degree_bound = degree_bound
        if len(pieces) != degree_bound + 1:
            raise ValueError("one piece per degree 0..degree_bound is required")
        self.pieces = [[list(map(normalize_rational, r)) for r in pc] for pc in pieces]
        self._echelons: Dict[int, Echelon] = {}

    # --- construction -------------------------------------------------
    @classmethod
    def generated_by(cls, generators: Iterable[GradedVector], points: Sequence[Hashable],
                     degree_bound: int) -> "GradedSubmodule":
        points = tuple(points)
        nF = len(points)
        by_degree: Dict[int, List[GradedVector]] = {}
        for g in generators:
            if g.degree <= degree_bound and g.entries:
                by_degree.setdefault(g.degree, []).append(g)
        pieces = []
        prev: List[list] = []
        for k in range(degree_bound + 1):
            ech = Echelon(nF * (k + 1))
            if k > 0:
                for r in prev:
                    ech.add(_times_t(r, k - 1, nF, 0))
                for r in prev:
                    ech.add(_times_t(r, k - 1, nF, 1))
            for g in by_degree.get(k, []):
                ech.add(g.row(points))
            prev = [list(r) for r in ech.rows]
            pieces.append(ech.rref())
        return cls(points, degree_bound, pieces)

    @classmethod
    def free(cls, points: Sequence[Hashable], degree_bound: int) -> "GradedSubmodule":
        """The whole of ``R^F``."""
        nF = len(points)
        pieces = []
        for k in range(degree_bound + 1):
            n = nF * (k + 1)
            pieces.append([[1 if i == j else 0 for i in range(n)] for j in range(n)])
        return cls(points, degree_bound, pieces)

    @classmethod
    def zero(cls, points: Sequence[Hashable], degree_bound: int) -> "GradedSubmodule":
        return cls(points, degree_bound, [[] for _ in range(degree_bound + 1)])

    # --- queries ------------------------------------------------------
    def ambient_dim(self, k: int) -> int:
        return len(self.points) * (k + 1)

    def dims(self) -> List[int]:
        return [len(p) for p in self.pieces]

    def echelon(self, k: int) -> Echelon:
        if k not in self._echelons:
            self._echelons[k] = Echelon(self.ambient_dim(k)).extend(self.pieces[k])
        return self._echelons[k]

    def contains(self, v: GradedVector) -> bool:
        if v.degree > self.degree_bound:
            raise ValueError(f"degree {v.degree} exceeds the bound {self.degree_bound}")
        return self.echelon(v.degree).contains(v.row(self.points))

    def basis(self, k: int) -> List[GradedVector]:
        return [GradedVector.from_row(self.points, k, r) for r in self.pieces[k]]

    def _check_compatible(self, other: "GradedSubmodule"):
        if self.points != other.points:
            raise ValueError("submodules live over different fixed-point index sets")
        if self.degree_bound != other.degree_bound:
            raise ValueError("submodules have different degree bounds")

    def __eq__(self, other):
        if not isinstance(other, GradedSubmodule):
            return NotImplemented
        self._check_compatible(other)
        return self.pieces == other.pieces

    def is_submodule_of(self, other: "GradedSubmodule") -> bool:
        self._check_compatible(other)
        return all(other.echelon(k).contains(r) for k in range(self.degree_bound + 1) for r in self.pieces[k])

    def intersection(self, *others: "GradedSubmodule") -> "GradedSubmodule":
        for o in others:
            self._check_compatible(o)
        pieces = []
        for k in range(self.degree_bound + 1):
            spans = [self.pieces[k]] + [o.pieces[k] for o in others]
            pieces.append(intersect(spans, self.ambient_dim(k)))
        return GradedSubmodule(self.points, self.degree_bound, pieces)

    def shifted_piece(self, k: int) -> Echelon:
        """Span of ``t1*M_(k-1) + t2*M_(k-1)`` inside degree ``k``."""
        nF = len(self.points)
        ech = Echelon(self.ambient_dim(k))
        if k > 0:
            for r in self.pieces[k - 1]:
                ech.add(_times_t(r, k - 1, nF, 0))
                ech.add(_times_t(r, k - 1, nF, 1))
        return ech

    def closure_violations(self) -> List[int]:
        """Degrees ``k < bound`` where ``t1*M_k`` or ``t2*M_k`` leaves ``M_(k+1)``."""
        nF = len(self.points)
        bad = []
        for k in range(self.degree_bound):
            target = self.echelon(k + 1)
            for r in self.pieces[k]:
                if not (target.contains(_times_t(r, k, nF, 0)) and target.contains(_times_t(r, k, nF, 1))):
                    bad.append(k)
                    break
        return bad

    def quotient_betti(self) -> List[int]:
        """``dim M_k / (t1 M_(k-1) + t2 M_(k-1))`` for ``k = 0..bound``."""
        bad = self.closure_violations()
        if bad:
            raise ValueError(f"not closed under multiplication by t1, t2 in degrees {bad}")
        return [len(self.pieces[k]) - self.shifted_piece(k).rank for k in range(self.degree_bound + 1)]

    def minimal_generators(self) -> List[GradedVector]:
        """Homogeneous generators lifting a basis of each ``M_k / R^+ M``."""
        gens = []
        for k in range(self.degree_bound + 1):
            ech = self.shifted_piece(k)
            for r in self.pieces[k]:
                if ech.add(r):
                    gens.append(GradedVector.from_row(self.points, k, r))
        return gens

    def restrict_points(self, points: Sequence[Hashable]) -> "GradedSubmodule":
        """Re-index into a larger (or reordered) index set, zero outside the old one."""
        pos = {p: i for i, p in enumerate(self.points)}
        missing = [p for p in self.points if p not in set(points)]
        if missing:
            raise ValueError("new index set must contain the old one")
        pieces = []
        for k in range(self.degree_bound + 1):
            n = k + 1
            rows = []
            for r in self.pieces[k]:
                out = []
                for p in points:
                    if p in pos:
                        i = pos[p]
                        out.extend(r[i * n:(i + 1) * n])
                    else:
                        out.extend([0] * n)
                rows.append(out)
            pieces.append(Echelon(len(points) * n).extend(rows).rref())
        return GradedSubmodule(points, self.degree_bound, pieces)

    def to_json(self) -> dict:
        return {
            "fixed_points": [str(p) for p in self.points],
            "degree_bound": self.degree_bound,
            "pieces": [[[format_rational(c) for c in r] for r in pc] for pc in self.pieces],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "GradedSubmodule":
        pieces = [[[Fraction(c) for c in r] for r in pc] for pc in doc["pieces"]]
        return cls(doc["fixed_points"], doc["degree_bound"], pieces)

    def __repr__(self):
        return f"GradedSubmodule(|F|={len(self.points)}, dims={self.dims()})"


def piece_membership(v: GradedVector, M: GradedSubmodule) -> bool:
    return M.contains(v)


def piece_intersection(modules: Sequence[GradedSubmodule]) -> GradedSubmodule:
    if not modules:
        raise ValueError("empty intersection")
    return modules[0].intersection(*modules[1:])


def piece_equal(M: GradedSubmodule, N: GradedSubmodule) -> bool:
    return M == N


def quotient_betti(M: GradedSubmodule) -> List[int]:
    return M.quotient_betti()


def annihilator_rows(M: GradedSubmodule, k: int) -> List[list]:
    """Linear functionals vanishing exactly on ``M_k``."""
    return kernel(M.pieces[k], M.ambient_dim(k))


def dumps_pieces(M: GradedSubmodule) -> str:
    return json.dumps(M.to_json(), sort_keys=True)
