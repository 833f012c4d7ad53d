"""Exact linear algebra over ``Q`` on dense row vectors.

Rows are lists of ``int``/``Fraction``.  Elimination runs on integer rows
(each row scaled to primitive integers, cross-multiplication instead of
division) and only the final normalisation to reduced row-echelon form
introduces fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .polynomial import normalize_rational

Row = List


def _integral(row: Sequence) -> List[int]:
    den = 1
    for c in row:
        if isinstance(c, Fraction) and c.denominator != 1:
            den = den * c.denominator // gcd(den, c.denominator)
    if den == 1:
        return [int(c) for c in row]
    return [int(c * den) for c in row]


def _primitive(row: List[int]) -> List[int]:
    g = 0
    for c in row:
        if c:
            g = gcd(g, c)
            if g == 1:
                return row
    if g <= 1:
        return row
    return [c // g for c in row]


class Echelon:
    """Integer row-echelon basis of a subspace of ``Q^n``, kept incrementally.

    Rows are primitive integer vectors; ``pivots[i]`` is the first nonzero
    column of ``rows[i]`` and pivot columns are strictly increasing.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: List[List[int]] = []
        self.pivots: List[int] = []

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence) -> List[int]:
        """Reduce ``row`` against the basis; zero result means membership."""
        v = _integral(row)
        if len(v) != self.ncols:
            raise ValueError(f"row of length {len(v)} in a space of dimension {self.ncols}")
        for piv, r in zip(self.pivots, self.rows):
            c = v[piv]
            if c:
                p = r[piv]
                g = gcd(p, c)
                mp, mc = p // g, c // g
                if mp < 0:
                    mp, mc = -mp, -mc
                v = [mp * x - mc * y for x, y in zip(v, r)]
                v = _primitive(v)
        return v

    def contains(self, row: Sequence) -> bool:
        return not any(self.reduce(row))

    def add(self, row: Sequence) -> bool:
        """Insert ``row``; return ``True`` if the rank grew."""
        v = self.reduce(row)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        if v[piv] < 0:
            v = [-c for c in v]
        v = _primitive(v)
        k = 0
        while k < len(self.pivots) and self.pivots[k] < piv:
            k += 1
        self.rows.insert(k, v)
        self.pivots.insert(k, piv)
        return True

    def extend(self, rows) -> "Echelon":
        for r in rows:
            if len(self.rows) == self.ncols:
                break
            self.add(r)
        return self

    def rref(self) -> List[Row]:
        """Canonical reduced row-echelon basis with rational entries."""
        rows = [list(r) for r in self.rows]
        piv = self.pivots
        for i in range(len(rows) - 1, -1, -1):
            for j in range(i):
                c = rows[j][piv[i]]
                if c:
                    p = rows[i][piv[i]]
                    g = gcd(p, c)
                    mp, mc = p // g, c // g
                    if mp < 0:
                        mp, mc = -mp, -mc
                    rows[j] = _primitive([mp * x - mc * y for x, y in zip(rows[j], rows[i])])
        out = []
        for i, r in enumerate(rows):
            p = r[piv[i]]
            out.append([normalize_rational(Fraction(c, p)) if c else 0 for c in r])
        return out


def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[List[Row], List[int]]:
    """Reduced row-echelon form of the span of ``rows`` and its pivot columns."""
    e = Echelon(ncols).extend(rows)
    return e.rref(), list(e.pivots)


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return Echelon(ncols).extend(rows).rank


def kernel(rows: Sequence[Sequence], ncols: int) -> List[Row]:
    """Basis of ``{x : r . x = 0 for every row r}``."""
    red, piv = rref(rows, ncols)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v: List = [0] * ncols
        v[f] = 1
        for r, p in zip(red, piv):
            if r[f]:
                v[p] = -r[f]
        basis.append(v)
    return basis


def intersect(spans: Sequence[Sequence[Sequence]], ncols: int) -> List[Row]:
    """Basis (reduced echelon) of the intersection of several row spans."""
    constraints = Echelon(ncols)
    for span in spans:
        constraints.extend(kernel(span, ncols))
    return rref(kernel(constraints.rows, ncols), ncols)[0]


def format_rational(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"
