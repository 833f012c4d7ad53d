"""Characters of the two-dimensional torus and polynomials in ``Q[t1, t2]``.

A character ``(a, b)`` is the map ``(t1, t2) -> t1^a t2^b``.  Through the
identification of ``A_T^*(pt)`` with the symmetric algebra of the character
lattice it becomes the linear form ``a*t1 + b*t2``, which is how characters
enter every polynomial computation in this package.

Coefficients are exact: ``int`` when integral, ``fractions.Fraction``
otherwise.  Keeping integral coefficients as plain ``int`` is deliberate; the
localisation formulas multiply large integer polynomials and ``Fraction``
arithmetic is an order of magnitude slower.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

Rational = Union[int, Fraction]
Exponent = Tuple[int, int]


def normalize_rational(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def to_rational(c) -> Rational:
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return normalize_rational(c)
    if isinstance(c, str):
        return normalize_rational(Fraction(c))
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class Character(tuple):
    """Integer character ``(a, b)`` of ``T = (k^*)^2``."""

    __slots__ = ()

    def __new__(cls, a: int, b: int):
        return super().__new__(cls, (int(a), int(b)))

    @property
    def a(self) -> int:
        return self[0]

    @property
    def b(self) -> int:
        return self[1]

    def __add__(self, other):
        return Character(self[0] + other[0], self[1] + other[1])

    def __sub__(self, other):
        return Character(self[0] - other[0], self[1] - other[1])

    def __neg__(self):
        return Character(-self[0], -self[1])

    def __mul__(self, k: int):
        return Character(k * self[0], k * self[1])

    __rmul__ = __mul__

    def __repr__(self):
        return f"Character({self[0]}, {self[1]})"

    def is_zero(self) -> bool:
        return self[0] == 0 and self[1] == 0

    def pairing(self, lam) -> int:
        """Value of the character on the one-parameter subgroup ``lam``."""
        return self[0] * lam[0] + self[1] * lam[1]

    def primitive(self) -> "Character":
        """Primitive vector on the same line, first nonzero coordinate positive."""
        if self.is_zero():
            raise ValueError("the zero character has no primitive direction")
        g = gcd(abs(self[0]), abs(self[1]))
        a, b = self[0] // g, self[1] // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return Character(a, b)

    def is_primitive(self) -> bool:
        """True when the coordinates are coprime; the sign is not constrained."""
        return gcd(abs(self[0]), abs(self[1])) == 1

    def is_proportional(self, other) -> bool:
        """True when both are nonzero and lie on the same line through 0."""
        if self.is_zero() or Character(*other).is_zero():
            return False
        return self[0] * other[1] - self[1] * other[0] == 0

    def linear_form(self) -> "Polynomial":
        return Polynomial({(1, 0): self[0], (0, 1): self[1]})


def det2(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def complete_basis(ell) -> Tuple[Character, Character]:
    """Return ``(ell, v)`` with ``det(ell, v) = 1``; ``ell`` must be primitive."""
    a, b = ell
    # extended Euclid on (a, b): find (c, d) with a*d - b*c = 1
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    # old_s*a + old_t*b = old_r = +-1
    if abs(old_r) != 1:
        raise ValueError(f"{tuple(ell)} is not primitive")
    d, c = old_s * old_r, -old_t * old_r
    assert a * d - b * c == 1
    return Character(a, b), Character(c, d)


class Polynomial:
    """Sparse polynomial in ``t1, t2`` with exact rational coefficients.

    ``terms`` maps exponent pairs ``(i, j)`` (for ``t1^i t2^j``) to nonzero
    coefficients.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Rational] | None = None):
        clean: Dict[Exponent, Rational] = {}
        if terms:
            for (i, j), c in terms.items():
                c = to_rational(c)
                if c != 0:
                    if i < 0 or j < 0:
                        raise ValueError("negative exponent")
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Rational]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Rational) -> "Polynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Rational = 1) -> "Polynomial":
        return cls({(i, j): c})

    @property
    def terms(self) -> Dict[Exponent, Rational]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Rational]]:
        return iter(self._terms.items())

    def coefficient(self, i: int, j: int) -> Rational:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-1)

    def is_homogeneous(self, k: int | None = None) -> bool:
        degs = {i + j for i, j in self._terms}
        if not degs:
            return True
        return len(degs) == 1 and (k is None or degs == {k})

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, Character):
            return other.linear_form()
        return Polynomial.constant(to_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = normalize_rational(s)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict[Exponent, Rational] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw({e: normalize_rational(c) for e, c in out.items() if c != 0})

    __rmul__ = __mul__

    def scale(self, c: Rational) -> "Polynomial":
        c = to_rational(c)
        if c == 0:
            return Polynomial()
        return Polynomial._raw({e: normalize_rational(v * c) for e, v in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute(self, x1: "Polynomial", x2: "Polynomial") -> "Polynomial":
        """Replace ``t1`` by ``x1`` and ``t2`` by ``x2``."""
        out = Polynomial()
        pw1: Dict[int, Polynomial] = {}
        pw2: Dict[int, Polynomial] = {}
        for (i, j), c in self._terms.items():
            if i not in pw1:
                pw1[i] = x1 ** i
            if j not in pw2:
                pw2[j] = x2 ** j
            out = out + (pw1[i] * pw2[j]).scale(c)
        return out

    def evaluate(self, v1: Rational, v2: Rational) -> Rational:
        return normalize_rational(sum(c * v1 ** i * v2 ** j for (i, j), c in self._terms.items()))

    def homogeneous_part(self, k: int) -> "Polynomial":
        return Polynomial._raw({e: c for e, c in self._terms.items() if e[0] + e[1] == k})

    def coefficients_in_degree(self, k: int) -> list:
        """Coefficients of ``t1^k, t1^(k-1) t2, ..., t2^k``."""
        return [self._terms.get((k - j, j), 0) for j in range(k + 1)]

    @classmethod
    def from_coefficients(cls, k: int, coeffs: Iterable[Rational]) -> "Polynomial":
        return cls({(k - j, j): c for j, c in enumerate(coeffs)})

    def sorted_terms(self):
        """Terms in graded lexicographic order with ``t1 > t2``."""
        return sorted(self._terms.items(), key=lambda ec: (-(ec[0][0] + ec[0][1]), -ec[0][0]))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in self.sorted_terms():
            factors = []
            if i:
                factors.append("t1" if i == 1 else f"t1^{i}")
            if j:
                factors.append("t2" if j == 1 else f"t2^{j}")
            mag = abs(c)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    _TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?((?:t[12](?:\^\d+)?\*?)*)$")

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Inverse of ``str``; accepts the canonical text form."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        out = cls()
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            m = cls._TERM.match(body)
            if not m or not body:
                raise ValueError(f"cannot parse term {body!r}")
            coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
            i = j = 0
            for var, exp in re.findall(r"t([12])(?:\^(\d+))?", m.group(2)):
                e = int(exp) if exp else 1
                if var == "1":
                    i += e
                else:
                    j += e
            if sign == "-":
                coeff = -coeff
            out = out + cls.monomial(i, j, coeff)
        return out


def linear_form(chi) -> Polynomial:
    return Character(*chi).linear_form()


def elementary_symmetric(chars, j: int) -> Polynomial:
    """``e_j`` of the linear forms of ``chars``."""
    chars = [Character(*c) for c in chars]
    if j < 0 or j > len(chars):
        raise ValueError(f"e_{j} undefined for {len(chars)} characters")
    # e_j via the generating product prod (1 + s*l_i), tracked degree by degree
    e = [Polynomial.constant(1)] + [Polynomial() for _ in range(j)]
    for c in chars:
        lf = c.linear_form()
        for k in range(j, 0, -1):
            e[k] = e[k] + e[k - 1] * lf
    return e[j]


def product_of_forms(chars) -> Polynomial:
    out = Polynomial.constant(1)
    for c in chars:
        out = out * linear_form(c)
    return out


def divisibility_functionals(k: int, ell, power: int) -> list:
    """Linear functionals on degree-``k`` coefficient vectors cutting out ``ell^power``-multiples.

    A homogeneous ``f`` of degree ``k`` (coefficients of ``t1^k, ..., t2^k``)
    is divisible by ``ell^power`` iff every returned row pairs to zero with its
    coefficient vector.  ``ell`` is completed to a unimodular basis
    ``(u, v) = (ell, w)``; the rows are the coefficients of ``u^i v^(k-i)``
    for ``i < power``.
    """
    ell = Character(*ell)
    if ell.is_zero():
        raise ValueError("divisibility by the zero form")
    if power <= 0:
        return []
    g = gcd(abs(ell.a), abs(ell.b))
    prim = Character(ell.a // g, ell.b // g)
    u, w = complete_basis(prim)
    # t1 = w2*U - u2*V, t2 = -w1*U + u1*V where U = u.t, V = w.t (det = 1)
    a, b = u
    c, d = w
    t1_uv = {(1, 0): d, (0, 1): -b}
    t2_uv = {(1, 0): -c, (0, 1): a}
    P1 = Polynomial(t1_uv)
    P2 = Polynomial(t2_uv)
    rows = [[0] * (k + 1) for _ in range(min(power, k + 1))]
    for j in range(k + 1):
        image = (P1 ** (k - j)) * (P2 ** j)  # in variables (U, V) stored as (t1, t2)
        for i in range(len(rows)):
            rows[i][j] = image.coefficient(i, k - i)
    return rows


def divisible_by_linear_power(f: Polynomial, ell, k: int) -> bool:
    """True iff ``linear_form(ell)^k`` divides ``f``."""
    ell = Character(*ell)
    if ell.is_zero():
        raise ValueError("divisibility by the zero form")
    if k < 0:
        raise ValueError("negative power")
    if k == 0 or f.is_zero():
        return True
    for deg in {i + j for i, j in f.terms}:
        coeffs = f.coefficients_in_degree(deg)
        for row in divisibility_functionals(deg, ell, k):
            if sum(r * c for r, c in zip(row, coeffs)) != 0:
                return False
    return True


def divide_by_linear(f: Polynomial, ell) -> Optional[Polynomial]:
    """Exact quotient ``f / linear_form(ell)``, or ``None`` if it does not divide.

    Synthetic division, one homogeneous component at a time.
    """
    ell = Character(*ell)
    if ell.is_zero():
        raise ValueError("division by the zero form")
    a, b = ell
    swap = a == 0
    if swap:
        a, b = b, a
    out: Dict[Exponent, Rational] = {}
    for deg in sorted({i + j for i, j in f.terms}):
        c = f.coefficients_in_degree(deg)
        if swap:
            c = c[::-1]
        if deg == 0:
            return None
        q = []
        prev = 0
        for j in range(deg):
            qj = normalize_rational(Fraction(c[j] - b * prev) / a)
            q.append(qj)
            prev = qj
        if b * prev != c[deg]:
            return None
        if swap:
            q = q[::-1]
        for j, v in enumerate(q):
            if v:
                out[(deg - 1 - j, j)] = v
    return Polynomial._raw(out)


def linear_valuation(f: Polynomial, ell, cap: int) -> int:
    """Largest ``k <= cap`` with ``linear_form(ell)^k`` dividing ``f``."""
    k = 0
    while k < cap and not f.is_zero():
        q = divide_by_linear(f, ell)
        if q is None:
            return k
        f, k = q, k + 1
    return cap if f.is_zero() else k
