"""Independent reference computations used to derive and cross-check test values.

None of these share code with the library beyond the ``Polynomial`` and
``Staircase`` containers they read from.
"""

import itertools
from functools import reduce

import sympy

t1, t2 = sympy.symbols("t1 t2")


def to_sympy(f):
    return sum((sympy.Rational(c.numerator, c.denominator) if hasattr(c, "denominator") else c) * t1 ** i * t2 ** j
               for (i, j), c in f.items()) if not f.is_zero() else sympy.Integer(0)


def sympy_divisible(f, ell, k):
    """``(a t1 + b t2)^k | f`` by polynomial division in sympy."""
    lin = ell[0] * t1 + ell[1] * t2
    expr = sympy.expand(to_sympy(f))
    if expr == 0:
        return True
    _, r = sympy.div(sympy.Poly(expr, t1, t2), sympy.Poly(lin ** k, t1, t2))
    return r.is_zero


def staircases_by_growth(n):
    """All order ideals of size ``n`` of N^2, grown one addable cell at a time."""
    level = {frozenset()}
    for _ in range(n):
        nxt = set()
        for E in level:
            cands = {(0, 0)} if not E else {(a + da, b + db) for a, b in E for da, db in ((1, 0), (0, 1))}
            for a, b in cands - E:
                if (a == 0 or (a - 1, b) in E) and (b == 0 or (a, b - 1) in E):
                    nxt.add(E | {(a, b)})
        level = nxt
    return level


def partition_count(n):
    return int(sympy.functions.combinatorial.numbers.partition(n))


def linkage_exists_brute(I_cells, J_cells):
    """Try every nonnegative array on E(J) with entries bounded by the y-coordinate."""
    J = sorted(J_cells)
    target = set(I_cells)
    for ns in itertools.product(*[range(b + 1) for _, b in J]):
        n = dict(zip(J, ns))
        if any((a + 1, b) in n and n[(a + 1, b)] < n[(a, b)] for a, b in J):
            continue
        if any((a, b + 1) in n and n[(a, b + 1)] < n[(a, b)] for a, b in J):
            continue
        img = [(a + n[(a, b)], b - n[(a, b)]) for a, b in J]
        if len(set(img)) == len(img) and set(img) == target:
            return True
    return False


def elementary_symmetric_sympy(forms, j):
    return sympy.expand(sum((reduce(lambda x, y: x * y, c, sympy.Integer(1))
                             for c in itertools.combinations(forms, j)), sympy.Integer(0)))


def goettsche_betti(surface_betti, n):
    """Even Betti numbers of S^[n] (in powers of x = z^2) from Göttsche's product formula.

    ``surface_betti`` is ``(b0, b2, b4)`` of a surface with no odd cohomology.
    """
    x, q = sympy.symbols("x q")
    prod = sympy.Integer(1)
    for k in range(1, n + 1):
        for i, b in enumerate(surface_betti):
            prod *= sum(((x ** (k - 1 + i) * q ** k) ** m for m in range(n // k + 1))) ** b
    coeff = sympy.expand(prod).coeff(q, n)
    poly = sympy.Poly(coeff, x)
    return [int(poly.coeff_monomial(x ** i)) for i in range(2 * n + 1)]


def gkm_rows_surface(S, k):
    """Degree-k linear conditions v_p - v_q = 0 mod (line character) for each toric line."""
    names = S.point_names
    idx = {p: i for i, p in enumerate(names)}
    rows = []
    for ln in S.lines:
        a, b = ln.direction_start
        # coefficients of (a t1 + b t2) * t1^(k-1-j) t2^j span the multiples; the condition is
        # vanishing of f(p) - f(q) at the point (t1, t2) = (-b, a), i.e. sum_j c_j (-b)^(k-j) a^j = 0
        row = [0] * (len(names) * (k + 1))
        for j in range(k + 1):
            val = (-b) ** (k - j) * a ** j
            row[idx[ln.start] * (k + 1) + j] += val
            row[idx[ln.end] * (k + 1) + j] -= val
        rows.append(row)
    return rows
