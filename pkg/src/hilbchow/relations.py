"""Congruence descriptions of the equivariant Chow module.

A relation ``sum_p c_p alpha_p == 0 (mod prod l_i^{k_i})`` cuts a submodule of
``R^{fixed points}``.  This module loads relation lists, closes them under a
symmetry group of the surface, checks them against a computed module, and
tests whether they cut out exactly that module.  It also provides the
Bott-style membership test, an oracle independent of the intersection
computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .fixed_points import HilbFixedPoint, enumerate_fixed_points, tangent_representation
from .linalg import Echelon, kernel, rref
from .module import GradedSubmodule, GradedVector
from .polynomial import Character, Polynomial, divisibility_functionals, linear_valuation
from .toric import ToricSurface, build_surface, lattice_action_on_points

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]


# --- symmetry ---------------------------------------------------------

def act_on_character(g: Matrix, chi) -> Character:
    return Character(g[0][0] * chi[0] + g[0][1] * chi[1], g[1][0] * chi[0] + g[1][1] * chi[1])


def act_on_fixed_point(S: ToricSurface, g: Matrix, P: HilbFixedPoint) -> HilbFixedPoint:
    """Image of a fixed point under the fan automorphism ``g`` (acting on characters)."""
    action = lattice_action_on_points(S, g)
    parts = {}
    for name, E in P.parts:
        target, swapped = action[name]
        parts[target] = E.transpose() if swapped else E
    return HilbFixedPoint.from_parts(S, parts)


# Subscript of each permutation of the toric points p1, p2, p3 of P^2.
S3_NAMES = {(1, 2, 3): "", (2, 1, 3): "12", (3, 2, 1): "13", (1, 3, 2): "23",
            (2, 3, 1): "123", (3, 1, 2): "132"}


def s3_matrix(perm: Sequence[int]) -> Matrix:
    """Action on characters of the automorphism of ``P^2`` sending ``p_i`` to ``p_{perm[i-1]}``.

    Let ``X_i`` be the coordinate not vanishing at ``p_i``; its weight is
    ``w1 = (0,0), w2 = (1,0), w3 = (0,1)``.  The character ``w_j - w_i`` of
    ``X_j/X_i`` goes to ``w_{s(j)} - w_{s(i)}``.
    """
    w = {1: (0, 0), 2: (1, 0), 3: (0, 1)}
    s = {i + 1: perm[i] for i in range(3)}
    c1 = (w[s[2]][0] - w[s[1]][0], w[s[2]][1] - w[s[1]][1])
    c2 = (w[s[3]][0] - w[s[1]][0], w[s[3]][1] - w[s[1]][1])
    return ((c1[0], c2[0]), (c1[1], c2[1]))


class SymmetryGroup:
    """A finite group of fan automorphisms, each given by its matrix on characters."""

    def __init__(self, S: ToricSurface, elements: Mapping[str, Matrix]):
        self.surface = S
        self.elements = dict(elements)
        for g in self.elements.values():
            lattice_action_on_points(S, g)

    @classmethod
    def s3(cls, S: Optional[ToricSurface] = None) -> "SymmetryGroup":
        S = S or build_surface("P2")
        return cls(S, {name: s3_matrix(p) for p, name in S3_NAMES.items()})

    def point(self, name: str, P: HilbFixedPoint) -> HilbFixedPoint:
        return act_on_fixed_point(self.surface, self.elements[name], P)


class LabelMap:
    """Names such as ``A`` or ``C23`` for fixed points: a letter is a base point,
    a subscript the group element applied to it."""

    def __init__(self, S: ToricSurface, group: SymmetryGroup, base: Mapping[str, str]):
        self.surface = S
        self.group = group
        self.base = {k: HilbFixedPoint.parse(S, v) for k, v in base.items()}

    @classmethod
    def load(cls, path=None) -> "LabelMap":
        doc = _load_json(path, "p2_labels.json")
        S = build_surface(doc["surface"])
        return cls(S, SymmetryGroup.s3(S), doc["base"])

    def resolve(self, label: str) -> HilbFixedPoint:
        letter, sub = label[:1].upper(), label[1:].strip("_{}")
        if letter not in self.base or sub not in self.group.elements:
            raise KeyError(f"unknown label {label!r}")
        return self.group.point(sub, self.base[letter])

    def table(self) -> Dict[str, str]:
        return {f"{letter}{sub}": self.resolve(letter + sub).label
                for letter in sorted(self.base) for sub in self.group.elements}

    def names_of(self, P: HilbFixedPoint) -> List[str]:
        return [name for name, label in self.table().items() if label == P.label]


# --- relations --------------------------------------------------------

@dataclass(frozen=True)
class RelationSpec:
    """``sum coeff * alpha_label == 0`` modulo ``prod linear_form(char)^power``."""

    terms: Tuple[Tuple[str, int], ...]
    modulus: Tuple[Tuple[Character, int], ...]
    name: str = ""
    reading: str = ""

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a relation needs at least one term")
        mods = []
        for chi, k in self.modulus:
            chi = Character(*chi)
            if not chi.is_primitive():
                raise ValueError(f"modulus character {tuple(chi)} is not primitive")
            mods.append((chi, int(k)))
        object.__setattr__(self, "modulus", tuple(mods))

    @classmethod
    def from_json(cls, doc: Mapping) -> "RelationSpec":
        return cls(tuple((t["label"], int(t["coeff"])) for t in doc["terms"]),
                   tuple((Character(*m["char"]), int(m["power"])) for m in doc["modulus"]),
                   str(doc.get("name", "")), str(doc.get("reading", "")))

    def to_json(self) -> dict:
        return {"name": self.name, "reading": self.reading,
                "terms": [{"label": l, "coeff": c} for l, c in self.terms],
                "modulus": [{"char": list(chi), "power": k} for chi, k in self.modulus]}

    def __str__(self):
        lhs = ""
        for label, c in self.terms:
            mag = "" if abs(c) == 1 else str(abs(c))
            if not lhs:
                lhs = f"{'-' if c < 0 else ''}{mag}{label}"
            else:
                lhs += f" {'-' if c < 0 else '+'} {mag}{label}"
        mod = "*".join(f"({linear_form_str(chi)})" + (f"^{k}" if k > 1 else "") for chi, k in self.modulus)
        return f"{lhs} == 0 mod {mod}"


def linear_form_str(chi) -> str:
    return str(Character(*chi).linear_form())


@dataclass(frozen=True)
class ResolvedRelation:
    """A relation on fixed-point ids, ready to be evaluated."""

    terms: Tuple[Tuple[str, int], ...]
    modulus: Tuple[Tuple[Character, int], ...]

    def key(self):
        return (tuple(sorted(self.terms)), tuple(sorted(self.modulus)))

    def combine(self, v: GradedVector) -> Polynomial:
        out = Polynomial()
        for label, c in self.terms:
            out = out + v[label].scale(c)
        return out

    def holds(self, v: GradedVector) -> bool:
        f = self.combine(v)
        return all(linear_valuation(f, chi, k) >= k for chi, k in self.modulus)

    def cut_rows(self, points: Sequence[str], k: int) -> List[list]:
        """Linear conditions on the degree-``k`` piece of ``R^points``."""
        index = {p: i for i, p in enumerate(points)}
        rows = []
        for chi, power in self.modulus:
            for fun in divisibility_functionals(k, chi, power):
                row = [0] * (len(points) * (k + 1))
                for label, c in self.terms:
                    base = index[label] * (k + 1)
                    for j, r in enumerate(fun):
                        row[base + j] += c * r
                if any(row):
                    rows.append(row)
        return rows


def resolve(rel: RelationSpec, labels: LabelMap, g: str = "") -> ResolvedRelation:
    """``rel`` translated by the group element ``g``."""
    terms: Dict[str, int] = {}
    for label, c in rel.terms:
        P = labels.resolve(label)
        if g:
            P = labels.group.point(g, P)
        terms[P.label] = terms.get(P.label, 0) + c
    matrix = labels.group.elements[g]
    mods = tuple((act_on_character(matrix, chi).primitive(), k) for chi, k in rel.modulus)
    return ResolvedRelation(tuple((p, c) for p, c in sorted(terms.items()) if c), mods)


def translates(rel: RelationSpec, labels: LabelMap) -> List[Tuple[str, ResolvedRelation]]:
    seen, out = set(), []
    for g in labels.group.elements:
        r = resolve(rel, labels, g)
        if r.key() not in seen:
            seen.add(r.key())
            out.append((g, r))
    return out


def load_relations(path=None) -> List[RelationSpec]:
    doc = _load_json(path, "thm53.json")
    return [RelationSpec.from_json(r) for r in doc["relations"]]


def _load_json(path, default_name: str) -> dict:
    if path is None:
        text = resources.files("hilbchow").joinpath("data").joinpath(default_name).read_text()
    else:
        text = open(path).read()
    return json.loads(text)


@dataclass
class RelationResult:
    relation: RelationSpec
    passed: bool
    failures: List[Tuple[str, int]]  # (group element, degree) of the first witnesses

    def to_json(self) -> dict:
        return {"name": self.relation.name, "reading": self.relation.reading,
                "relation": str(self.relation), "passed": self.passed,
                "failures": [{"translate": g, "degree": k} for g, k in self.failures]}


@dataclass
class RelationsReport:
    results: List[RelationResult]
    complete: Optional[bool]
    cut_dims: List[int]
    module_dims: List[int]

    def readings(self) -> Dict[str, List[str]]:
        """For each relation name stored in several readings, the readings that pass."""
        groups: Dict[str, List[RelationResult]] = {}
        for r in self.results:
            groups.setdefault(r.relation.name, []).append(r)
        return {n: [r.relation.reading for r in rs if r.passed] for n, rs in groups.items() if len(rs) > 1}

    @property
    def passed(self) -> bool:
        groups: Dict[str, bool] = {}
        for r in self.results:
            groups[r.relation.name] = groups.get(r.relation.name, False) or r.passed
        return all(groups.values()) and self.complete is not False

    def to_json(self) -> dict:
        return {"passed": self.passed, "complete": self.complete,
                "cut_dims": self.cut_dims, "module_dims": self.module_dims,
                "readings": self.readings(), "relations": [r.to_json() for r in self.results]}


def verify_relations(M: GradedSubmodule, relations: Sequence[RelationSpec], labels: LabelMap,
                     check_complete: bool = True) -> RelationsReport:
    """Check every relation and translate on every basis vector of every piece of ``M``.

    A relation stored in several readings (same ``name``) passes when one of
    them does; only passing readings enter the completeness check, which
    compares the submodule cut out by the relations with ``M`` piece by piece.
    """
    results = []
    for rel in relations:
        failures = []
        for g, rr in translates(rel, labels):
            for label, _ in rr.terms:
                if label not in M.points:
                    raise KeyError(f"label {label} of relation {rel.name} is not a point of the module")
            for k in range(M.degree_bound + 1):
                if any(not rr.holds(v) for v in M.basis(k)):
                    failures.append((g, k))
                    break
        results.append(RelationResult(rel, not failures, failures))
    report = RelationsReport(results, None, [], M.dims())
    if check_complete:
        passing = [r.relation for r in results if r.passed]
        cut = relation_cut_module(passing, labels, M.points, M.degree_bound)
        report.cut_dims = cut.dims()
        report.complete = cut == M
    return report


def relation_cut_module(relations: Iterable[RelationSpec], labels: LabelMap, points: Sequence[str],
                        degree_bound: int) -> GradedSubmodule:
    resolved = [rr for rel in relations for _, rr in translates(rel, labels)]
    pieces = []
    for k in range(degree_bound + 1):
        n = len(points) * (k + 1)
        cons = Echelon(n)
        for rr in resolved:
            cons.extend(rr.cut_rows(points, k))
        pieces.append(rref(kernel(cons.rows, n), n)[0])
    return GradedSubmodule(points, degree_bound, pieces)


# --- Bott-style membership -------------------------------------------

def euler_classes(S: ToricSurface, d: int) -> Dict[str, List[Character]]:
    """Tangent weights at each fixed point, the factored top Chern classes."""
    return {P.label: list(tangent_representation(S, P).weights) for P in enumerate_fixed_points(S, d)}


def _coeffs(f: Polynomial, k: int) -> List:
    return f.coefficients_in_degree(k)


def _conv(u: Sequence, v: Sequence) -> List:
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] += a * b
    return out


class CongruenceOracle:
    """Membership in ``i_T^* A_T^*`` by the congruences

    ``sum_p alpha_p beta_ip prod_{q != p} e_q == 0 (mod prod_p e_p)``

    for all generators ``beta_i``, ``e_p`` the Euler class at ``p``.
    Homogeneous polynomials are handled as coefficient lists, so products are
    one-variable convolutions.
    """

    def __init__(self, beta: Sequence[GradedVector], euler: Mapping[str, Sequence[Character]]):
        self.points = list(euler)
        self.beta = list(beta)
        self.modulus: Dict[Character, int] = {}
        for p, ws in euler.items():
            for w in ws:
                if Character(*w).is_zero():
                    raise ValueError(f"zero tangent weight at {p}")
                chi = Character(*w).primitive()
                self.modulus[chi] = self.modulus.get(chi, 0) + 1
        e = [[1]]
        for p in self.points:
            poly = Polynomial.constant(1)
            for w in euler[p]:
                poly = poly * Character(*w).linear_form()
            e.append(_coeffs(poly, len(euler[p])))
        e = e[1:]
        n = len(e)
        prefix, suffix = [[1]] * (n + 1), [[1]] * (n + 1)
        for i in range(n):
            prefix[i + 1] = _conv(prefix[i], e[i])
            suffix[n - 1 - i] = _conv(suffix[n - i], e[n - 1 - i])
        self.others = [_conv(prefix[i], suffix[i + 1]) for i in range(n)]

    def congruence(self, alpha: GradedVector, beta: GradedVector) -> Polynomial:
        """The left-hand side of the congruence for one generator."""
        k = alpha.degree + beta.degree
        total = None
        for p, other in zip(self.points, self.others):
            ab = alpha[p] * beta[p]
            if ab.is_zero():
                continue
            term = _conv(_coeffs(ab, k), other)
            total = term if total is None else [x + y for x, y in zip(total, term)]
        if total is None:
            return Polynomial()
        deg = len(total) - 1
        return Polynomial.from_coefficients(deg, total)

    def contains(self, alpha: GradedVector) -> bool:
        for b in self.beta:
            f = self.congruence(alpha, b)
            for chi, k in self.modulus.items():
                if linear_valuation(f, chi, k) < k:
                    return False
        return True


def congruence_membership(alpha: GradedVector, beta: Sequence[GradedVector],
                          euler: Mapping[str, Sequence[Character]]) -> bool:
    return CongruenceOracle(beta, euler).contains(alpha)
