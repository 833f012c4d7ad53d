"""Quasi-homogeneous Hilbert schemes ``H_{ab,H}`` and their equivariant Chow modules.

``H_{ab,H}`` parametrises ideals of ``k[x, y]`` that are homogeneous for
``deg x = a, deg y = b`` with ``codim(I_d, k[x,y]_d) = H_d``.  Its torus-fixed
points are the monomial ideals with that Hilbert function, and its
equivariant Chow ring is generated by the Chern classes of the universal
quotients ``k[x,y]_d / I_d``, restricted to the fixed points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .module import GradedSubmodule, GradedVector
from .polynomial import Character, Polynomial, elementary_symmetric
from .staircase import (Staircase, WeightedHilbertFunction, cell_character,
                        enumerate_ideals_with_hilbert_function)

Chart = Tuple[Character, Character]


@dataclass(frozen=True)
class GradedHilbModel:
    H: WeightedHilbertFunction
    fixed_points: Tuple[Staircase, ...]
    embedding_degrees: Tuple[int, ...]

    @property
    def weights(self) -> Tuple[int, int]:
        return self.H.weights

    def __str__(self):
        a, b = self.weights
        return f"H_{{{a},{b}}}{self.H}"


def graded_hilbert_model(H: WeightedHilbertFunction) -> GradedHilbModel:
    pts = tuple(enumerate_ideals_with_hilbert_function(H))
    emb = tuple(d for d in range(len(H.values))
                if 0 < H[d] < len(H.monomials_in_degree(d)))
    return GradedHilbModel(H, pts, emb)


def quotient_characters(model: GradedHilbModel, E: Staircase, d: int, chart) -> List[Character]:
    """Characters of the monomials of ``E`` in degree ``d``, i.e. of ``(k[x,y]/I)_d``."""
    if d not in model.embedding_degrees:
        raise ValueError(f"{d} is not an embedding degree of {model}")
    if E not in model.fixed_points:
        raise ValueError(f"{E} is not a fixed point of {model}")
    chi_x, chi_y = chart
    return [cell_character(m, chi_x, chi_y) for m in model.H.monomials_in_degree(d) if m in E.cells]


def chern_generator(model: GradedHilbModel, d: int, j: int, chart) -> GradedVector:
    """``c_j`` of the degree-``d`` universal quotient at every fixed point."""
    if j == 0:
        return GradedVector.constant(model.fixed_points)
    if d not in model.embedding_degrees:
        raise ValueError(f"{d} is not an embedding degree of {model}")
    if not 1 <= j <= model.H[d]:
        raise ValueError(f"c_{j} of a rank {model.H[d]} bundle")
    return GradedVector({E: elementary_symmetric(quotient_characters(model, E, d, chart), j)
                         for E in model.fixed_points}, j)


def _monomials_in_generators(gens: Sequence[GradedVector], bound: int, points) -> List[GradedVector]:
    out = [GradedVector.constant(points)]

    def rec(start: int, current: GradedVector):
        for i in range(start, len(gens)):
            nxt = current * gens[i]
            if nxt.degree > bound:
                continue
            out.append(nxt)
            rec(i, nxt)

    rec(0, out[0])
    return out


def module_M(model: GradedHilbModel, chart, degree_bound: int) -> GradedSubmodule:
    """Submodule of ``R^{fixed points}`` spanned by all products of Chern generators."""
    if not model.fixed_points:
        raise ValueError(f"{model} is empty")
    gens = [chern_generator(model, d, j, chart)
            for d in model.embedding_degrees for j in range(1, model.H[d] + 1)]
    gens = [g for g in gens if g.degree <= degree_bound]
    return GradedSubmodule.generated_by(_monomials_in_generators(gens, degree_bound, model.fixed_points),
                                        model.fixed_points, degree_bound)
