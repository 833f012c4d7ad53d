import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hilbchow.linalg import Echelon, format_rational, intersect, kernel, rank, rref
from hilbchow.module import (GradedSubmodule, GradedVector, annihilator_rows, dumps_pieces, piece_equal,
                             piece_intersection, piece_membership, quotient_betti, span_piece)
from hilbchow.polynomial import Polynomial

P = Polynomial.parse
F2 = ("0", "inf")


def vec(degree, **entries):
    return GradedVector({k: P(v) for k, v in entries.items()}, degree)


def p1_model(bound=4):
    """The one-variable P^1 model: R(1,1) + R(0,t) with t = t1."""
    gens = [GradedVector.constant(F2), GradedVector({"inf": P("t1")}, 1)]
    return GradedSubmodule.generated_by(gens, F2, bound)


# --- linalg -------------------------------------------------------------

def test_rref_is_canonical():
    a, _ = rref([[2, 4, 6], [1, 1, 1]], 3)
    b, _ = rref([[1, 1, 1], [3, 5, 7]], 3)
    assert a == b == [[1, 0, -1], [0, 1, 2]]


def test_kernel_and_rank():
    rows = [[1, 2, 3], [2, 4, 6]]
    assert rank(rows, 3) == 1
    ker = kernel(rows, 3)
    assert len(ker) == 2
    assert all(sum(r * x for r, x in zip(rows[0], v)) == 0 for v in ker)


def test_echelon_with_fractions():
    e = Echelon(2)
    assert e.add([Fraction(1, 2), Fraction(1, 3)])
    assert not e.add([3, 2])
    assert e.contains([6, 4])


def test_intersect_of_lines():
    assert intersect([[[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]]], 3) == [[0, 1, 0]]


def test_format_rational():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(2) == "2/1"


# --- graded vectors and pieces --------------------------------------------

def test_graded_vector_rejects_inhomogeneous_entries():
    with pytest.raises(ValueError):
        GradedVector({"0": P("t1 + 1")}, 1)


def test_span_piece_examples():
    assert len(span_piece([GradedVector.constant(F2)], 1, F2)) == 2
    gens = [GradedVector.constant(F2), GradedVector({"inf": P("t1")}, 1)]
    piece = span_piece(gens, 1, F2)
    assert len(piece) == 3  # (t1,t1), (t2,t2), (0,t1) in the two-variable ring
    assert span_piece([], 3, F2) == []


def test_one_variable_specialisation_dimension():
    """Inside the sub-ring generated by t1 alone, (t,t) and (0,t) span degree 1."""
    M = p1_model()
    assert piece_membership(vec(1, **{"0": "t1", "inf": "t1"}), M)
    assert piece_membership(vec(1, inf="t1"), M)
    # (t1, 0) = (t1, t1) - (0, t1)
    assert piece_membership(vec(1, **{"0": "t1"}), M)
    assert not piece_membership(vec(1, inf="t2"), M)


def test_membership_in_free_rank_one():
    M = GradedSubmodule.generated_by([GradedVector.constant(F2)], F2, 3)
    assert piece_membership(vec(1, **{"0": "t1", "inf": "t1"}), M)
    assert not piece_membership(vec(1, **{"0": "t1"}), M)


def test_intersection_with_full_module():
    M = p1_model()
    assert piece_intersection([M, GradedSubmodule.free(F2, 4)]) == M


def test_p1_model_equals_agreement_at_zero():
    """Couples (P, Q) in the P^1 model are those with P - Q vanishing along t1 = 0."""
    M = p1_model()
    cut_pieces = []
    for k in range(5):
        # condition: the t2^k coefficients of P and Q agree
        cond = [0] * (2 * (k + 1))
        cond[k] = 1
        cond[2 * (k + 1) - 1] = -1
        cut_pieces.append(kernel([cond], 2 * (k + 1)))
    cut = GradedSubmodule(F2, 4, [rref(p, len(p[0]))[0] if p else [] for p in cut_pieces])
    assert piece_equal(M.intersection(cut), M)
    assert piece_equal(M, cut)


def test_quotient_betti_examples():
    assert quotient_betti(p1_model()) == [1, 1, 0, 0, 0]
    point = GradedSubmodule.free(["pt"], 3)
    assert quotient_betti(point) == [1, 0, 0, 0]


def test_closure_violation_is_reported():
    bad = GradedSubmodule(F2, 1, [[[1, 1]], []])
    assert bad.closure_violations() == [0]
    with pytest.raises(ValueError):
        bad.quotient_betti()


def test_mismatched_index_sets():
    with pytest.raises(ValueError):
        p1_model().intersection(GradedSubmodule.free(("a", "b"), 4))
    with pytest.raises(ValueError):
        p1_model() == GradedSubmodule.free(F2, 3)


def test_json_round_trip():
    M = p1_model(3)
    doc = json.loads(dumps_pieces(M))
    assert GradedSubmodule.from_json(doc) == M


def test_annihilator_rows_cut_the_piece():
    M = p1_model(3)
    for k in range(4):
        ann = annihilator_rows(M, k)
        assert len(ann) + len(M.pieces[k]) == M.ambient_dim(k)


def test_minimal_generators_regenerate():
    M = p1_model(4)
    gens = M.minimal_generators()
    assert [g.degree for g in gens] == [0, 1]
    assert GradedSubmodule.generated_by(gens, F2, 4) == M


def test_restrict_points_reindexes():
    M = p1_model(2)
    N = M.restrict_points(("new",) + F2)
    assert N.dims() == M.dims()
    assert all(not any(r[:k + 1]) for k in range(3) for r in N.pieces[k])


# --- properties ---------------------------------------------------------

monos = st.sampled_from(["1", "t1", "t2", "t1^2", "t1*t2", "t2^2", "2*t1 - t2", "t1 + 3*t2"])


@st.composite
def generator_lists(draw):
    out = []
    for _ in range(draw(st.integers(0, 3))):
        e0, e1 = draw(monos), draw(monos)
        f0, f1 = P(e0), P(e1)
        d = max(f0.degree(), f1.degree())
        entries = {}
        if f0.degree() == d:
            entries["0"] = f0
        if f1.degree() == d:
            entries["inf"] = f1
        out.append(GradedVector(entries, d))
    return out


@given(generator_lists(), generator_lists())
@settings(max_examples=30, deadline=None)
def test_span_monotone_and_intersection_laws(g1, g2):
    A = GradedSubmodule.generated_by(g1, F2, 3)
    AB = GradedSubmodule.generated_by(g1 + g2, F2, 3)
    B = GradedSubmodule.generated_by(g2, F2, 3)
    assert A.is_submodule_of(AB)
    assert A.intersection(A) == A
    assert A.intersection(B) == B.intersection(A)
    assert A.intersection(B).is_submodule_of(A)
    assert A.intersection(B).is_submodule_of(B)
    assert A.closure_violations() == []


def test_random_membership_agrees_with_rank():
    rng = random.Random(3)
    M = p1_model(3)
    for _ in range(30):
        k = rng.randint(0, 3)
        v = GradedVector({p: Polynomial.from_coefficients(k, [rng.randint(-2, 2) for _ in range(k + 1)]) for p in F2}, k)
        stacked = M.pieces[k] + [v.row(F2)]
        assert M.contains(v) == (rank(stacked, M.ambient_dim(k)) == len(M.pieces[k]))
