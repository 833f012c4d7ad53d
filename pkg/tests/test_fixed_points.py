import pytest

from hilbchow.fixed_points import (HilbFixedPoint, TangentRep, betti_bb, enumerate_fixed_points, euler_class,
                                   generic_direction, tangent_oracle, tangent_representation)
from hilbchow.polynomial import Character, Polynomial
from hilbchow.staircase import Staircase
from hilbchow.toric import build_surface

from oracles import goettsche_betti

P2 = build_surface("P2")


def test_fixed_point_counts():
    assert len(enumerate_fixed_points(P2, 0)) == 1
    assert len(enumerate_fixed_points(P2, 1)) == 3
    assert len(enumerate_fixed_points(P2, 2)) == 9
    assert len(enumerate_fixed_points(P2, 3)) == 22
    assert len(enumerate_fixed_points(build_surface("P1xP1"), 2)) == 14
    with pytest.raises(ValueError):
        enumerate_fixed_points(P2, -1)


def test_labels_round_trip():
    for P in enumerate_fixed_points(P2, 3):
        assert HilbFixedPoint.parse(P2, P.label) == P
        assert P.length == 3
    assert HilbFixedPoint.from_parts(P2, {}).label == "empty"
    with pytest.raises(KeyError):
        HilbFixedPoint.from_parts(P2, {"q": Staircase.parse("[1]")})


def test_tangent_at_a_reduced_point():
    P = HilbFixedPoint.parse(P2, "p1:[1]")
    ws = tangent_representation(P2, P).weights
    assert sorted(w.primitive() for w in ws) == [Character(0, 1), Character(1, 0)]
    assert euler_class(tangent_representation(P2, P)) == Polynomial.parse("t1*t2")


def test_e_type_point_has_two_invariant_directions():
    P = HilbFixedPoint.parse(P2, "p1:[1] p2:[1] p3:[1]")
    rep = tangent_representation(P2, P)
    assert len(rep) == 6 and not any(w.is_zero() for w in rep.weights)
    assert rep.count_proportional(Character(1, -1)) == 2


@pytest.mark.parametrize("surface,d", [("P2", 1), ("P2", 2), ("P2", 3), ("P2", 4), ("P1xP1", 2), ("P1xP1", 3),
                                       ("F1", 2), ("F1", 3)])
def test_tangent_dimension(surface, d):
    S = build_surface(surface)
    for P in enumerate_fixed_points(S, d):
        assert len(tangent_representation(S, P)) == 2 * d


def test_tangent_parts_match_oracle():
    for P in enumerate_fixed_points(P2, 3):
        for name, E in P.parts:
            pt = P2.point(name)
            assert tangent_oracle(E, pt.chi_x, pt.chi_y) == sorted(
                w for w in tangent_representation(P2, HilbFixedPoint(((name, E),))).weights)


def test_oracle_bound():
    with pytest.raises(ValueError):
        tangent_oracle(Staircase.parse("[9]"), Character(1, 0), Character(0, 1))
    assert len(tangent_oracle(Staircase.parse("[2,1]"), Character(1, 0), Character(0, 1))) == 6


def test_euler_class_degree_and_product():
    total = Polynomial.constant(1)
    for P in enumerate_fixed_points(P2, 3):
        e = euler_class(tangent_representation(P2, P))
        assert e.is_homogeneous(6)
        total = total * e
    assert total.degree() == 132
    with pytest.raises(ValueError):
        euler_class(TangentRep((Character(0, 0), Character(1, 0))))


def test_betti_bb_examples():
    assert betti_bb(P2, 1) == [1, 1, 1]
    assert betti_bb(P2, 2) == [1, 2, 3, 2, 1]
    assert betti_bb(P2, 3) == [1, 2, 5, 6, 5, 2, 1]


@pytest.mark.parametrize("surface,b", [("P2", (1, 1, 1)), ("P1xP1", (1, 2, 1)), ("F1", (1, 2, 1))])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_betti_bb_matches_goettsche(surface, b, d):
    S = build_surface(surface)
    betti = betti_bb(S, d)
    assert betti == goettsche_betti(b, d)
    assert betti == betti[::-1]
    assert sum(betti) == len(enumerate_fixed_points(S, d))


def test_betti_bb_independent_of_direction():
    ref = betti_bb(P2, 3)
    weights = [w for P in enumerate_fixed_points(P2, 3) for w in tangent_representation(P2, P).weights]
    for lam in [(1, 2), (2, 3), (3, 1), generic_direction(weights)]:
        if all(w.pairing(lam) for w in weights):
            assert betti_bb(P2, 3, lam) == ref


def test_betti_bb_rejects_special_direction():
    with pytest.raises(ValueError, match="kills the weight"):
        betti_bb(P2, 2, (1, 1))


def test_diagonal_subtorus_fixes_curvilinear_directions():
    """ker(1,-1) kills one tangent weight at the row at p1 and none at the fat point."""
    row = tangent_representation(P2, HilbFixedPoint.parse(P2, "p1:[1,1,1]"))
    fat = tangent_representation(P2, HilbFixedPoint.parse(P2, "p1:[2,1]"))
    assert row.count_proportional(Character(1, -1)) == 1
    assert fat.count_proportional(Character(1, -1)) == 0
