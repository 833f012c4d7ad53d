import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hilbchow.fixed_points import tangent_oracle
from hilbchow.polynomial import Character
from hilbchow.staircase import (CleftCouple, ReversePlanePartition, Staircase, WeightedHilbertFunction,
                                cleft_couples, clefts, complement, complement_in_box,
                                enumerate_ideals_with_hilbert_function, enumerate_staircases,
                                incidence_necessary, is_linkage_witness, linkage, tangent_characters,
                                weighted_hilbert_function)

from oracles import linkage_exists_brute, partition_count, staircases_by_growth

S = Staircase.parse
X, Y = Character(1, 0), Character(0, 1)
ROW3 = Staircase({(0, 0), (1, 0), (2, 0)})
FAT = Staircase({(0, 0), (1, 0), (0, 1)})


def test_text_format():
    assert str(FAT) == "[2,1]"
    assert str(ROW3) == "[1,1,1]"
    assert S("[2,1]") == FAT and S("[]") == Staircase()
    assert ROW3.transpose() == S("[3]")


def test_invalid_staircases_rejected():
    with pytest.raises(ValueError):
        Staircase({(1, 0)})
    with pytest.raises(ValueError):
        Staircase.from_partition([1, 2])


def test_enumerate_examples():
    assert enumerate_staircases(0) == [Staircase()]
    assert {str(E) for E in enumerate_staircases(3)} == {"[3]", "[2,1]", "[1,1,1]"}
    assert len(enumerate_staircases(6)) == 11


@pytest.mark.parametrize("n", range(11))
def test_enumeration_counts_and_closure(n):
    found = enumerate_staircases(n)
    assert len(found) == partition_count(n)
    assert len(set(found)) == len(found)
    if n <= 7:
        assert {E.cells for E in found} == staircases_by_growth(n)


def test_clefts_examples():
    assert clefts(Staircase()) == [(0, 0)]
    assert clefts(Staircase({(0, 0), (1, 0)})) == [(0, 1), (2, 0)]
    assert clefts(FAT) == [(0, 2), (1, 1), (2, 0)]


def test_clefts_satisfy_the_definition():
    for n in range(1, 7):
        for E in enumerate_staircases(n):
            expected = sorted((a, b) for a in range(n + 2) for b in range(n + 2)
                              if (a, b) not in E and (a == 0 or (a - 1, b) in E) and (b == 0 or (a, b - 1) in E))
            assert clefts(E) == expected


def test_cleft_couple_examples():
    assert len(cleft_couples(S("[1]"))) == 2
    assert len(cleft_couples(FAT)) == 6
    assert len(cleft_couples(ROW3)) == 6
    with pytest.raises(ValueError):
        cleft_couples(Staircase())
    assert all(isinstance(c, CleftCouple) and c.axis in "xy" for c in cleft_couples(FAT))


@pytest.mark.parametrize("n", range(1, 9))
def test_cleft_couples_count_twice_colength(n):
    for E in enumerate_staircases(n):
        assert len(cleft_couples(E)) == 2 * n


def test_tangent_characters_of_a_reduced_point():
    assert sorted(tangent_characters(S("[1]"), X, Y)) == sorted([Character(-1, 0), Character(0, -1)])


def test_fat_point_characters():
    ws = tangent_characters(FAT, X, Y)
    assert len(ws) == 6 and not any(w.is_zero() for w in ws)
    # pairing with (1, 1) never vanishes: the fat point is isolated for the diagonal subtorus
    assert sum(1 for w in ws if w.a + w.b == 0) == 0
    # the curvilinear row moves in a P^1 there, one invariant direction
    assert sum(1 for w in tangent_characters(ROW3, X, Y) if w.a + w.b == 0) == 1


def test_degenerate_chart_rejected():
    with pytest.raises(ValueError):
        tangent_characters(FAT, Character(1, 0), Character(2, 0))


@pytest.mark.parametrize("n", range(1, 7))
def test_tangent_characters_match_hom_oracle(n):
    charts = [(X, Y), (Character(-1, 1), Character(-1, 0)), (Character(2, 1), Character(1, 1))]
    for E in enumerate_staircases(n):
        for cx, cy in charts:
            assert sorted(tangent_characters(E, cx, cy)) == tangent_oracle(E, cx, cy)


def test_weighted_hilbert_function_examples():
    assert weighted_hilbert_function(FAT, 1, 1).values == (1, 2)
    assert weighted_hilbert_function(ROW3, 1, 1).values == (1, 1, 1)
    E = S("[3,2,2,1]")
    assert weighted_hilbert_function(E, 1, 0).values == E.heights
    assert weighted_hilbert_function(E, 2, 0).values == E.heights  # weights are gcd-normalised


def test_hilbert_function_validation():
    with pytest.raises(ValueError):
        WeightedHilbertFunction.make((0, 0), [1])
    with pytest.raises(ValueError):
        WeightedHilbertFunction((2, 4), (1,))
    assert WeightedHilbertFunction.make((2, 4), [1]).weights == (1, 2)


def test_ideals_with_hilbert_function():
    H11 = WeightedHilbertFunction.make((1, 1), [1, 1])
    assert set(enumerate_ideals_with_hilbert_function(H11)) == {S("[1,1]"), S("[2]")}
    H111 = WeightedHilbertFunction.make((1, 1), [1, 1, 1])
    # only the two curvilinear staircases: {1, x, xy} is not closed under division
    assert set(enumerate_ideals_with_hilbert_function(H111)) == {ROW3, S("[3]")}
    assert enumerate_ideals_with_hilbert_function(WeightedHilbertFunction.make((1, 1), [2, 1])) == []


@given(st.integers(1, 8).flatmap(lambda n: st.sampled_from(enumerate_staircases(n))),
       st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(lambda w: w != (0, 0)))
@settings(max_examples=60, deadline=None)
def test_hilbert_function_total(E, w):
    assert weighted_hilbert_function(E, *w).total == len(E)


# --- reverse plane partitions and linkage ----------------------------------

def test_rpp_validation():
    with pytest.raises(ValueError):
        ReversePlanePartition(S("[2]"), {(0, 0): 1, (0, 1): 0})
    with pytest.raises(ValueError):
        ReversePlanePartition(S("[1]"), {(0, 0): -1})


def test_linkage_examples():
    for E in enumerate_staircases(4):
        rpp = linkage(E, E)
        assert rpp is not None and rpp.is_zero()
    # the column {1, y, y^2} slides onto the row {1, x, x^2}
    rpp = linkage(ROW3, S("[3]"))
    assert rpp.entries == {(0, 0): 0, (0, 1): 1, (0, 2): 2}
    # moves stay on anti-diagonals, so different Hilbert functions never link
    assert linkage(ROW3, FAT) is None
    assert linkage(S("[3]"), ROW3) is None
    with pytest.raises(ValueError):
        linkage(S("[1]"), S("[2]"))


def test_rpp_printing():
    rpp = linkage(ROW3, S("[3]"))
    assert str(rpp) == "0\n1\n2"


@pytest.mark.parametrize("n", range(1, 6))
def test_linkage_matches_brute_force(n):
    stairs = enumerate_staircases(n)
    for I, J in itertools.product(stairs, stairs):
        rpp = linkage(I, J)
        assert (rpp is not None) == linkage_exists_brute(I.cells, J.cells)
        if rpp is not None:
            assert is_linkage_witness(I, J, rpp)


def test_complement_examples():
    assert complement(S("[1]")) == Staircase()
    assert complement_in_box(S("[1,1]"), 2) == S("[1,1]")
    assert complement(S("[2]")) == S("[2]")
    with pytest.raises(ValueError):
        complement_in_box(S("[3]"), 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_complement_in_box_is_an_involution(n):
    for m in range(n + 1):
        for E in enumerate_staircases(m):
            if E.fits_in_box(n):
                C = complement_in_box(E, n)
                assert len(C) == n * n - len(E)
                assert complement_in_box(C, n) == E


def test_incidence_examples():
    for E in enumerate_ideals_with_hilbert_function(WeightedHilbertFunction.make((1, 1), [1, 2, 1])):
        assert incidence_necessary(E, E)
    # H = (1,1,1): one direction only
    assert incidence_necessary(ROW3, S("[3]")) != incidence_necessary(S("[3]"), ROW3)
    with pytest.raises(ValueError):
        incidence_necessary(ROW3, FAT)
    with pytest.raises(ValueError):
        incidence_necessary(S("[1]"), S("[2]"))


def _degree3_positions(E):
    return sorted(i for i, j in E.cells if i + j == 3)


def test_incidence_is_bruhat_order_on_grass_2_4():
    H = WeightedHilbertFunction.make((1, 1), [1, 2, 3, 2])
    cells = enumerate_ideals_with_hilbert_function(H)
    assert len(cells) == 6
    for I, J in itertools.product(cells, cells):
        bruhat = all(a >= b for a, b in zip(_degree3_positions(I), _degree3_positions(J)))
        assert incidence_necessary(I, J) == bruhat
