"""Coset vectors, quotient structure and the maximal-index search."""

import random
from fractions import Fraction

import pytest

from latquot.codes import c9, weight_distribution
from latquot.construct import centred_cubic, named, zd_lift, zn
from latquot.core import GramLattice, Surd, determinant, inner
from latquot.enumeration import minimum
from latquot.errors import DependentFrame
from latquot.linalg import det_int, hnf_rows, identity_rows, inverse_rational
from latquot.sampling import random_coset, random_gram
from latquot.watson import (
    CosetVector,
    QuotientStructure,
    extract_code,
    maximal_index,
    quotient_generators,
    quotient_structure,
    watson_condition,
    watson_identity,
    watson_index_bound,
)


def frame_gram(L, rows):
    """The sublattice spanned by the rows, as a lattice in its own right."""
    gram = [[inner(L, u, v) for v in rows] for u in rows]
    return GramLattice.from_rows(gram, label="frame")


def test_coset_normalization():
    c = CosetVector(4, (6, 1, -3, 0))
    assert c.a == (2, 1, 1, 0)
    assert (c.n, c.A, c.m) == (4, 4, 3)
    assert c.shells == {1: (1, 2), 2: (0,)}
    assert c.counts == {1: 2, 2: 1}
    assert c.coords() == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), 0)


def test_coset_rejects_degenerate_input():
    with pytest.raises(ValueError):
        CosetVector(1, (1, 1))
    with pytest.raises(ValueError):
        CosetVector(2, (0, 2))
    with pytest.raises(ValueError):
        CosetVector(6, (2, 4, 0))


def test_quotient_structure_validation():
    QuotientStructure(invariant_factors=(2, 4), index=8)
    with pytest.raises(ValueError):
        QuotientStructure(invariant_factors=(2, 3), index=6)
    with pytest.raises(ValueError):
        QuotientStructure(invariant_factors=(2, 2), index=8)
    with pytest.raises(ValueError):
        QuotientStructure(invariant_factors=(1, 2), index=2)


def test_identity_on_a_hand_checked_case():
    # Over Z^2 with e = (e_1 + e_2)/2: each side comes to -1.
    lhs, rhs = watson_identity(zn(2), CosetVector(2, (1, 1)))
    assert lhs == rhs == -1


def test_identity_on_random_instances():
    rand = random.Random(31)
    for _ in range(150):
        n = rand.randint(2, 5)
        L = random_gram(rand, n)
        lhs, rhs = watson_identity(L, random_coset(rand, n))
        assert lhs == rhs


def test_identity_rejects_length_mismatch():
    with pytest.raises(ValueError):
        watson_identity(zn(3), CosetVector(2, (1, 1)))


def test_condition():
    assert watson_condition(CosetVector(2, (1, 1, 1, 1)), 4)
    assert watson_condition(CosetVector(3, (1, 1, 1, 1, 1, 1)), 6)
    # a zero numerator fails even though A = 2d
    assert not watson_condition(CosetVector(2, (1, 1, 1, 1)), 5)
    assert not watson_condition(CosetVector(2, (1, 1, 1)), 3)


def test_index_bound_values():
    assert watson_index_bound(4) == 2
    assert watson_index_bound(5) == Surd(8)
    assert watson_index_bound(5) < 3
    assert watson_index_bound(7) == 8
    assert watson_index_bound(8) == 16
    with pytest.raises(ValueError):
        watson_index_bound(9)


def test_quotient_of_the_centred_cubic_by_the_unit_frame():
    # In the basis (e_1, e_2, e_3, e) the fourth unit vector is
    # 2e - e_1 - e_2 - e_3, and the unit frame has index 2.
    L = centred_cubic(4)
    frame = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (-1, -1, -1, 2)]
    q = quotient_structure(L, frame)
    assert q.index == 2
    assert q.invariant_factors == (2,)

    reps = quotient_generators(L, frame)
    assert [r.d for r in reps] == [2]
    lhs, rhs = watson_identity(frame_gram(L, frame), reps[0])
    assert lhs == rhs

    code = extract_code(L, frame, reps)
    assert (code.d, code.n, code.k) == (2, 4, 1)
    assert weight_distribution(code).counts == ((4, 1),)


def test_quotient_structure_rejects_bad_frames():
    L = zn(3)
    with pytest.raises(DependentFrame):
        quotient_structure(L, [(1, 0, 0), (0, 1, 0)])
    with pytest.raises(DependentFrame):
        quotient_structure(L, [(1, 0, 0), (0, 1, 0), (1, 1, 0)])


def unit_frame_in_lift_coordinates(code):
    """Rows of the unit frame of Z^n written in the basis of the lift."""
    stacked = [[code.d * x for x in row] for row in identity_rows(code.n)]
    stacked += [list(row) for row in code.gen]
    basis = [[Fraction(x, code.d) for x in row] for row in hnf_rows(stacked)]
    rows = []
    for row in inverse_rational(basis):
        assert all(x.denominator == 1 for x in row)
        rows.append(tuple(int(x) for x in row))
    return rows


def test_code_lift_quotient_recovers_the_code_parameters():
    # The unit frame of Z^9 inside the lift of a [9,2] code spans a
    # sublattice of index 4 with elementary quotient (2, 2).
    code = c9()
    L = zd_lift(code, base=zn(9))
    frame = unit_frame_in_lift_coordinates(code)
    q = quotient_structure(L, frame)
    assert q.index == 4
    assert q.invariant_factors == (2, 2)
    extracted = extract_code(L, frame, quotient_generators(L, frame))
    assert (extracted.d, extracted.n, extracted.k) == (2, 9, 2)


def test_maximal_index_of_the_root_lattices():
    e7 = maximal_index(named("E7").lattice)
    assert e7.max_index == 8
    assert e7.witness_structure.invariant_factors == (2, 2, 2)
    assert e7.exhaustive
    assert abs(det_int(e7.witness_frame.vectors)) == 8

    a73 = maximal_index(named("A73").lattice)
    assert (a73.max_index, a73.witness_structure.invariant_factors) == (3, (3,))
    assert a73.exhaustive

    a74 = maximal_index(named("A74").lattice)
    assert (a74.max_index, a74.witness_structure.invariant_factors) == (4, (4,))
    assert a74.exhaustive


def test_a74_code_extraction_round_trip():
    # Extract the quaternary code cut out by the witness frame, then
    # lift it back over the frame: the result must match the original
    # lattice in determinant and minimum.
    L = named("A74").lattice
    report = maximal_index(L)
    frame = report.witness_frame
    reps = quotient_generators(L, frame)
    code = extract_code(L, frame, reps)
    assert code.d == 4 and code.n == 7 and code.k == 1

    lifted = zd_lift(code, base=frame_gram(L, frame.vectors))
    assert determinant(lifted) == determinant(L)
    assert minimum(lifted)[0] == minimum(L)[0] == 8


def test_budget_exhaustion_downgrades_to_a_lower_bound():
    report = maximal_index(named("E7").lattice, budget=3)
    assert not report.exhaustive
    assert report.max_index >= 1
    assert report.witness_structure.index == report.max_index
