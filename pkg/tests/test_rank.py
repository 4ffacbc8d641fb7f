import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import all_rows, dense, rank_by_minors
from ryser.circulant import circm, gram
from ryser.errors import DependentBasis, InvalidArgument, PreconditionViolation
from ryser.rank import (
    Rank1Class,
    alternating_phase,
    check_rank_gram_equality,
    coefficient_trichotomy,
    consecutive_equal_rows_implies_constant,
    first_equals_third_sum,
    matrix_rank,
    rank,
    rank1_structure,
    rank2_coefficients,
    row3_coefficients,
)


def test_rank_examples():
    assert rank(circm(1, 1, 1, 1)).rank == 1
    assert rank(circm(1, -1)).rank == 1
    assert rank(circm(1, 1, -1, -1)).rank == 2
    assert rank_by_minors(dense((1, 1, -1, -1))) == 2


def test_pivot_rows_deterministic():
    cert = rank(circm(1, 1, -1, -1))
    assert cert.pivot_rows == (1, 2)
    assert rank(circm(0, 1, 0)).pivot_rows == (1, 2, 3)
    assert rank(circm(0, 0, 0)).rank == 0


def test_dependency_certificate():
    cert = rank(circm(1, 1, -1, -1))
    a, b = cert.dependency
    r1, r2, r3 = circm(1, 1, -1, -1).rows()[:3]
    assert all(a * x + b * y == z for x, y, z in zip(r1, r2, r3))
    assert (a, b) == (Fraction(-1), Fraction(0))
    assert rank(circm(1, 2, 3, 4)).dependency is None


def test_certificate_serialises():
    d = rank(circm(1, 1, -1, -1)).to_dict()
    assert d == {"rank": 2, "pivot_rows": [1, 2],
                 "dependency": {"a_num": -1, "a_den": 1, "b_num": 0, "b_den": 1}}


@pytest.mark.parametrize("n", range(1, 9))
def test_rank_matches_minor_oracle_exhaustive(n):
    for r in all_rows(n):
        assert rank(circm(r)).rank == rank_by_minors(dense(r)), r


def test_rank_matches_minor_oracle_random_rationals():
    rng = random.Random(0)
    for _ in range(1000):
        k = rng.randint(1, 6)
        # small support so that singular matrices actually occur
        row = [Fraction(rng.randint(-2, 2), rng.randint(1, 3)) if rng.random() < 0.7 else 0 for _ in range(k)]
        assert rank(circm(row)).rank == rank_by_minors(dense(row)), row


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_matrix_rank_general(rows):
    assert matrix_rank(rows)[0] == rank_by_minors(rows)


# --- rank-1 structure

@pytest.mark.parametrize("row,cls", [
    ((1,) * 6, Rank1Class.CONSTANT_PLUS),
    ((-1,) * 4, Rank1Class.CONSTANT_MINUS),
    ((1, -1, 1, -1), Rank1Class.ALTERNATING),
    ((-1, 1, -1, 1, -1, 1), Rank1Class.ALTERNATING),
    ((1, 1, -1, -1), Rank1Class.NOT_RANK1),
])
def test_rank1_structure_examples(row, cls):
    assert rank1_structure(row) is cls


def test_alternating_sum_zero_and_phase():
    assert sum((1, -1, 1, -1)) == 0
    assert alternating_phase((1, -1, 1, -1)) == 1
    assert alternating_phase((-1, 1)) == -1
    assert alternating_phase((1, 1)) is None


def test_rank1_odd_rejected():
    with pytest.raises(InvalidArgument):
        rank1_structure((1, 1, 1))


@pytest.mark.parametrize("n", range(2, 13, 2))
def test_rank1_structure_iff_rank_one(n):
    for r in all_rows(n):
        structured = rank1_structure(r) is not Rank1Class.NOT_RANK1
        assert structured == (rank(circm(r)).rank == 1), r


# --- rank-2 coefficients

def test_rank2_rejects_rank1():
    with pytest.raises(PreconditionViolation):
        rank2_coefficients((1, -1, 1, -1, 1, -1))


def test_rank2_rejects_short_or_odd():
    with pytest.raises(InvalidArgument):
        rank2_coefficients((1, 1, -1, -1))
    with pytest.raises(InvalidArgument):
        rank2_coefficients((1, 1, -1, -1, 1, 1, -1))


def test_rank2_example_row_not_rank2():
    # (1,1,1,-1,1,-1,1,-1) has nonzero sum but is not rank 2, so the lemma is silent
    row = (1, 1, 1, -1, 1, -1, 1, -1)
    assert rank(circm(row)).rank != 2
    with pytest.raises(PreconditionViolation):
        rank2_coefficients(row)


def test_rank2_sign_rows_have_zero_sum():
    # exhaustive: every rank-2 sign circulant of length <= 12 is the period-4
    # pattern (x, y, -x, -y), whose sum is 0, so the a+b=1 hypothesis never fires
    found = []
    for n in range(6, 13, 2):
        for r in all_rows(n):
            if rank(circm(r)).rank == 2:
                found.append(r)
                assert sum(r) == 0
                assert all(r[i + 2] == -r[i] for i in range(n - 2))
                a, b = rank2_coefficients(r)
                assert (a, b) == (-1, 0)
    assert len(found) == 8  # lengths 8 and 12, four phases each


def test_row3_coefficients_rank2_integer():
    # constant 3 plus alternating 1 -> rank 2, sum 18
    c = circm([4, 2] * 3)
    a, b = row3_coefficients(c)
    assert a + b == 1
    assert (a, b) == (1, 0)


def test_row3_dependent_basis():
    with pytest.raises(PreconditionViolation):
        row3_coefficients(circm(1, 1, 1, 1))


def test_dependent_basis_is_distinct_error():
    # unreachable at rank 2 (row 2 = c*row 1 propagates to every row), kept distinct for callers
    assert issubclass(DependentBasis, PreconditionViolation)


@given(st.integers(1, 4), st.integers(-4, 4).filter(bool), st.integers(-4, 4).filter(bool))
def test_a_plus_b_for_constant_plus_alternating(half, c, a):
    row = [c + (a if i % 2 == 0 else -a) for i in range(2 * half + 4)]
    circ = circm(row)
    if rank(circ).rank == 2 and sum(row) != 0:
        x, y = row3_coefficients(circ)
        assert x + y == 1


# --- trichotomy, consecutive rows, first = third

def test_trichotomy_all_patterns():
    cases = coefficient_trichotomy()
    assert len(cases) == 8
    assert all(c.holds for c in cases)
    unique = [c for c in cases if c.solutions == "unique"]
    assert {(c.a, c.b) for c in unique} == {(0, 1), (1, 0)}


@pytest.mark.parametrize("row", [(1, 1, 1), (1, -1, 1, -1)])
def test_consecutive_examples(row):
    assert consecutive_equal_rows_implies_constant(row)


@pytest.mark.parametrize("n", range(1, 13))
def test_consecutive_exhaustive(n):
    assert all(consecutive_equal_rows_implies_constant(r) for r in all_rows(n))


def test_first_third_examples():
    assert first_equals_third_sum((1, -1, 1, -1, 1, -1)) == 0
    assert first_equals_third_sum((1,) * 6) == 6
    assert first_equals_third_sum((1, 1, -1, -1, 1, 1)) is None


def test_first_third_rejects():
    with pytest.raises(InvalidArgument):
        first_equals_third_sum((1, 1, 1, 1))
    with pytest.raises(InvalidArgument):
        first_equals_third_sum((1,) * 7)


@pytest.mark.parametrize("n", range(6, 13, 2))
def test_first_third_exhaustive(n):
    for r in all_rows(n):
        s = first_equals_third_sum(r)
        if s is not None:
            assert s in (0, n, -n)


# --- rank of Gram

def test_gram_rank_examples():
    assert check_rank_gram_equality(circm(1, -1, 1, -1))
    assert rank(gram(circm(1, -1, 1, -1))).rank == 1
    assert check_rank_gram_equality(circm(1, 1, -1, -1))
    assert rank(gram(circm(1, 1, -1, -1))).rank == 2


@pytest.mark.parametrize("n", range(1, 11))
def test_gram_rank_exhaustive(n):
    assert all(check_rank_gram_equality(circm(r)) for r in all_rows(n))
