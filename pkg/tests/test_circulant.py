from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_rows, dense, is_hadamard_dense, matmul
from ryser.circulant import (
    Circulant,
    SignRow,
    circm,
    eigen_report,
    gram,
    identity,
    is_circulant_hadamard,
    is_row_orthogonal,
    multiply,
    paf,
    row_inner,
    shift_matrix,
    sylvester_hadamard,
    transpose,
)
from ryser.errors import InvalidArgument, ResourceLimit

H3 = circm(1, -1, -1, -1)

ints = st.integers(-5, 5)
fracs = st.fractions(min_value=-3, max_value=3, max_denominator=6)


def circulants(order, elems=ints):
    return st.lists(elems, min_size=order, max_size=order).map(lambda r: circm(r))


# --- SignRow parsing

@pytest.mark.parametrize("text,expected", [
    ("1,-1,-1,-1", (1, -1, -1, -1)),
    (" 1, -1 ,1 ", (1, -1, 1)),
    ("0111", (1, -1, -1, -1)),
    ("1", (1,)),
    ("-1", (-1,)),
    ("+1,-1", (1, -1)),
])
def test_parse(text, expected):
    assert SignRow.parse(text).entries == expected


@pytest.mark.parametrize("text,token", [("1,2,1", "'2'"), ("1,,1", "''"), ("1,x", "'x'")])
def test_parse_names_bad_token(text, token):
    with pytest.raises(InvalidArgument, match=token):
        SignRow.parse(text)


def test_sign_row_rejects_non_signs():
    with pytest.raises(InvalidArgument):
        SignRow((1, 0, 1))
    with pytest.raises(InvalidArgument):
        SignRow(())


def test_bitstring_round_trip():
    r = SignRow((1, -1, -1, 1, -1))
    assert SignRow.parse(r.to_bits()) == r
    assert SignRow.parse(r.to_text()) == r


# --- circm

def test_shift_row_two():
    assert circm(0, 1, 0, 0).row(2) == (0, 0, 1, 0)


def test_h3_row_two():
    assert H3.row(2) == (-1, 1, -1, -1)


def test_order_one():
    c = circm(5)
    assert c.order == 1 and c.to_lists() == [[5]]


def test_empty_rejected():
    with pytest.raises(InvalidArgument):
        circm()


@given(st.lists(ints, min_size=1, max_size=9))
def test_entry_formula_matches_dense(row):
    c = circm(row)
    d = dense(row)
    k = len(row)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            assert c.entry(i, j) == d[i - 1][j - 1] == row[(j - i) % k]


@given(st.lists(ints, min_size=2, max_size=9))
def test_row2_is_first_row_of_shift_times_c(row):
    c = circm(row)
    assert multiply(shift_matrix(c.order), c).row(1) == c.row(2)


def test_index_out_of_range():
    with pytest.raises(InvalidArgument):
        H3.row(5)
    with pytest.raises(InvalidArgument):
        row_inner(H3, 0, 1)


# --- multiply / transpose / gram

def test_shift_squared():
    assert multiply(circm(0, 1, 0, 0), circm(0, 1, 0, 0)) == circm(0, 0, 1, 0)


def test_h3_times_transpose():
    assert multiply(H3, transpose(H3)) == circm(4, 0, 0, 0)


def test_two_by_two_product():
    # hand multiplication: [[1,1],[1,1]] @ [[1,-1],[-1,1]] = 0
    assert multiply(circm(1, 1), circm(1, -1)) == circm(0, 0)


def test_order_mismatch():
    with pytest.raises(InvalidArgument):
        multiply(circm(1, 2), circm(1, 2, 3))


@given(st.integers(1, 8).flatmap(lambda k: st.tuples(circulants(k, fracs), circulants(k, fracs))))
def test_multiply_matches_dense(pair):
    a, b = pair
    assert multiply(a, b).to_lists() == matmul(a.to_lists(), b.to_lists())


@settings(max_examples=60)
@given(st.integers(1, 16).flatmap(lambda k: st.tuples(circulants(k), circulants(k), circulants(k))))
def test_multiply_associative_commutative(triple):
    a, b, c = triple
    assert multiply(a, b) == multiply(b, a)
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_transpose_examples():
    assert transpose(circm(0, 1, 0, 0)) == circm(0, 0, 0, 1)
    assert transpose(circm(1, 2, 3)) == circm(1, 3, 2)


@given(st.integers(1, 9).flatmap(lambda k: circulants(k, fracs)))
def test_transpose_involution_and_dense(a):
    assert transpose(transpose(a)) == a
    d = a.to_lists()
    assert transpose(a).to_lists() == [list(col) for col in zip(*d)]


def test_gram_examples():
    assert gram(circm(1, 1, 1, 1)) == circm(4, 4, 4, 4)
    assert gram(circm(1, -1)) == circm(2, -2)
    assert gram(circm(1, -1, 1, -1)) == circm(4, -4, 4, -4)


@given(st.integers(1, 10).flatmap(lambda k: st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k)))
def test_gram_of_sign_row(row):
    c = circm(row)
    g = gram(c)
    assert g.first_row[0] == len(row)
    for j in range(1, len(row) + 1):
        assert g.entry(1, j) == row_inner(c, 1, j)


def test_row_inner_examples():
    assert row_inner(H3, 1, 2) == 0
    assert row_inner(H3, 1, 3) == 0
    assert all(row_inner(H3, i, i) == 4 for i in range(1, 5))


def test_rational_entries_stay_exact():
    c = circm(Fraction(1, 2), Fraction(-1, 3))
    assert multiply(c, c).first_row == (Fraction(1, 4) + Fraction(1, 9), Fraction(-1, 3))


# --- paf and the Hadamard predicate

@pytest.mark.parametrize("row,values", [
    ((1, -1, -1, -1), (4, 0, 0, 0)),
    ((1, 1, 1, 1), (4, 4, 4, 4)),
    ((1, 1, -1, -1), (4, 0, -4, 0)),
])
def test_paf_examples(row, values):
    assert paf(row).values == values


@given(st.integers(1, 14).flatmap(lambda k: st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k)))
def test_paf_invariants(row):
    v = paf(row).values
    k = len(row)
    assert v[0] == k
    assert all(v[t] == v[k - t] for t in range(1, k))
    if k % 2 == 0:
        assert all((x - k) % 4 == 0 for x in v)
    c = circm(row)
    assert all(v[t] == row_inner(c, 1, t + 1) for t in range(k))


def test_hadamard_examples():
    assert is_circulant_hadamard((1, -1, -1, -1))
    assert not is_circulant_hadamard((1, 1, 1, 1))
    assert not any(is_circulant_hadamard(r) for r in all_rows(8))


@pytest.mark.parametrize("n", range(1, 13))
def test_hadamard_predicate_matches_product(n):
    for r in all_rows(n):
        c = circm(r)
        by_product = multiply(c, transpose(c)) == identity(n).scale(n)
        assert is_circulant_hadamard(r) == by_product == is_hadamard_dense(r)


# --- eigenvalue diagnostics

def test_eigen_h3():
    rep = eigen_report((1, -1, -1, -1))
    assert rep.row_sum == -2
    assert all(abs(m - 2.0) <= 1e-9 for m in rep.magnitudes)


def test_eigen_order_two():
    rep = eigen_report((1, 1))
    assert rep.row_sum == 2
    assert rep.magnitudes[0] == pytest.approx(2.0, abs=1e-9)
    assert rep.magnitudes[1] == pytest.approx(0.0, abs=1e-9)


def test_eigen_balanced_row():
    assert eigen_report((1, 1, -1, -1)).row_sum == 0


@given(st.integers(1, 12).flatmap(lambda k: st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k)))
def test_eigen_matches_fft_and_paf(row):
    rep = eigen_report(row)
    assert rep.row_sum == sum(row)
    assert np.allclose(rep.magnitudes, np.abs(np.fft.fft(row)), atol=1e-9)
    # |R(w^t)|^2 is the DFT of the autocorrelation
    assert np.allclose(np.square(rep.magnitudes), np.fft.fft(paf(row).values).real, atol=1e-8)


# --- Sylvester

def test_sylvester_small():
    assert sylvester_hadamard(0).tolist() == [[1]]
    assert sylvester_hadamard(1).tolist() == [[1, 1], [1, -1]]


@pytest.mark.parametrize("p", range(0, 8))
def test_sylvester_orthogonal(p):
    h = sylvester_hadamard(p)
    assert h.shape == (2 ** p, 2 ** p)
    assert is_row_orthogonal(h)


def test_sylvester_limits():
    with pytest.raises(ResourceLimit):
        sylvester_hadamard(13)
    with pytest.raises(InvalidArgument):
        sylvester_hadamard(-1)


def test_circulant_is_hashable_value():
    assert len({circm(1, 2), circm(1, 2), Circulant((1, 2))}) == 1
