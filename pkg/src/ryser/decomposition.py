"""Odd/even split of a circulant candidate and the invariants built on it.

For a first row ``h = (h_1, ..., h_n)`` with ``n`` even, ``E1`` is the circulant
on the odd positions ``(h_1, h_3, ...)`` and ``E2`` the one on the even
positions ``(h_2, h_4, ...)``.  ``R_j``, ``S_j``, ``T_j`` are the rows of
``E1``, ``E2`` and ``H = circm(h)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import f2
from .circulant import Circulant, SignRow, as_sign_row, circm, gram, is_circulant_hadamard, multiply, paf, rotate
from .errors import InvalidArgument, LemmaViolation, PreconditionViolation
from .rank import RankCertificate, matrix_rank, rank


def _circ_dict(c: Circulant) -> list:
    return [x if isinstance(x, int) else str(x) for x in c.first_row]


@dataclass(frozen=True)
class Decomposition:
    e1: Circulant
    e2: Circulant
    lambda1: int
    lambda2: int
    g1: Circulant
    g2: Circulant
    rank1: RankCertificate
    rank2: RankCertificate
    k1: Circulant
    k2: Circulant

    def to_dict(self) -> dict:
        return {
            "e1": _circ_dict(self.e1),
            "e2": _circ_dict(self.e2),
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "g1": _circ_dict(self.g1),
            "g2": _circ_dict(self.g2),
            "rank1": self.rank1.to_dict(),
            "rank2": self.rank2.to_dict(),
            "k1": _circ_dict(self.k1),
            "k2": _circ_dict(self.k2),
        }


def _even_row(row, minimum: int = 4) -> SignRow:
    h = as_sign_row(row)
    if h.length % 2 or h.length < minimum:
        raise InvalidArgument(f"need even length >= {minimum}, got {h.length}")
    return h


def decompose(row) -> Decomposition:
    h = _even_row(row).entries
    odd, even = h[0::2], h[1::2]
    e1, e2 = circm(odd), circm(even)
    half = Fraction(1, 2)
    return Decomposition(
        e1=e1,
        e2=e2,
        lambda1=sum(odd),
        lambda2=sum(even),
        g1=gram(e1),
        g2=gram(e2),
        rank1=rank(e1),
        rank2=rank(e2),
        k1=(e1 + e2).scale(half),
        k2=(e1 - e2).scale(half),
    )


def interleave(odd, even) -> SignRow:
    """Inverse of the odd/even split."""
    odd, even = tuple(odd), tuple(even)
    if len(odd) != len(even):
        raise InvalidArgument(f"block lengths differ: {len(odd)} vs {len(even)}")
    out = []
    for x, y in zip(odd, even):
        out += [x, y]
    return SignRow(tuple(out))


def shift(row) -> SignRow:
    """First row of pi*H, i.e. row 2 of H.  Swaps the roles of the odd and even blocks."""
    return SignRow(rotate(as_sign_row(row).entries, 1))


def graphr_rowwise(row) -> list[tuple[int, int]]:
    """Pairs (<R_1,R_j> + <S_1,S_j>, <T_1,T_{2j-1}>) for j = 1..n/2."""
    h = _even_row(row)
    p = paf(h).values
    p1 = paf(h.entries[0::2]).values
    p2 = paf(h.entries[1::2]).values
    return [(p1[s] + p2[s], p[2 * s]) for s in range(h.length // 2)]


def graphr_identity(row) -> int:
    """sum_{j != 1} <R_1, R_j> + sum_{j != 1} <S_1, S_j>.

    Equal to the sum of <T_1, T_{2j-1}> over j != 1, which vanishes for every
    circulant Hadamard row; a nonzero value on a Hadamard row raises LemmaViolation.
    """
    pairs = graphr_rowwise(row)
    total = sum(lhs for lhs, _ in pairs[1:])
    if is_circulant_hadamard(row) and total != 0:
        raise LemmaViolation(f"graphR sum is {total} on a Hadamard row")
    return total


@dataclass(frozen=True)
class MisscaseRecord:
    lambda1: int
    lambda2: int
    product: int
    sum_of_squares: int
    # after the optional single shift, the odd-block sum is the zero one
    shifted: bool
    lambda_odd_zero: int
    lambda_even_abs: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def misscase_check(row) -> MisscaseRecord:
    h = _even_row(row)
    if not is_circulant_hadamard(h):
        raise PreconditionViolation("row is not circulant Hadamard")
    l1, l2 = sum(h.entries[0::2]), sum(h.entries[1::2])
    rec_product, rec_sq = l1 * l2, l1 * l1 + l2 * l2
    if rec_product != 0:
        raise LemmaViolation(f"lambda1*lambda2 = {rec_product}")
    if rec_sq != h.length:
        raise LemmaViolation(f"lambda1^2 + lambda2^2 = {rec_sq} != {h.length}")
    shifted = l1 != 0
    # shifting by one swaps the two block sums
    zero, other = (l2, l1) if shifted else (l1, l2)
    return MisscaseRecord(l1, l2, rec_product, rec_sq, shifted, zero, abs(other))


@dataclass(frozen=True)
class ProjectionRecord:
    k1_is_projection: bool
    k2_is_projection: bool
    k1_squared: Circulant
    k2_squared: Circulant

    def to_dict(self) -> dict:
        return {
            "k1_is_projection": self.k1_is_projection,
            "k2_is_projection": self.k2_is_projection,
            "k1_squared": _circ_dict(self.k1_squared),
            "k2_squared": _circ_dict(self.k2_squared),
        }


def projection_check(row) -> ProjectionRecord:
    d = decompose(row)
    s1, s2 = multiply(d.k1, d.k1), multiply(d.k2, d.k2)
    return ProjectionRecord(s1 == d.k1, s2 == d.k2, s1, s2)


def reduce_mod2(c: Circulant) -> f2.F2Circulant:
    """Parity reduction of an integer circulant (-1 maps to 1)."""
    if not c.is_integral():
        raise InvalidArgument(f"non-integral circulant {c!r} has no mod-2 reduction")
    return f2.F2Circulant.from_entries([x % 2 for x in c.first_row])


@dataclass(frozen=True)
class Mod2Record:
    k1_ok: bool
    k2_ok: bool
    k1_bits: str
    k2_bits: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def mod2_symmetric_orthogonal(row) -> Mod2Record:
    d = decompose(row)
    m1, m2 = reduce_mod2(d.k1), reduce_mod2(d.k2)
    return Mod2Record(
        f2.is_symmetric(m1) and f2.is_orthogonal(m1),
        f2.is_symmetric(m2) and f2.is_orthogonal(m2),
        m1.to_bitstring(),
        m2.to_bitstring(),
    )


@dataclass(frozen=True)
class ConditionProfile:
    cond_a: bool
    cond_b: bool
    cond_c: bool
    cond_d: bool
    ranks: tuple[int, int]
    gram_abs_uniform: bool
    graphr_sum: int
    lambda_product: int

    def to_dict(self) -> dict:
        return {
            "cond_a": self.cond_a,
            "cond_b": self.cond_b,
            "cond_c": self.cond_c,
            "cond_d": self.cond_d,
            "ranks": list(self.ranks),
            "gram_abs_uniform": self.gram_abs_uniform,
            "graphr_sum": self.graphr_sum,
            "lambda_product": self.lambda_product,
        }


def _rows_dependent(c: Circulant) -> bool:
    return matrix_rank([c.row(1), c.row(2)])[0] <= 1


def classify_conditions(row) -> ConditionProfile:
    """Evaluate the four sufficient conditions on any even-length row.

    The conditions are computed independently of whether the row is Hadamard.
    """
    d = decompose(row)
    ranks = (d.rank1.rank, d.rank2.rank)
    abs_entries = {abs(x) for x in d.g1.first_row + d.g2.first_row}
    uniform = len(abs_entries) == 1
    p1, p2 = paf(d.e1.first_row).values, paf(d.e2.first_row).values
    return ConditionProfile(
        cond_a=ranks == (1, 1),
        cond_b=uniform,
        cond_c=_rows_dependent(d.e1) and _rows_dependent(d.e2),
        cond_d=abs(p1[1]) == abs(p1[0]) and abs(p2[1]) == abs(p2[0]),
        ranks=ranks,
        gram_abs_uniform=uniform,
        graphr_sum=sum(p1[1:]) + sum(p2[1:]),
        lambda_product=d.lambda1 * d.lambda2,
    )


def expected_regular_counts(n: int) -> Optional[tuple[int, int]]:
    """(2h^2 + h, 2h^2 - h) when n = 4h^2, else None."""
    if n < 4 or n % 4:
        return None
    r = math.isqrt(n // 4)
    if r * r * 4 != n:
        return None
    return 2 * r * r + r, 2 * r * r - r


@dataclass(frozen=True)
class RegularityProfile:
    n: int
    h: Optional[int]
    positive_count: int
    negative_count: int
    row_sum: int
    consistent: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def regularity_profile(row) -> RegularityProfile:
    h = as_sign_row(row)
    if not is_circulant_hadamard(h):
        raise PreconditionViolation("row is not circulant Hadamard")
    n = h.length
    pos = sum(1 for x in h if x == 1)
    neg = n - pos
    counts = expected_regular_counts(n)
    hh = None
    consistent = False
    if counts is not None:
        hh = math.isqrt(n // 4)
        big, small = counts
        if hh % 2 == 1:
            consistent = (pos, neg, h.row_sum) in ((big, small, 2 * hh), (small, big, -2 * hh))
    return RegularityProfile(n, hh, pos, neg, h.row_sum, consistent)
