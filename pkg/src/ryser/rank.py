"""Exact rank over Q and the rank-1 / rank-2 structure of sign circulants."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .circulant import Circulant, Scalar, as_sign_row, circm, gram
from .errors import DependentBasis, InvalidArgument, LemmaViolation, PreconditionViolation


@dataclass(frozen=True)
class RankCertificate:
    rank: int
    pivot_rows: tuple[int, ...]
    # row 3 = a*row 1 + b*row 2; unique only when rows 1 and 2 are independent
    dependency: Optional[tuple[Fraction, Fraction]] = None

    def to_dict(self) -> dict:
        dep = None
        if self.dependency is not None:
            a, b = self.dependency
            dep = {"a_num": a.numerator, "a_den": a.denominator,
                   "b_num": b.numerator, "b_den": b.denominator}
        return {"rank": self.rank, "pivot_rows": list(self.pivot_rows), "dependency": dep}


def _integer_rows(rows: Sequence[Sequence[Scalar]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def matrix_rank(rows: Sequence[Sequence[Scalar]]) -> tuple[int, tuple[int, ...]]:
    """Bareiss fraction-free elimination; returns (rank, 1-based pivot rows).

    Pivot rule: for each column left to right, the first remaining row with a
    nonzero entry.  Every intermediate entry is a minor of the input, so the
    division by the previous pivot is exact.
    """
    m = _integer_rows(rows)
    if not m:
        return 0, ()
    order = list(range(1, len(m) + 1))
    n_rows, n_cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
            order[p], order[r] = order[r], order[p]
        piv = m[r][c]
        for i in range(r + 1, n_rows):
            mi = m[i]
            f = mi[c]
            for j in range(c + 1, n_cols):
                q, rem = divmod(piv * mi[j] - f * m[r][j], prev)
                assert rem == 0
                mi[j] = q
            mi[c] = 0
        prev = piv
        r += 1
    return r, tuple(sorted(order[:r]))


def _solve_two_rows(r1, r2, target) -> Optional[tuple[Fraction, Fraction]]:
    """Solve target = a*r1 + b*r2 using the first invertible 2x2 column block."""
    k = len(r1)
    for p in range(k):
        for q in range(p + 1, k):
            det = r1[p] * r2[q] - r1[q] * r2[p]
            if det == 0:
                continue
            a = Fraction(target[p] * r2[q] - target[q] * r2[p], det)
            b = Fraction(r1[p] * target[q] - r1[q] * target[p], det)
            if all(a * x + b * y == t for x, y, t in zip(r1, r2, target)):
                return a, b
            return None
    return None


def _solve_one_row(r1, target) -> Optional[Fraction]:
    p = next((i for i, x in enumerate(r1) if x != 0), None)
    if p is None:
        return Fraction(0) if not any(target) else None
    a = Fraction(target[p]) / r1[p]
    return a if all(a * x == t for x, t in zip(r1, target)) else None


def rank(a: Circulant) -> RankCertificate:
    rows = a.rows()
    rk, pivots = matrix_rank(rows)
    dep = None
    if a.order >= 3 and rk <= 2:
        r1, r2, r3 = rows[0], rows[1], rows[2]
        if matrix_rank([r1, r2])[0] == 2:
            dep = _solve_two_rows(r1, r2, r3)
        else:
            x = _solve_one_row(r1, r3)
            dep = None if x is None else (x, Fraction(0))
    return RankCertificate(rk, pivots, dep)


class Rank1Class(str, enum.Enum):
    CONSTANT_PLUS = "constant_plus"
    CONSTANT_MINUS = "constant_minus"
    ALTERNATING = "alternating"
    NOT_RANK1 = "not_rank1"


def _require_even(row, minimum: int = 2):
    h = as_sign_row(row)
    if h.length % 2 or h.length < minimum:
        raise InvalidArgument(f"need even length >= {minimum}, got {h.length}")
    return h


def rank1_structure(row) -> Rank1Class:
    """Classify a sign circulant of even order by the rank-1 pattern, if any.

    Rank 1 forces row 2 = +-row 1, which leaves only the two constant rows and
    the two alternating phases.
    """
    h = _require_even(row).entries
    if all(x == 1 for x in h):
        return Rank1Class.CONSTANT_PLUS
    if all(x == -1 for x in h):
        return Rank1Class.CONSTANT_MINUS
    if all(h[i] == -h[i - 1] for i in range(1, len(h))):
        return Rank1Class.ALTERNATING
    return Rank1Class.NOT_RANK1


def alternating_phase(row) -> Optional[int]:
    """+1 for (+,-,+,-,...), -1 for (-,+,-,+,...), None when not alternating."""
    if rank1_structure(row) is not Rank1Class.ALTERNATING:
        return None
    return as_sign_row(row)[0]


def row3_coefficients(c: Circulant) -> tuple[Fraction, Fraction]:
    """Rational (a, b) with row 3 = a*row 1 + b*row 2 for a rank-2 circulant.

    When the entry sum is nonzero, a + b must equal 1; a violation raises
    LemmaViolation.
    """
    if c.order < 3:
        raise InvalidArgument(f"need order >= 3, got {c.order}")
    rk, _ = matrix_rank(c.rows())
    if rk != 2:
        raise PreconditionViolation(f"rank is {rk}, need 2")
    r1, r2, r3 = c.row(1), c.row(2), c.row(3)
    if matrix_rank([r1, r2])[0] < 2:
        raise DependentBasis("rows 1 and 2 are dependent; choose another basis")
    sol = _solve_two_rows(r1, r2, r3)
    if sol is None:
        raise LemmaViolation("row 3 is outside the span of rows 1, 2 despite rank 2")
    a, b = sol
    s = sum(c.first_row)
    if s != 0 and a + b != 1:
        raise LemmaViolation(f"a + b = {a + b} for nonzero sum {s}")
    return a, b


def rank2_coefficients(row) -> tuple[Fraction, Fraction]:
    """Sign-row entry point for :func:`row3_coefficients`; needs even length >= 6."""
    h = _require_even(row, 6)
    return row3_coefficients(circm(h.entries))


def check_rank_gram_equality(a: Circulant) -> bool:
    return rank(gram(a)).rank == rank(a).rank


def consecutive_equal_rows_implies_constant(row) -> bool:
    h = as_sign_row(row).entries
    c = circm(h)
    if c.order == 1 or c.row(1) != c.row(2):
        return True
    return len(set(h)) == 1


def first_equals_third_sum(row) -> Optional[int]:
    h = _require_even(row, 6)
    c = circm(h.entries)
    if c.row(1) != c.row(3):
        return None
    s = h.row_sum
    k = h.length // 2
    if s not in (0, 2 * k, -2 * k):
        raise LemmaViolation(f"row 1 = row 3 but sum {s} not in {{0, {2 * k}, {-2 * k}}}")
    return s


@dataclass(frozen=True)
class TrichotomyCase:
    entries: tuple[int, int, int]  # (h_k, h_l, h_m)
    solutions: str  # "none", "unique" or "all"
    a: Optional[Fraction]
    b: Optional[Fraction]
    holds: bool


def coefficient_trichotomy() -> list[TrichotomyCase]:
    """Solve h_k = a*h_l + b*h_m with a + b = 1 for all 8 sign patterns.

    Substituting b = 1 - a gives h_k - h_m = a*(h_l - h_m).  Each case records
    whether the conclusion (all equal, or (a, b) in {(0,1), (1,0)}) holds.
    """
    cases = []
    for hk in (1, -1):
        for hl in (1, -1):
            for hm in (1, -1):
                all_equal = hk == hl == hm
                if hl != hm:
                    a = Fraction(hk - hm, hl - hm)
                    b = 1 - a
                    ok = all_equal or (a, b) in ((0, 1), (1, 0))
                    cases.append(TrichotomyCase((hk, hl, hm), "unique", a, b, ok))
                elif hk == hl:
                    # any a works; the three entries coincide
                    cases.append(TrichotomyCase((hk, hl, hm), "all", None, None, all_equal))
                else:
                    cases.append(TrichotomyCase((hk, hl, hm), "none", None, None, True))
    return cases
