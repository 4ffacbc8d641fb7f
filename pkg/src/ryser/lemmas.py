"""Named verification suites, one per checkable statement, used by ``ryser lemmas``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import coding, decomposition as dec, f2
from .circulant import (
    SignRow,
    all_sign_rows,
    circm,
    eigen_report,
    is_circulant_hadamard,
    is_hadamard_by_product,
    multiply,
    sylvester_hadamard,
)
from .errors import LemmaViolation
from .rank import (
    Rank1Class,
    check_rank_gram_equality,
    coefficient_trichotomy,
    consecutive_equal_rows_implies_constant,
    first_equals_third_sum,
    matrix_rank,
    rank1_structure,
    rank2_coefficients,
    row3_coefficients,
)
from .search import hadamard_mask, reference_search, sign_rows_block

ORDER4 = tuple(
    SignRow(r) for r in [
        (1, -1, -1, -1), (-1, 1, 1, 1), (-1, 1, -1, -1), (1, -1, 1, 1),
        (-1, -1, 1, -1), (1, 1, -1, 1), (-1, -1, -1, 1), (1, 1, 1, -1),
    ]
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    anchor: str
    instances: int
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _even_rows(max_len: int, min_len: int = 2):
    for n in range(min_len, max_len + 1, 2):
        yield from all_sign_rows(n)


def suite_hadamard_predicate(seed: int = 0) -> SuiteResult:
    count, bad = 0, []
    for n in range(1, 13):
        for r in all_sign_rows(n):
            count += 1
            if is_circulant_hadamard(r) != is_hadamard_by_product(r):
                bad.append(r.to_text())
    return SuiteResult("hadamard_predicate", "zero off-peak PAF <=> H H^T = nI", count, not bad, "; ".join(bad[:3]))


def suite_rank_gram(seed: int = 0) -> SuiteResult:
    count, bad = 0, []
    for n in range(1, 9):
        for r in all_sign_rows(n):
            count += 1
            if not check_rank_gram_equality(circm(r.entries)):
                bad.append(r.to_text())
    return SuiteResult("rank_gram", "rank(A A*) = rank(A)", count, not bad, "; ".join(bad[:3]))


def suite_rank1(seed: int = 0) -> SuiteResult:
    count, bad = 0, []
    for r in _even_rows(12):
        count += 1
        structured = rank1_structure(r) is not Rank1Class.NOT_RANK1
        if structured != (matrix_rank(circm(r.entries).rows())[0] == 1):
            bad.append(r.to_text())
    return SuiteResult("rank1", "rank-1 sign circulants are constant or alternating", count, not bad,
                       "; ".join(bad[:3]))


def rank2_integer_family(rng: random.Random, trials: int) -> list[tuple[int, ...]]:
    """Integer rows whose circulant has rank 2 and nonzero entry sum.

    Two families: constant + alternating (eigenvalues at 1 and -1) and
    constant + period-4 (x, y, -x, -y) components restricted to rank 2.
    """
    rows = []
    for _ in range(trials):
        k = 2 * rng.randint(3, 6)
        c = rng.choice([x for x in range(-4, 5) if x])
        if rng.random() < 0.5:
            a = rng.choice([x for x in range(-4, 5) if x])
            rows.append(tuple(c + (a if i % 2 == 0 else -a) for i in range(k)))
        else:
            x, y = rng.randint(-3, 3), rng.randint(-3, 3)
            k = 4 * rng.randint(2, 3)
            pat = (x, y, -x, -y)
            rows.append(tuple(pat[i % 4] for i in range(k)) if (x or y) else tuple([c] * k))
    return [r for r in rows if matrix_rank(circm(r).rows())[0] == 2 and sum(r) != 0]


def suite_rank2(seed: int = 0) -> SuiteResult:
    sign_rows = 0
    try:
        for r in _even_rows(12, 6):
            if matrix_rank(circm(r.entries).rows())[0] != 2 or r.row_sum == 0:
                continue
            sign_rows += 1
            rank2_coefficients(r)
        rng = random.Random(seed)
        ints = rank2_integer_family(rng, 300)
        for r in ints:
            a, b = row3_coefficients(circm(r))
            if a + b != 1:
                raise LemmaViolation(f"a + b = {a + b} for {r}")
    except LemmaViolation as exc:
        return SuiteResult("rank2", "a + b = 1", sign_rows, False, str(exc))
    return SuiteResult("rank2", "a + b = 1", sign_rows + len(ints), True,
                       f"{sign_rows} qualifying sign rows of length <= 12, {len(ints)} integer rows")


def suite_trichotomy(seed: int = 0) -> SuiteResult:
    cases = coefficient_trichotomy()
    return SuiteResult("trichotomy", "(a,b) in {(0,1),(1,0)} or all equal", len(cases),
                       all(c.holds for c in cases))


def suite_consecutive(seed: int = 0) -> SuiteResult:
    count, ok = 0, True
    for n in range(1, 13):
        for r in all_sign_rows(n):
            count += 1
            ok &= consecutive_equal_rows_implies_constant(r)
    return SuiteResult("consecutive", "two consecutive rows equal => constant", count, ok)


def suite_first_third(seed: int = 0) -> SuiteResult:
    count, hits = 0, 0
    try:
        for r in _even_rows(12, 6):
            count += 1
            if first_equals_third_sum(r) is not None:
                hits += 1
    except LemmaViolation as exc:
        return SuiteResult("first_third", "s in {0, 2k, -2k}", count, False, str(exc))
    return SuiteResult("first_third", "s in {0, 2k, -2k}", count, True, f"{hits} rows with row 1 = row 3")


def graphr_rowwise_batch(rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of <R_1,R_j> + <S_1,S_j> = <T_1,T_{2j-1}> for a batch, by explicit row shifts."""
    x = np.asarray(rows, dtype=np.int32)
    e1, e2 = x[:, 0::2], x[:, 1::2]
    k = e1.shape[1]
    lhs = np.stack([(e1 * np.roll(e1, s, axis=1)).sum(1) + (e2 * np.roll(e2, s, axis=1)).sum(1)
                    for s in range(k)], axis=1)
    rhs = np.stack([(x * np.roll(x, 2 * s, axis=1)).sum(1) for s in range(k)], axis=1)
    return lhs, rhs


def suite_graphr(seed: int = 0, max_len: int = 16) -> SuiteResult:
    count, ok = 0, True
    for n in range(2, max_len + 1, 2):
        total = 1 << n
        for lo in range(0, total, 1 << 14):
            block = sign_rows_block(lo, min(total, lo + (1 << 14)), n)
            lhs, rhs = graphr_rowwise_batch(block)
            ok &= bool(np.array_equal(lhs, rhs))
            count += block.shape[0]
            had = hadamard_mask(block)
            ok &= bool((lhs[had, 1:].sum(1) == 0).all())
    return SuiteResult("graphr", "<R1,Rj> + <S1,Sj> = <T1,T(2j-1)>", count, ok,
                       f"all even lengths <= {max_len}")


def _known_hits(max_order: int = 16) -> list[SignRow]:
    out = []
    for n in range(4, max_order + 1, 2):
        out += reference_search(n)
    return out


def suite_misscase(seed: int = 0) -> SuiteResult:
    hits = _known_hits()
    try:
        for h in hits:
            dec.misscase_check(h)
            dec.graphr_identity(h)
    except LemmaViolation as exc:
        return SuiteResult("misscase", "lambda1 * lambda2 = 0", len(hits), False, str(exc))
    return SuiteResult("misscase", "lambda1 * lambda2 = 0", len(hits), True)


def suite_regularity(seed: int = 0) -> SuiteResult:
    hits = _known_hits()
    ok = all(dec.regularity_profile(h).consistent for h in hits)
    return SuiteResult("regularity", "n = 4h^2, h odd, entry counts", len(hits), ok)


def suite_eigen(seed: int = 0) -> SuiteResult:
    hits = _known_hits() + [SignRow((1,)), SignRow((-1,))]
    ok = True
    for h in hits:
        rep = eigen_report(h)
        root = h.length ** 0.5
        ok &= all(abs(m - root) <= 1e-9 for m in rep.magnitudes) and abs(rep.row_sum) ** 2 == h.length
    return SuiteResult("eigen", "|R(s)| = sqrt(n)", len(hits), ok)


def suite_macwilliams(seed: int = 0) -> SuiteResult:
    counts = {n: f2.macwilliams_survey(n).count for n in range(2, 21)}
    ok = counts[2] == 2 and all(c == 1 for n, c in counts.items() if n > 2)
    return SuiteResult("macwilliams", "only the identity for n > 2", len(counts), ok,
                       "orders 3..20 count 1, order 2 count 2" if ok else str(counts))


def suite_f2_product(seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    ok = True
    for _ in range(500):
        k = rng.randint(1, 10)
        a = [rng.randint(0, 1) for _ in range(k)]
        b = [rng.randint(0, 1) for _ in range(k)]
        want = [x % 2 for x in multiply(circm(a), circm(b)).first_row]
        got = f2.f2_multiply(f2.F2Circulant.from_entries(a), f2.F2Circulant.from_entries(b)).entries()
        ok &= want == got
    return SuiteResult("f2_product", "F2 product = integer product mod 2", 500, ok)


def plotkin_pairs(max_m: int = 12) -> list[tuple[int, int]]:
    return [(m, d) for m in range(1, max_m + 1) for d in range(2, m + 1, 2) if 2 * d > m]


def suite_plotkin(seed: int = 0) -> SuiteResult:
    bad = []
    pairs = plotkin_pairs()
    for m, d in pairs:
        q = coding.max_code_bruteforce(m, d)
        if q.oracle_size > q.bound or coding.min_distance(q.witness) < d:
            bad.append(f"(m={m}, d={d}): {q.oracle_size} > {q.bound}")
    return SuiteResult("plotkin", "A_2(m,d) <= 2 floor(d/(2d-m))", len(pairs), not bad, "; ".join(bad))


def random_constant_block(h: np.ndarray, rng: random.Random) -> coding.SubmatrixSpec:
    """A random constant submatrix: random rows, then the columns where they all equal a chosen sign."""
    n = h.shape[0]
    a = rng.randint(1, max(1, n // 2))
    rows = sorted(rng.sample(range(n), a))
    sign = rng.choice((1, -1))
    cols = [j for j in range(n) if all(h[i, j] == sign for i in rows)]
    if not cols:
        sign = -sign
        cols = [j for j in range(n) if all(h[i, j] == sign for i in rows)]
    if not cols:
        rows = rows[:1]
        sign = int(h[rows[0], 0])
        cols = [j for j in range(n) if h[rows[0], j] == sign]
    cols = sorted(rng.sample(cols, rng.randint(1, len(cols))))
    return coding.SubmatrixSpec(tuple(i + 1 for i in rows), tuple(j + 1 for j in cols))


def suite_monochromatic(seed: int = 0, trials: int = 10_000) -> SuiteResult:
    rng = random.Random(seed)
    hosts = [sylvester_hadamard(p) for p in range(2, 7)]
    ok = True
    try:
        for _ in range(trials):
            h = rng.choice(hosts)
            rec = coding.monochromatic_bound_check(h, random_constant_block(h, rng), check_host=False)
            ok &= rec.all_equal and rec.bound_holds
    except LemmaViolation as exc:
        return SuiteResult("monochromatic", "constant a x b block => ab <= n", trials, False, str(exc))
    return SuiteResult("monochromatic", "constant a x b block => ab <= n", trials, ok)


def suite_projection(seed: int = 0) -> SuiteResult:
    """Literal idempotence K^2 = K of both halves on the eight order-4 matrices."""
    bad = []
    for h in ORDER4:
        rec = dec.projection_check(h)
        if not (rec.k1_is_projection and rec.k2_is_projection):
            bad.append(f"{h.to_text()}: K1^2={rec.k1_squared!r}, K2^2={rec.k2_squared!r}")
    return SuiteResult("projection", "K1, K2 are projections", len(ORDER4), not bad,
                       f"{len(bad)} of 8 fail; first: {bad[0]}" if bad else "")


def suite_projection_mod2(seed: int = 0) -> SuiteResult:
    ok = all(r.k1_ok and r.k2_ok for r in (dec.mod2_symmetric_orthogonal(h) for h in ORDER4))
    return SuiteResult("projection_mod2", "K1, K2 mod 2 symmetric orthogonal", len(ORDER4), ok)


def suite_conditions(seed: int = 0) -> SuiteResult:
    ok = True
    for h in ORDER4:
        p = dec.classify_conditions(h)
        d = dec.decompose(h)
        ok &= p.cond_a and p.cond_b and p.cond_c and p.cond_d
        ok &= all(abs(e) == 2 for e in d.g1.first_row + d.g2.first_row)
    return SuiteResult("conditions", "(a)-(d) hold and |e| = n/2 at n = 4", len(ORDER4), ok)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "hadamard_predicate": suite_hadamard_predicate,
    "rank_gram": suite_rank_gram,
    "rank1": suite_rank1,
    "rank2": suite_rank2,
    "trichotomy": suite_trichotomy,
    "consecutive": suite_consecutive,
    "first_third": suite_first_third,
    "graphr": suite_graphr,
    "misscase": suite_misscase,
    "regularity": suite_regularity,
    "eigen": suite_eigen,
    "conditions": suite_conditions,
    "projection": suite_projection,
    "projection_mod2": suite_projection_mod2,
    "macwilliams": suite_macwilliams,
    "f2_product": suite_f2_product,
    "plotkin": suite_plotkin,
    "monochromatic": suite_monochromatic,
}


def run_suites(name: str = "all", seed: int = 0) -> list[SuiteResult]:
    if name == "all":
        return [fn(seed=seed) for fn in SUITES.values()]
    return [SUITES[name](seed=seed)]
