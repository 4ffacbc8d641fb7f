"""Exhaustive search for circulant Hadamard first rows.

``full_search`` walks the prefix tree of sign rows depth first with three
sound prunes (reachable row sum, reachable periodic autocorrelation, rotation
and negation symmetry).  ``reference_search`` is the unpruned vectorised
oracle used to cross-check it.  The two campaigns restrict one or both of the
odd/even blocks to rank-1 or rank-2 patterns and test every interleaving.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .circulant import SignRow, as_sign_row, circm, is_circulant_hadamard, rotate
from .errors import InvalidArgument, ResourceLimit
from .rank import matrix_rank

FULL_MAX_ORDER = 32
CONSTRAINED_MAX_ORDER = 40
RANK2_MAX_BLOCK = 24
MODES = ("full", "rank1_constrained", "rank2_constrained")
RULES = ("rowsum", "paf", "symmetry")
_CHUNK = 1 << 16


def canonicalize(row) -> SignRow:
    """Lexicographically least image under rotation and global negation (-1 < 1)."""
    h = as_sign_row(row).entries
    best = None
    for s in range(len(h)):
        r = rotate(h, s)
        for img in (r, tuple(-x for x in r)):
            if best is None or img < best:
                best = img
    return SignRow(best)


def orbit(row) -> set[tuple[int, ...]]:
    h = as_sign_row(row).entries
    out = set()
    for s in range(len(h)):
        r = rotate(h, s)
        out.add(r)
        out.add(tuple(-x for x in r))
    return out


def is_admissible_order(n: int) -> bool:
    """n = 1, or n = 4h^2 with h odd: the only orders where a hit is possible."""
    if n == 1:
        return True
    if n % 4:
        return False
    h = math.isqrt(n // 4)
    return 4 * h * h == n and h % 2 == 1


@dataclass(frozen=True)
class SearchConfig:
    orders: tuple[int, ...]
    mode: str = "full"
    symmetry_reduction: bool = True
    prune_rowsum: bool = True
    prune_paf_prefix: bool = True
    worker_count: int = 1
    # which block is held at a rank-1 pattern in rank1_constrained mode
    fixed_block: str = "both"

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        if self.mode not in MODES:
            raise InvalidArgument(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.worker_count < 1:
            raise InvalidArgument(f"worker_count must be positive, got {self.worker_count}")
        if self.fixed_block not in ("e1", "e2", "both"):
            raise InvalidArgument(f"fixed_block must be e1, e2 or both, got {self.fixed_block!r}")
        if not self.orders:
            raise InvalidArgument("no orders given")
        for n in self.orders:
            if n < 1:
                raise InvalidArgument(f"order must be positive, got {n}")
            if self.mode != "full" and n % 2:
                raise InvalidArgument(f"{self.mode} needs even orders, got {n}")

    def validate_limits(self) -> None:
        cap = FULL_MAX_ORDER if self.mode == "full" else CONSTRAINED_MAX_ORDER
        for n in self.orders:
            if n > cap:
                raise ResourceLimit(f"order {n} exceeds the {self.mode} limit {cap}")
            if self.mode == "rank2_constrained" and n // 2 > RANK2_MAX_BLOCK:
                raise ResourceLimit(f"block order {n // 2} exceeds {RANK2_MAX_BLOCK}")


@dataclass
class SearchReport:
    order: int
    mode: str
    candidates_examined: int = 0
    hits: list[SignRow] = field(default_factory=list)
    pruned_by_rule: dict[str, int] = field(default_factory=lambda: {r: 0 for r in RULES})
    elapsed: float = 0.0
    canonical_hits: list[SignRow] = field(default_factory=list)

    def finalize(self) -> "SearchReport":
        # every hit must survive the full predicate, whatever path produced it
        for h in self.hits:
            assert is_circulant_hadamard(h), h
        self.hits = sorted(set(self.hits), key=lambda r: r.entries)
        self.canonical_hits = sorted({canonicalize(h) for h in self.hits}, key=lambda r: r.entries)
        return self

    def merge(self, other: "SearchReport") -> None:
        self.candidates_examined += other.candidates_examined
        self.hits.extend(other.hits)
        for k, v in other.pruned_by_rule.items():
            self.pruned_by_rule[k] = self.pruned_by_rule.get(k, 0) + v

    @property
    def elapsed_ms(self) -> float:
        return round(self.elapsed * 1000.0, 3)

    def to_dict(self) -> dict:
        return {
            "schema_version": "1",
            "order": self.order,
            "mode": self.mode,
            "candidates_examined": self.candidates_examined,
            "hits": [list(h.entries) for h in self.hits],
            "canonical_hits": [list(h.entries) for h in self.canonical_hits],
            "pruned_by_rule": dict(self.pruned_by_rule),
            "elapsed_ms": self.elapsed_ms,
        }

    def csv_row(self) -> list:
        return [self.order, self.mode, self.candidates_examined, len(self.hits), self.elapsed_ms]


# ----------------------------------------------------------------- full search


class _PrefixSearch:
    """Depth-first enumeration of sign rows of order n from a fixed prefix."""

    def __init__(self, n: int, symmetry: bool, prune_rowsum: bool, prune_paf: bool):
        self.n = n
        self.symmetry = symmetry
        self.prune_rowsum = prune_rowsum
        self.prune_paf = prune_paf
        q = math.isqrt(n)
        self.targets = (q, -q) if q * q == n else ()
        self.shifts = list(range(1, n // 2 + 1))
        # remaining[L][i]: products of shift shifts[i] not yet fixed by a prefix of length L
        self.remaining = [
            [n - max(0, L - t) - max(0, L - (n - t)) for t in self.shifts] for L in range(n + 1)
        ]
        self.report = SearchReport(n, "full")

    def _rowsum_ok(self, s: int, left: int) -> bool:
        return any(abs(t - s) <= left for t in self.targets)

    def run(self, prefix: Sequence[int]) -> SearchReport:
        n = self.n
        h = [0] * n
        partial = [0] * len(self.shifts)
        total = 0
        for p, v in enumerate(prefix):
            self._place(h, partial, p, v)
            total += v
            if not self._check(total, partial, p + 1):
                return self.report
        self._descend(h, partial, len(prefix), total)
        return self.report

    def _place(self, h, partial, p, v) -> None:
        h[p] = v
        n = self.n
        for i, t in enumerate(self.shifts):
            if p - t >= 0:
                partial[i] += h[p - t] * v
            if p + t >= n:
                partial[i] += v * h[p + t - n]

    def _unplace(self, h, partial, p) -> None:
        v = h[p]
        n = self.n
        for i, t in enumerate(self.shifts):
            if p - t >= 0:
                partial[i] -= h[p - t] * v
            if p + t >= n:
                partial[i] -= v * h[p + t - n]
        h[p] = 0

    def _check(self, total: int, partial, length: int) -> bool:
        pruned = self.report.pruned_by_rule
        if self.prune_rowsum and not self._rowsum_ok(total, self.n - length):
            pruned["rowsum"] += 1
            return False
        if self.prune_paf and length < self.n:
            rem = self.remaining[length]
            for i in range(len(partial)):
                if abs(partial[i]) > rem[i]:
                    pruned["paf"] += 1
                    return False
        return True

    def _descend(self, h, partial, p, total) -> None:
        n = self.n
        if p == n:
            self._leaf(h, partial)
            return
        for v in (1, -1):
            self._place(h, partial, p, v)
            if self._check(total + v, partial, p + 1):
                self._descend(h, partial, p + 1, total + v)
            self._unplace(h, partial, p)

    def _leaf(self, h, partial) -> None:
        rep = self.report
        if self.symmetry:
            row = tuple(h)
            if canonicalize(row).entries != row:
                rep.pruned_by_rule["symmetry"] += 1
                return
        rep.candidates_examined += 1
        if any(partial):
            return
        row = SignRow(tuple(h))
        if not is_circulant_hadamard(row):
            return
        if self.symmetry:
            rep.hits.extend(SignRow(r) for r in orbit(row))
        else:
            rep.hits.append(row)


def _root_prefixes(n: int, symmetry: bool, workers: int) -> list[tuple[int, ...]]:
    base = (-1,) if symmetry else ()
    depth = min(max(0, math.ceil(math.log2(workers))) if workers > 1 else 0, n - len(base))
    out = []
    for mask in range(1 << depth):
        out.append(base + tuple(-1 if (mask >> (depth - 1 - i)) & 1 else 1 for i in range(depth)))
    return out


def _run_subtree(args) -> SearchReport:
    n, symmetry, prune_rowsum, prune_paf, prefix = args
    return _PrefixSearch(n, symmetry, prune_rowsum, prune_paf).run(prefix)


def _full_one(n: int, cfg: SearchConfig) -> SearchReport:
    start = time.perf_counter()
    report = SearchReport(n, "full")
    tasks = [(n, cfg.symmetry_reduction, cfg.prune_rowsum, cfg.prune_paf_prefix, p)
             for p in _root_prefixes(n, cfg.symmetry_reduction, cfg.worker_count)]
    if cfg.worker_count > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
            parts = list(pool.map(_run_subtree, tasks))
    else:
        parts = [_run_subtree(t) for t in tasks]
    for part in parts:
        report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report.finalize()


def full_search(config: SearchConfig) -> list[SearchReport]:
    if config.mode != "full":
        raise InvalidArgument(f"full_search needs mode 'full', got {config.mode!r}")
    config.validate_limits()
    return [_full_one(n, config) for n in config.orders]


# ------------------------------------------------------ vectorised candidates


def sign_rows_block(start: int, stop: int, length: int) -> np.ndarray:
    """Rows for integers in [start, stop): bit i set means entry i+1 is -1."""
    idx = np.arange(start, stop, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(length, dtype=np.int64)) & 1
    return (1 - 2 * bits).astype(np.int8)


def hadamard_mask(rows: np.ndarray) -> np.ndarray:
    """Vectorised periodic-autocorrelation test for a batch of first rows."""
    rows = np.asarray(rows, dtype=np.int8)
    n = rows.shape[1]
    alive = np.arange(rows.shape[0])
    x = rows.astype(np.int32)
    for t in range(1, n // 2 + 1):
        if alive.size == 0:
            break
        sub = x[alive]
        ok = (sub * np.roll(sub, -t, axis=1)).sum(axis=1) == 0
        alive = alive[ok]
    mask = np.zeros(rows.shape[0], dtype=bool)
    mask[alive] = True
    return mask


def reference_search(order: int) -> list[SignRow]:
    """Every circulant Hadamard row of the given order by plain enumeration of all 2^n rows."""
    if order > 24:
        raise ResourceLimit(f"reference enumeration capped at order 24, got {order}")
    hits = []
    total = 1 << order
    for start in range(0, total, _CHUNK):
        block = sign_rows_block(start, min(total, start + _CHUNK), order)
        for r in block[hadamard_mask(block)]:
            hits.append(SignRow(tuple(int(x) for x in r)))
    return sorted(hits, key=lambda r: r.entries)


def _interleave_batch(odd: np.ndarray, even: np.ndarray) -> np.ndarray:
    out = np.empty((odd.shape[0], 2 * odd.shape[1]), dtype=np.int8)
    out[:, 0::2] = odd
    out[:, 1::2] = even
    return out


def _rowsum_filter(rows: np.ndarray, n: int) -> np.ndarray:
    q = math.isqrt(n)
    if q * q != n:
        return np.zeros(rows.shape[0], dtype=bool)
    return np.abs(rows.sum(axis=1, dtype=np.int32)) == q


def _test_batch(rows: np.ndarray, n: int, cfg: SearchConfig, rep: SearchReport) -> None:
    rep.candidates_examined += rows.shape[0]
    if cfg.prune_rowsum:
        keep = _rowsum_filter(rows, n)
        rep.pruned_by_rule["rowsum"] += int(rows.shape[0] - keep.sum())
        rows = rows[keep]
    for r in rows[hadamard_mask(rows)]:
        rep.hits.append(SignRow(tuple(int(x) for x in r)))


# ------------------------------------------------------------ rank-1 campaign


def rank1_patterns(k: int) -> list[tuple[int, ...]]:
    """Sign rows of length k whose circulant has exact rank 1.

    Candidates are the two constant rows and, for even k, the two alternating
    phases; each is confirmed by exact elimination.
    """
    cands = [(1,) * k, (-1,) * k]
    if k % 2 == 0:
        cands += [tuple(1 if i % 2 == 0 else -1 for i in range(k)),
                  tuple(-1 if i % 2 == 0 else 1 for i in range(k))]
    return [c for c in cands if matrix_rank(circm(c).rows())[0] == 1]


def _rank1_one(n: int, cfg: SearchConfig) -> SearchReport:
    start = time.perf_counter()
    rep = SearchReport(n, "rank1_constrained")
    k = n // 2
    sides = ("e1", "e2") if cfg.fixed_block == "both" else (cfg.fixed_block,)
    for side in sides:
        for pat in rank1_patterns(k):
            fixed = np.array(pat, dtype=np.int8)
            total = 1 << k
            for lo in range(0, total, _CHUNK):
                free = sign_rows_block(lo, min(total, lo + _CHUNK), k)
                rep_fixed = np.broadcast_to(fixed, free.shape)
                rows = _interleave_batch(rep_fixed, free) if side == "e1" else _interleave_batch(free, rep_fixed)
                _test_batch(rows, n, cfg, rep)
    rep.elapsed = time.perf_counter() - start
    return rep.finalize()


def rank1_campaign(config: SearchConfig) -> list[SearchReport]:
    if config.mode != "rank1_constrained":
        raise InvalidArgument(f"rank1_campaign needs mode 'rank1_constrained', got {config.mode!r}")
    config.validate_limits()
    return [_rank1_one(n, config) for n in config.orders]


# ------------------------------------------------------------ rank-2 campaign


def rank2_rows(k: int) -> list[tuple[int, ...]]:
    """All sign rows of length k whose circulant has exact rank 2.

    A floating-point FFT discards rows with three or more clearly nonzero
    eigenvalues first (it cannot drop a true rank-2 row, whose other
    eigenvalues are exactly zero); survivors are decided by exact elimination.
    """
    if k > RANK2_MAX_BLOCK:
        raise ResourceLimit(f"block order {k} exceeds {RANK2_MAX_BLOCK}")
    out = []
    total = 1 << k
    for lo in range(0, total, _CHUNK):
        block = sign_rows_block(lo, min(total, lo + _CHUNK), k)
        mags = np.abs(np.fft.fft(block.astype(np.float64), axis=1))
        maybe = (mags > 1e-6).sum(axis=1) <= 2
        for r in block[maybe]:
            row = tuple(int(x) for x in r)
            if matrix_rank(circm(row).rows())[0] == 2:
                out.append(row)
    return out


def _rank2_one(n: int, cfg: SearchConfig) -> SearchReport:
    start = time.perf_counter()
    rep = SearchReport(n, "rank2_constrained")
    pats = rank2_rows(n // 2)
    if pats:
        arr = np.array(pats, dtype=np.int8)
        for i in range(arr.shape[0]):
            odd = np.broadcast_to(arr[i], arr.shape)
            _test_batch(_interleave_batch(odd, arr), n, cfg, rep)
    rep.elapsed = time.perf_counter() - start
    return rep.finalize()


def rank2_campaign(config: SearchConfig) -> list[SearchReport]:
    if config.mode != "rank2_constrained":
        raise InvalidArgument(f"rank2_campaign needs mode 'rank2_constrained', got {config.mode!r}")
    config.validate_limits()
    return [_rank2_one(n, config) for n in config.orders]


def run(config: SearchConfig) -> list[SearchReport]:
    dispatch = {"full": full_search, "rank1_constrained": rank1_campaign, "rank2_constrained": rank2_campaign}
    return dispatch[config.mode](config)
