"""Circulant matrices over F2 stored as bitmasks (bit i = entry i+1 of the first row)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument, ResourceLimit

MAX_ORDER = 24


@dataclass(frozen=True)
class F2Circulant:
    bits: int
    order: int

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise InvalidArgument(f"order {self.order} outside 1..{MAX_ORDER}")
        if self.bits < 0 or self.bits >> self.order:
            raise InvalidArgument(f"bits {self.bits:#x} do not fit order {self.order}")

    @classmethod
    def from_entries(cls, entries) -> "F2Circulant":
        bits = 0
        for i, e in enumerate(entries):
            if e not in (0, 1):
                raise InvalidArgument(f"F2 entry must be 0 or 1, got {e!r}")
            bits |= e << i
        return cls(bits, len(entries))

    @classmethod
    def identity(cls, order: int) -> "F2Circulant":
        return cls(1, order)

    @classmethod
    def shift(cls, order: int) -> "F2Circulant":
        return cls(1 if order == 1 else 2, order)

    def entries(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.order)]

    def to_bitstring(self) -> str:
        return "".join(str(e) for e in self.entries())


def _rotl(x: int, s: int, k: int) -> int:
    s %= k
    mask = (1 << k) - 1
    return ((x << s) | (x >> (k - s))) & mask


def f2_multiply(a: F2Circulant, b: F2Circulant) -> F2Circulant:
    if a.order != b.order:
        raise InvalidArgument(f"order mismatch: {a.order} vs {b.order}")
    k = a.order
    out = 0
    x = a.bits
    i = 0
    while x:
        if x & 1:
            out ^= _rotl(b.bits, i, k)
        x >>= 1
        i += 1
    return F2Circulant(out, k)


def f2_transpose(a: F2Circulant) -> F2Circulant:
    k = a.order
    out = a.bits & 1
    for j in range(1, k):
        if (a.bits >> j) & 1:
            out |= 1 << (k - j)
    return F2Circulant(out, k)


def is_symmetric(a: F2Circulant) -> bool:
    return f2_transpose(a) == a


def is_orthogonal(a: F2Circulant) -> bool:
    return f2_multiply(a, f2_transpose(a)) == F2Circulant.identity(a.order)


@dataclass(frozen=True)
class SurveyResult:
    order: int
    count: int
    witnesses: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"order": self.order, "count": self.count, "witnesses": list(self.witnesses)}


def _symmetric_mask(order: int) -> np.ndarray:
    """Boolean mask over all 2^order first rows marking the palindromic ones."""
    rows = np.arange(1 << order, dtype=np.uint32)
    ok = np.ones(rows.shape, dtype=bool)
    for j in range(1, order):
        m = order - j
        if m <= j:
            break
        ok &= ((rows >> j) & 1) == ((rows >> m) & 1)
    return ok


def macwilliams_survey(order: int) -> SurveyResult:
    """Count circulant F2 matrices of the given order that are symmetric and orthogonal.

    All 2^order first rows are scanned; symmetry is filtered in bulk and
    orthogonality is then tested per survivor.
    """
    if not 1 <= order <= MAX_ORDER:
        raise ResourceLimit(f"order {order} outside supported range 1..{MAX_ORDER}")
    candidates = np.flatnonzero(_symmetric_mask(order))
    hits = [int(b) for b in candidates if is_orthogonal(F2Circulant(int(b), order))]
    return SurveyResult(order, len(hits), tuple(F2Circulant(b, order).to_bitstring() for b in hits))
