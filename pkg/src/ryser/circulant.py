"""Exact circulant matrices, sign rows and periodic autocorrelation.

Indices in the public API are 1-based (row ``i``, column ``j``) to match the
usual mathematical notation; storage is 0-based tuples.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import InvalidArgument, ResourceLimit

Scalar = Union[int, Fraction]

SYLVESTER_MAX_POWER = 12


def _normalize(x) -> Scalar:
    if isinstance(x, bool):
        raise InvalidArgument(f"boolean is not a scalar: {x!r}")
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Rational):
        q = Fraction(x)
        return q.numerator if q.denominator == 1 else q
    raise InvalidArgument(f"not an exact rational scalar: {x!r}")


@dataclass(frozen=True)
class SignRow:
    """A nonempty sequence of +1/-1 entries, the first row of a candidate."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries:
            raise InvalidArgument("a sign row needs at least one entry")
        for pos, e in enumerate(entries, start=1):
            if e * e != 1:
                raise InvalidArgument(f"entry {pos} is {e}, expected 1 or -1")
        object.__setattr__(self, "entries", entries)

    @property
    def length(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __neg__(self) -> "SignRow":
        return SignRow(tuple(-e for e in self.entries))

    @property
    def row_sum(self) -> int:
        return sum(self.entries)

    def to_text(self) -> str:
        return ",".join(str(e) for e in self.entries)

    def to_bits(self) -> str:
        return "".join("0" if e == 1 else "1" for e in self.entries)

    @classmethod
    def parse(cls, text: str) -> "SignRow":
        """Read ``1,-1,-1,-1`` or the bitstring form ``0111`` (0 -> +1, 1 -> -1).

        Text without commas made only of 0/1 characters and at least two long is a
        bitstring; anything else is comma separated, so ``1`` and ``-1`` are
        single entries.
        """
        s = text.strip()
        if not s:
            raise InvalidArgument("empty row text")
        if "," not in s and len(s) >= 2 and set(s) <= {"0", "1"}:
            return cls(tuple(1 if c == "0" else -1 for c in s))
        entries = []
        for tok in s.split(","):
            t = tok.strip()
            if t not in ("1", "-1", "+1"):
                raise InvalidArgument(f"bad entry {tok.strip()!r}: expected 1 or -1")
            entries.append(int(t))
        return cls(tuple(entries))


def as_sign_row(row) -> SignRow:
    if isinstance(row, SignRow):
        return row
    if isinstance(row, str):
        return SignRow.parse(row)
    return SignRow(tuple(row))


@dataclass(frozen=True)
class Circulant:
    """Square circulant matrix given by its first row.

    Row ``i`` is the first row cyclically shifted right by ``i - 1`` places, so
    entry ``(i, j)`` is ``first_row[(j - i) mod k]`` (0-based storage).
    """

    first_row: tuple[Scalar, ...]

    def __post_init__(self):
        row = tuple(_normalize(x) for x in self.first_row)
        if not row:
            raise InvalidArgument("a circulant needs a nonempty first row")
        object.__setattr__(self, "first_row", row)

    @property
    def order(self) -> int:
        return len(self.first_row)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.order:
            raise InvalidArgument(f"index {i} outside 1..{self.order}")

    def entry(self, i: int, j: int) -> Scalar:
        self._check_index(i)
        self._check_index(j)
        return self.first_row[(j - i) % self.order]

    def row(self, i: int) -> tuple[Scalar, ...]:
        self._check_index(i)
        k = self.order
        s = (i - 1) % k
        return self.first_row[k - s:] + self.first_row[:k - s] if s else self.first_row

    def rows(self) -> list[tuple[Scalar, ...]]:
        return [self.row(i) for i in range(1, self.order + 1)]

    def to_lists(self) -> list[list[Scalar]]:
        return [list(r) for r in self.rows()]

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.first_row)

    def _same_order(self, other: "Circulant") -> None:
        if not isinstance(other, Circulant):
            raise InvalidArgument(f"expected a Circulant, got {type(other).__name__}")
        if other.order != self.order:
            raise InvalidArgument(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "Circulant") -> "Circulant":
        self._same_order(other)
        return Circulant(tuple(a + b for a, b in zip(self.first_row, other.first_row)))

    def __sub__(self, other: "Circulant") -> "Circulant":
        self._same_order(other)
        return Circulant(tuple(a - b for a, b in zip(self.first_row, other.first_row)))

    def __neg__(self) -> "Circulant":
        return Circulant(tuple(-a for a in self.first_row))

    def scale(self, c) -> "Circulant":
        c = _normalize(c)
        return Circulant(tuple(c * a for a in self.first_row))

    def __matmul__(self, other: "Circulant") -> "Circulant":
        return multiply(self, other)

    @property
    def T(self) -> "Circulant":
        return transpose(self)

    def __repr__(self) -> str:
        return "circm(" + ", ".join(str(x) for x in self.first_row) + ")"


def circm(*first_row) -> Circulant:
    """``circm(1, -1, -1, -1)`` or ``circm([1, -1, -1, -1])``."""
    if len(first_row) == 1 and isinstance(first_row[0], (list, tuple, SignRow)):
        first_row = tuple(first_row[0])
    if not first_row:
        raise InvalidArgument("circm needs at least one entry")
    return Circulant(tuple(first_row))


def identity(order: int) -> Circulant:
    return circm([1] + [0] * (order - 1))


def shift_matrix(order: int) -> Circulant:
    """The cyclic shift ``circm(0, 1, 0, ..., 0)``; for order 1 it is the identity."""
    if order == 1:
        return identity(1)
    return circm([0, 1] + [0] * (order - 2))


def multiply(a: Circulant, b: Circulant) -> Circulant:
    a._same_order(b)
    k = a.order
    # row 1 of A.B = sum_i a_i * (row i of B); row i of B is b shifted right i places
    out = [0] * k
    for i, ai in enumerate(a.first_row):
        if ai == 0:
            continue
        for j, bj in enumerate(b.first_row):
            if bj:
                out[(i + j) % k] += ai * bj
    return Circulant(tuple(out))


def transpose(a: Circulant) -> Circulant:
    r = a.first_row
    return Circulant((r[0],) + tuple(reversed(r[1:])))


def gram(a: Circulant) -> Circulant:
    return multiply(a, transpose(a))


def row_inner(a: Circulant, i: int, j: int) -> Scalar:
    return sum(x * y for x, y in zip(a.row(i), a.row(j)))


@dataclass(frozen=True)
class PafSpectrum:
    values: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.values)

    def off_peak(self) -> tuple[int, ...]:
        return self.values[1:]


def paf(row) -> PafSpectrum:
    """Periodic autocorrelation ``values[t] = sum_j h_j h_{j+t mod k}``."""
    h = as_sign_row(row).entries
    k = len(h)
    return PafSpectrum(tuple(sum(h[j] * h[(j + t) % k] for j in range(k)) for t in range(k)))


def is_circulant_hadamard(row) -> bool:
    return not any(paf(row).off_peak())


def is_hadamard_by_product(row) -> bool:
    """Same predicate evaluated as ``C C^T == n I``; kept as an independent route."""
    c = circm(as_sign_row(row).entries)
    return gram(c) == identity(c.order).scale(c.order)


@dataclass(frozen=True)
class EigenvalueReport:
    magnitudes: tuple[float, ...]
    row_sum: int

    def to_dict(self) -> dict:
        return {"magnitudes": list(self.magnitudes), "row_sum": self.row_sum}


def eigen_report(row) -> EigenvalueReport:
    """Moduli of the representer polynomial at all n-th roots of unity (floating point)."""
    h = as_sign_row(row).entries
    n = len(h)
    mags = []
    for t in range(n):
        z = sum(hj * cmath.exp(2j * math.pi * t * j / n) for j, hj in enumerate(h))
        mags.append(abs(z))
    return EigenvalueReport(tuple(mags), sum(h))


def sylvester_hadamard(power: int) -> np.ndarray:
    if power < 0:
        raise InvalidArgument(f"power must be nonnegative, got {power}")
    if power > SYLVESTER_MAX_POWER:
        raise ResourceLimit(f"power {power} exceeds the limit {SYLVESTER_MAX_POWER}")
    h = np.ones((1, 1), dtype=np.int8)
    for _ in range(power):
        h = np.block([[h, h], [h, -h]])
    return h


def is_row_orthogonal(matrix) -> bool:
    """True iff ``M M^T`` is ``n`` times the identity (exact integer arithmetic)."""
    m = np.asarray(matrix, dtype=np.int64)
    n = m.shape[1]
    return bool(np.array_equal(m @ m.T, n * np.eye(m.shape[0], dtype=np.int64)))


def rotate(row: Sequence[int], s: int) -> tuple[int, ...]:
    """Row ``s + 1`` of the circulant with first row ``row`` (right shift by ``s``)."""
    r = tuple(row)
    s %= len(r)
    return r[len(r) - s:] + r[:len(r) - s] if s else r


def all_sign_rows(length: int) -> Iterable[SignRow]:
    """Every sign row of the given length, in bitstring order (0 -> +1)."""
    for mask in range(1 << length):
        yield SignRow(tuple(-1 if (mask >> i) & 1 else 1 for i in range(length)))
