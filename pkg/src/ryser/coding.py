"""Plotkin bound, an exhaustive optimal-code oracle, and monochromatic blocks of Hadamard matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .circulant import is_row_orthogonal
from .errors import InvalidArgument, LemmaViolation, PreconditionViolation, ResourceLimit

MAX_CODE_LENGTH = 12


def hamming(x: int, y: int, length: Optional[int] = None) -> int:
    if length is not None and (x >> length or y >> length):
        raise InvalidArgument(f"words do not fit in {length} bits")
    return bin(x ^ y).count("1")


def plotkin_bound(m: int, d: int) -> Optional[int]:
    if m < 1 or d < 1:
        raise InvalidArgument(f"need m >= 1 and d >= 1, got m={m}, d={d}")
    if d % 2 or 2 * d <= m:
        return None
    return 2 * (d // (2 * d - m))


@dataclass(frozen=True)
class PlotkinQuery:
    m: int
    d: int
    bound: Optional[int]
    oracle_size: Optional[int] = None
    witness: Optional[tuple[int, ...]] = None

    def to_dict(self) -> dict:
        return {"m": self.m, "d": self.d, "bound": self.bound, "oracle_size": self.oracle_size}


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _max_clique(vertices: list[int], adj: dict[int, int], need: int) -> list[int]:
    """Largest clique inside ``vertices`` (bit positions), or [] if none beats ``need - 1``.

    Branch and bound with greedy colouring; ``adj[v]`` is a bitset over positions.
    """
    best: list[int] = []

    def colour_sort(cand: int) -> list[tuple[int, int]]:
        order = []
        colour = 0
        uncoloured = cand
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~adj[v] & ~low
                uncoloured &= ~low
                order.append((v, colour))
        return order

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        for v, c in reversed(colour_sort(cand)):
            if len(clique) + c <= max(len(best), need - 1):
                return
            new_clique = clique + [v]
            new_cand = cand & adj[v]
            if new_cand:
                expand(new_clique, new_cand)
            elif len(new_clique) > len(best) and len(new_clique) >= need:
                best = new_clique
            cand &= ~(1 << v)

    start = 0
    for v in vertices:
        start |= 1 << v
    expand([], start)
    return best


def max_code_bruteforce(m: int, d: int) -> PlotkinQuery:
    """Exact A_2(m, d): largest set of length-m binary words with pairwise distance >= d.

    Distances are invariant under translation and coordinate permutation, so an
    optimal code may be assumed to contain 0 and the word 1^w 0^(m-w) for some
    w >= d; a third word is fixed up to the permutations preserving both, i.e.
    to 1^i 0^(w-i) 1^j 0^(m-w-j).  The rest is a maximum-clique search.
    """
    if m < 1 or d < 0:
        raise InvalidArgument(f"need m >= 1 and d >= 0, got m={m}, d={d}")
    if m > MAX_CODE_LENGTH:
        raise ResourceLimit(f"m = {m} exceeds the oracle limit {MAX_CODE_LENGTH}")
    bound = plotkin_bound(m, d) if d >= 1 else None
    full = 1 << m
    if d <= 1:
        return PlotkinQuery(m, d, bound, full, tuple(range(full)))
    if d > m:
        return PlotkinQuery(m, d, bound, 1, (0,))

    best: tuple[int, ...] = (0, (1 << d) - 1)
    far = [x for x in range(full) if _popcount(x) >= d]
    for w in range(d, m + 1):
        x2 = (1 << w) - 1
        thirds = []
        for i in range(w + 1):
            for j in range(m - w + 1):
                x3 = ((1 << i) - 1) | (((1 << j) - 1) << w)
                if _popcount(x3) >= d and hamming(x2, x3) >= d:
                    thirds.append(x3)
        for x3 in thirds:
            pool = [y for y in far if y not in (x2, x3) and hamming(y, x2) >= d and hamming(y, x3) >= d]
            if 3 + len(pool) <= len(best):
                continue
            adj = {}
            for a, ya in enumerate(pool):
                bits = 0
                for b, yb in enumerate(pool):
                    if a != b and _popcount(ya ^ yb) >= d:
                        bits |= 1 << b
                adj[a] = bits
            clique = _max_clique(list(range(len(pool))), adj, len(best) - 2)
            if 3 + len(clique) > len(best):
                best = (0, x2, x3) + tuple(pool[v] for v in clique)
    code = tuple(sorted(best))
    return PlotkinQuery(m, d, bound, len(code), code)


def min_distance(code: Sequence[int]) -> Optional[int]:
    ds = [hamming(a, b) for i, a in enumerate(code) for b in code[i + 1:]]
    return min(ds) if ds else None


@dataclass(frozen=True)
class SubmatrixSpec:
    row_indices: tuple[int, ...]
    col_indices: tuple[int, ...]

    def __post_init__(self):
        for field in ("row_indices", "col_indices"):
            idx = tuple(int(i) for i in getattr(self, field))
            if not idx:
                raise InvalidArgument(f"empty {field}")
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise InvalidArgument(f"{field} must be strictly increasing: {idx}")
            if idx[0] < 1:
                raise InvalidArgument(f"{field} are 1-based, got {idx[0]}")
            object.__setattr__(self, field, idx)


@dataclass(frozen=True)
class MonochromaticRecord:
    a: int
    b: int
    ab: int
    n: int
    all_equal: bool
    bound_holds: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def monochromatic_bound_check(host, spec: SubmatrixSpec, *, check_host: bool = True) -> MonochromaticRecord:
    h = np.asarray(host)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise InvalidArgument(f"host must be square, got shape {h.shape}")
    n = h.shape[0]
    if n <= 2:
        raise PreconditionViolation(f"host order must exceed 2, got {n}")
    if spec.row_indices[-1] > n or spec.col_indices[-1] > n:
        raise InvalidArgument(f"selection exceeds host order {n}")
    if check_host and not is_row_orthogonal(h):
        raise PreconditionViolation("host rows are not pairwise orthogonal")
    block = h[np.ix_([i - 1 for i in spec.row_indices], [j - 1 for j in spec.col_indices])]
    a, b = block.shape
    all_equal = bool((block == block.flat[0]).all())
    holds = a * b <= n
    if all_equal and not holds:
        raise LemmaViolation(f"constant {a}x{b} block in a Hadamard matrix of order {n}")
    return MonochromaticRecord(a, b, a * b, n, all_equal, holds)
