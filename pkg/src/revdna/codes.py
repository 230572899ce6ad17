"""Linear codes over GF(4): dimension, enumeration, distance, reversibility.

Codewords are bit-packed for the hot loops: each ``uint64`` word carries 32
coordinates, the low 32 bits holding the low bit of each symbol and the high
32 bits the high bit.  Addition is XOR, the Hamming weight of a word ``w`` is
``popcount((w | w >> 32) & 0xffffffff)`` and its GC weight (symbols w, w^2)
is ``popcount(w >> 32)``.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

import numpy as np

from . import gf4

LOW = np.uint64(0xFFFFFFFF)
SHIFT = np.uint64(32)
DEFAULT_MAX_K = 14


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive pass would exceed the enumeration budget."""


# ---------------------------------------------------------------------------
# packing


def n_words(n: int) -> int:
    return max(1, -(-n // 32))


def pack(vectors: np.ndarray) -> np.ndarray:
    """Pack GF(4) vectors of shape (..., n) into uint64 words of shape (..., ceil(n/32))."""
    v = np.asarray(vectors, dtype=np.uint64)
    n = v.shape[-1]
    nw = n_words(n)
    pad = nw * 32 - n
    if pad:
        v = np.concatenate([v, np.zeros(v.shape[:-1] + (pad,), dtype=np.uint64)], axis=-1)
    v = v.reshape(v.shape[:-1] + (nw, 32))
    weights = np.uint64(1) << np.arange(32, dtype=np.uint64)
    lo = ((v & np.uint64(1)) * weights).sum(axis=-1, dtype=np.uint64)
    hi = ((v >> np.uint64(1)) * weights).sum(axis=-1, dtype=np.uint64)
    return lo | (hi << SHIFT)


def unpack(words: np.ndarray, n: int) -> np.ndarray:
    w = np.asarray(words, dtype=np.uint64)
    bits = np.arange(32, dtype=np.uint64)
    lo = (w[..., None] >> bits) & np.uint64(1)
    hi = (w[..., None] >> (bits + SHIFT)) & np.uint64(1)
    sym = (lo | (hi << np.uint64(1))).astype(np.uint8)
    return sym.reshape(w.shape[:-1] + (32 * w.shape[-1],))[..., :n]


def packed_weight(words: np.ndarray) -> np.ndarray:
    w = np.asarray(words, dtype=np.uint64)
    return np.bitwise_count((w | (w >> SHIFT)) & LOW).sum(axis=-1, dtype=np.int64)


def packed_gc_weight(words: np.ndarray) -> np.ndarray:
    return np.bitwise_count(np.asarray(words, dtype=np.uint64) >> SHIFT).sum(axis=-1, dtype=np.int64)


def packed_scale(c: int, words: np.ndarray) -> np.ndarray:
    """Multiply packed vectors by a GF(4) scalar."""
    w = np.asarray(words, dtype=np.uint64)
    lo, hi = w & LOW, w >> SHIFT
    if c == 0:
        return np.zeros_like(w)
    if c == 1:
        return w.copy()
    if c == 2:  # (a + b w) w = b + (a + b) w
        return hi | ((lo ^ hi) << SHIFT)
    return (lo ^ hi) | (lo << SHIFT)


def hamming(x: np.ndarray, y: np.ndarray) -> int:
    return int(np.count_nonzero(np.asarray(x) != np.asarray(y)))


# ---------------------------------------------------------------------------


@dataclass(eq=False)
class LinearCode:
    """Row space of a generator matrix over GF(4)."""

    gen: np.ndarray
    basis: np.ndarray = field(init=False)
    pivots: list[int] = field(init=False)
    k: int = field(init=False)

    def __post_init__(self) -> None:
        self.gen = np.atleast_2d(np.asarray(self.gen, dtype=np.uint8))
        reduced, k = gf4.row_reduce(self.gen)
        self.basis = reduced[:k].copy()
        self.pivots = gf4.pivot_columns(reduced, k)
        self.k = k

    @property
    def n(self) -> int:
        return int(self.gen.shape[1])

    @property
    def size(self) -> int:
        """Number of codewords, exact: ``4**k``."""
        return 4 ** self.k

    @cached_property
    def packed_basis(self) -> np.ndarray:
        return pack(self.basis)

    def encode(self, message: np.ndarray) -> np.ndarray:
        return gf4.matmul(np.asarray(message, dtype=np.uint8), self.basis)

    def syndrome_free(self, vector: np.ndarray) -> np.ndarray:
        """Residue of ``vector`` after clearing the pivot columns against the basis."""
        v = np.array(vector, dtype=np.uint8, copy=True)
        for row, p in zip(self.basis, self.pivots):
            if v[p]:
                v ^= gf4.MUL[v[p]][row]
        return v

    def contains(self, vector: np.ndarray) -> bool:
        vector = np.asarray(vector, dtype=np.uint8)
        if vector.shape != (self.n,):
            raise ValueError(f"vector length {vector.shape} != {self.n}")
        return not self.syndrome_free(vector).any()

    def reversed(self) -> "LinearCode":
        return LinearCode(self.basis[:, ::-1])

    def __contains__(self, vector) -> bool:
        return self.contains(np.asarray(vector, dtype=np.uint8))


def from_generator(m: np.ndarray) -> LinearCode:
    return LinearCode(m)


# ---------------------------------------------------------------------------
# enumeration


def _span_table(rows: np.ndarray, nw: int) -> np.ndarray:
    """All GF(4) combinations of packed ``rows``; the message digits run little-endian."""
    table = np.zeros((1, nw), dtype=np.uint64)
    for row in rows:
        table = np.concatenate([table ^ packed_scale(c, row) for c in range(4)])
    return table


def gray_steps(digits: int) -> Iterator[tuple[int, int]]:
    """Binary reflected Gray code over ``2*digits`` bits: yields ``(row, scalar)`` to XOR in.

    GF(4)^digits is GF(2)^(2*digits) with generators ``row`` and ``w*row``;
    each Gray step toggles one of them.
    """
    for i in range(1, 4 ** digits):
        bit = (i & -i).bit_length() - 1
        yield bit // 2, (1 if bit % 2 == 0 else 2)


def iter_codeword_chunks(
    code: LinearCode,
    max_k: int = DEFAULT_MAX_K,
    chunk_digits: int = 9,
    basis: np.ndarray | None = None,
) -> Iterator[np.ndarray]:
    """Yield every codeword once, packed, in chunks of ``4**min(k, chunk_digits)``.

    The low ``chunk_digits`` message digits are expanded as a table; the high
    digits walk a Gray code, so each chunk is the table XOR one row multiple.
    ``basis`` overrides the rows (same dimension); reversing the basis
    columns yields the reversed codewords in the same message order.
    """
    if code.k > max_k:
        raise BudgetExceeded(f"4^{code.k} codewords exceed the enumeration budget 4^{max_k}")
    rows = code.packed_basis if basis is None else pack(basis)
    nw = n_words(code.n)
    low = min(code.k, chunk_digits)
    table = _span_table(rows[:low], nw)
    high = rows[low:]
    offset = np.zeros(nw, dtype=np.uint64)
    yield table
    for row, c in gray_steps(len(high)):
        offset = offset ^ packed_scale(c, high[row])
        yield table ^ offset


def all_codewords(code: LinearCode, max_k: int = DEFAULT_MAX_K, basis: np.ndarray | None = None) -> np.ndarray:
    """Packed array of all codewords (fits in memory only for small k)."""
    return np.concatenate(list(iter_codeword_chunks(code, max_k=max_k, basis=basis)))


def enumerate_codewords(code: LinearCode, max_k: int = DEFAULT_MAX_K) -> Iterator[np.ndarray]:
    """Yield each codeword as a GF(4) vector."""
    for chunk in iter_codeword_chunks(code, max_k=max_k):
        yield from unpack(chunk, code.n)


# ---------------------------------------------------------------------------
# minimum distance


@dataclass
class DistanceResult:
    d: int | None
    lower: int
    upper: int
    method: str
    certified: bool
    witness: np.ndarray | None = None
    elapsed: float = 0.0

    @property
    def exact(self) -> bool:
        return self.certified and self.d is not None


def _brute(code: LinearCode, max_k: int) -> DistanceResult:
    t0 = time.perf_counter()
    best, witness = code.n + 1, None
    for chunk in iter_codeword_chunks(code, max_k=max_k):
        w = packed_weight(chunk)
        w[w == 0] = code.n + 1
        i = int(np.argmin(w))
        if w[i] < best:
            best, witness = int(w[i]), chunk[i]
    return DistanceResult(best, best, best, "brute", True, unpack(witness, code.n), time.perf_counter() - t0)


def information_sets(basis: np.ndarray) -> list[tuple[np.ndarray, int]]:
    """Generator matrices systematic on successive disjoint column sets.

    Returns ``(matrix, rank)`` pairs; each matrix has the identity (up to
    column placement) on its own ``rank`` pivot columns, which are disjoint
    from the earlier ones.  Rows past ``rank`` vanish on those columns.
    """
    k, n = basis.shape
    remaining = list(range(n))
    out = []
    while remaining:
        # eliminate on [B restricted to remaining | B]; the right half is the transformed generator
        width = len(remaining)
        red, full_rank = gf4.row_reduce(np.concatenate([basis[:, remaining], basis], axis=1))
        pivots = [c for c in gf4.pivot_columns(red, full_rank) if c < width]
        if not pivots:
            break
        out.append((red[:, width:].copy(), len(pivots)))
        used = {remaining[c] for c in pivots}
        remaining = [c for c in remaining if c not in used]
    return out


def _weight_w_codewords(packed_rows: np.ndarray, w: int, batch: int = 4096) -> Iterator[np.ndarray]:
    """Codewords ``m @ G`` for messages of weight exactly ``w`` whose first nonzero digit is 1."""
    k, nw = packed_rows.shape
    scaled = np.stack([packed_scale(c, packed_rows) for c in range(4)])  # (4, k, nw)
    patterns = np.array([(1,) + p for p in itertools.product((1, 2, 3), repeat=w - 1)], dtype=np.int64)
    combos = itertools.combinations(range(k), w)
    while True:
        block = np.array(list(itertools.islice(combos, batch)), dtype=np.int64)
        if block.size == 0:
            return
        acc = np.zeros((block.shape[0], patterns.shape[0], nw), dtype=np.uint64)
        for t in range(w):
            acc ^= scaled[patterns[None, :, t], block[:, None, t]]
        yield acc.reshape(-1, nw)


def _information_set(code: LinearCode, deadline: float | None, stop_at: int | None) -> DistanceResult:
    t0 = time.perf_counter()
    k, n = code.k, code.n
    sets = [(pack(g), rank) for g, rank in information_sets(code.basis)]
    upper, witness = n + 1, None
    for row in code.basis:  # cheap initial upper bound
        wt = int(np.count_nonzero(row))
        if wt < upper:
            upper, witness = wt, pack(row)
    lower = 1
    for w in range(1, k + 1):
        for packed_rows, _ in sets:
            for chunk in _weight_w_codewords(packed_rows, w):
                wt = packed_weight(chunk)
                i = int(np.argmin(wt))
                if wt[i] < upper:
                    upper, witness = int(wt[i]), chunk[i]
                if deadline is not None and time.perf_counter() > deadline:
                    return DistanceResult(None, lower, upper, "information_set", False,
                                          unpack(witness, n), time.perf_counter() - t0)
        lower = max(lower, sum(max(0, w + 1 - (k - rank)) for _, rank in sets))
        if lower >= upper:
            return DistanceResult(upper, upper, upper, "information_set", True,
                                  unpack(witness, n), time.perf_counter() - t0)
        if stop_at is not None and lower >= stop_at:
            return DistanceResult(None, lower, upper, "information_set", True,
                                  unpack(witness, n), time.perf_counter() - t0)
    # every message has been enumerated by now
    return DistanceResult(upper, upper, upper, "information_set", True, unpack(witness, n), time.perf_counter() - t0)


def min_distance(
    code: LinearCode,
    method: str = "auto",
    max_k: int = DEFAULT_MAX_K,
    time_limit: float | None = None,
    stop_at: int | None = None,
) -> DistanceResult:
    """Minimum Hamming distance (= minimum nonzero weight).

    ``method="brute"`` weighs every codeword; ``"information_set"`` runs a
    Brouwer-Zimmermann style search over disjoint information sets and stops
    once its lower bound meets the lightest codeword found.  ``"auto"``
    picks brute force up to ``k = 8``.

    ``time_limit`` (seconds) and ``stop_at`` only apply to the information
    set search: on timeout the result carries bounds with
    ``certified=False``; with ``stop_at=t`` the search returns as soon as
    ``d >= t`` is proven (``certified=True``, ``d`` possibly ``None``).
    """
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    if method == "auto":
        method = "brute" if code.k <= 8 else "information_set"
    if method == "brute":
        return _brute(code, max_k)
    if method == "information_set":
        deadline = None if time_limit is None else time.perf_counter() + time_limit
        return _information_set(code, deadline, stop_at)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# reversibility


def is_reversible(code: LinearCode) -> bool:
    """Closed under coordinate reversal: every reversed basis row lies in the code."""
    if code.k == 0:
        return True
    return all(code.contains(row[::-1]) for row in code.basis)


def reversal_witness(code: LinearCode) -> np.ndarray | None:
    """A basis row whose reverse is not a codeword, or ``None``."""
    for row in code.basis:
        if not code.contains(row[::-1]):
            return row
    return None


# ---------------------------------------------------------------------------
# weight enumerators


@dataclass
class WeightEnumerator:
    """Complete and GC weight enumerators with exact integer counts.

    ``cwe`` maps ``(n_0, n_1, n_w, n_w2)`` to a count; ``gcw[i]`` is the
    coefficient of ``X1^(n-i) X2^i``.
    """

    n: int
    cwe: dict[tuple[int, int, int, int], int]
    gcw: list[int]

    @property
    def total(self) -> int:
        return sum(self.cwe.values())

    def gcw_text(self) -> str:
        return "GCW: [" + ", ".join(str(c) for c in self.gcw) + "]"

    def gcw_polynomial(self) -> str:
        terms = []
        for i, c in enumerate(self.gcw):
            if not c:
                continue
            parts = [str(c)] if c != 1 else []
            if self.n - i:
                parts.append(f"X1^{self.n - i}")
            if i:
                parts.append(f"X2^{i}")
            terms.append("*".join(parts) or "1")
        return " + ".join(terms)

    def cwe_csv(self) -> str:
        lines = ["n0,n1,nw,nw2,count"]
        for key in sorted(self.cwe):
            lines.append(",".join(str(x) for x in key) + f",{self.cwe[key]}")
        return "\n".join(lines) + "\n"


def composition_counts(words: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    w = np.asarray(words, dtype=np.uint64)
    lo, hi = w & LOW, w >> SHIFT
    n1 = np.bitwise_count(lo & ~hi).sum(axis=-1, dtype=np.int64)
    nw = np.bitwise_count(hi & ~lo).sum(axis=-1, dtype=np.int64)
    nw2 = np.bitwise_count(lo & hi).sum(axis=-1, dtype=np.int64)
    return n - n1 - nw - nw2, n1, nw, nw2


def weight_enumerators(code: LinearCode, max_k: int = DEFAULT_MAX_K) -> WeightEnumerator:
    n = code.n
    base = n + 1
    counts: dict[int, int] = {}
    for chunk in iter_codeword_chunks(code, max_k=max_k):
        _, n1, nw, nw2 = composition_counts(chunk, n)
        keys, freq = np.unique((n1 * base + nw) * base + nw2, return_counts=True)
        for key, c in zip(keys.tolist(), freq.tolist()):
            counts[key] = counts.get(key, 0) + c
    cwe: dict[tuple[int, int, int, int], int] = {}
    gcw = [0] * (n + 1)
    for key, c in counts.items():
        n1, rest = divmod(key, base * base)
        nw, nw2 = divmod(rest, base)
        cwe[(n - n1 - nw - nw2, n1, nw, nw2)] = c
        gcw[nw + nw2] += c
    return WeightEnumerator(n, cwe, gcw)
