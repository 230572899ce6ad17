"""Arithmetic and small dense linear algebra over GF(4).

Elements are stored as 2-bit integers::

    0 -> 0,  1 -> 1,  2 -> w,  3 -> w^2      (w^2 = w + 1)

With this encoding addition is bitwise XOR, so vectors and matrices are
plain ``uint8`` numpy arrays and sums are ``a ^ b``.  Multiplication goes
through the 4x4 lookup table :data:`MUL`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

ZERO, ONE, W, W2 = 0, 1, 2, 3

ADD = np.array([[a ^ b for b in range(4)] for a in range(4)], dtype=np.uint8)
MUL = np.array(
    [
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
    ],
    dtype=np.uint8,
)
INV = np.array([0, 1, 3, 2], dtype=np.uint8)  # INV[0] is unused

SYMBOLS = "01wW"
_SYMBOL_VALUE = {s: i for i, s in enumerate(SYMBOLS)}


def add(a: int, b: int) -> int:
    return int(a) ^ int(b)


def mul(a: int, b: int) -> int:
    return int(MUL[a, b])


def inv(a: int) -> int:
    if a == ZERO:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return int(INV[a])


def vector(values: Iterable[int] | str) -> np.ndarray:
    """Build a GF(4) vector from ints in 0..3 or a symbol string over ``01wW``."""
    if isinstance(values, str):
        return parse_vector(values)
    out = np.asarray(list(values), dtype=np.uint8)
    if out.size and out.max() > 3:
        raise ValueError("GF(4) symbols must be in 0..3")
    return out


def scale(c: int, v: np.ndarray) -> np.ndarray:
    return MUL[c][np.asarray(v, dtype=np.uint8)]


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix (or vector-matrix) product over GF(4)."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    squeeze = a.ndim == 1
    if squeeze:
        a = a[None, :]
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} x {b.shape}")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for t in range(a.shape[1]):
        out ^= MUL[a[:, t][:, None], b[t][None, :]]
    return out[0] if squeeze else out


# ---------------------------------------------------------------------------
# structured matrices


def _first_row(first_row: Sequence[int] | np.ndarray) -> np.ndarray:
    row = np.asarray(first_row, dtype=np.uint8)
    if row.ndim != 1 or row.size == 0:
        raise ValueError("first row must be a nonempty vector")
    return row


def l_circulant(l: int, first_row: Sequence[int] | np.ndarray) -> np.ndarray:
    """Square matrix whose rows are successive right shifts by ``l``.

    Row ``i`` is the first row cyclically shifted ``i * l`` places to the
    right, so row 2 starts with entry ``n - l + 1`` (1-based).
    """
    row = _first_row(first_row)
    n = row.size
    if not 1 <= l <= n:
        raise ValueError(f"shift l={l} outside 1..{n}")
    return np.stack([np.roll(row, i * l) for i in range(n)])


def circulant(first_row: Sequence[int] | np.ndarray) -> np.ndarray:
    return l_circulant(1, first_row)


def reverse_circulant(first_row: Sequence[int] | np.ndarray) -> np.ndarray:
    """Square matrix whose rows are successive *left* shifts by one.

    This is the convention under which the quasi-dihedral / cyclic composite
    blocks come out in closed form (checked against the group construction
    in the test suite).
    """
    row = _first_row(first_row)
    return np.stack([np.roll(row, -i) for i in range(row.size)])


def flip(m: np.ndarray) -> np.ndarray:
    """180 degree rotation: ``out[i, j] = m[n-1-i, n-1-j]``."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("flip needs a square matrix")
    return m[::-1, ::-1].copy()


def transpose(m: np.ndarray) -> np.ndarray:
    return np.asarray(m).T.copy()


# ---------------------------------------------------------------------------
# elimination


def row_reduce(m: np.ndarray) -> tuple[np.ndarray, int]:
    """Reduced row-echelon form over GF(4).

    Returns ``(reduced, rank)``; ``reduced`` has the same shape as ``m`` with
    the ``rank`` nonzero rows on top.
    """
    a = np.array(m, dtype=np.uint8, copy=True)
    if a.ndim != 2:
        raise ValueError("row_reduce needs a 2-d array")
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        p = rank + nz[0]
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        a[rank] = MUL[INV[a[rank, c]]][a[rank]]
        factors = a[:, c].copy()
        factors[rank] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            a[hit] ^= MUL[factors[hit][:, None], a[rank][None, :]]
        rank += 1
    return a, rank


def pivot_columns(reduced: np.ndarray, rank: int) -> list[int]:
    return [int(np.nonzero(reduced[i])[0][0]) for i in range(rank)]


def rank(m: np.ndarray) -> int:
    return row_reduce(m)[1]


# ---------------------------------------------------------------------------
# text format: one row per line, symbols 0 1 w W separated by whitespace


def parse_vector(text: str) -> np.ndarray:
    tokens = text.split() if any(ch.isspace() for ch in text.strip()) else list(text.strip())
    try:
        return np.array([_SYMBOL_VALUE[t] for t in tokens], dtype=np.uint8)
    except KeyError as exc:
        raise ValueError(f"unknown GF(4) symbol {exc.args[0]!r}") from None


def format_vector(v: np.ndarray, sep: str = " ") -> str:
    return sep.join(SYMBOLS[int(x)] for x in np.asarray(v).ravel())


def parse_matrix(text: str) -> np.ndarray:
    rows = [parse_vector(line) for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        return np.zeros((0, 0), dtype=np.uint8)
    if len({r.size for r in rows}) != 1:
        raise ValueError("ragged matrix text")
    return np.stack(rows)


def format_matrix(m: np.ndarray) -> str:
    return "\n".join(format_vector(row) for row in np.asarray(m)) + "\n"
