"""Group ring elements over GF(4) and the matrix map sigma."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

import numpy as np

from . import gf4
from .groups import GroupTable, from_descriptor, theorem32_exponents


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    """``v = sum_i coeffs[i] * g_i`` with ``g_i`` the i-th element of ``group``'s listing."""

    group: GroupTable
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.asarray(self.coeffs, dtype=np.uint8)
        if coeffs.shape != (self.group.order,):
            raise ValueError(f"need {self.group.order} coefficients, got shape {coeffs.shape}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._same_group(other)
        return GroupRingElement(self.group, self.coeffs ^ other.coeffs)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        """Convolution product ``sum_{g_i g_j = g_k} a_i b_j``."""
        self._same_group(other)
        out = np.zeros(self.group.order, dtype=np.uint8)
        for i in np.nonzero(self.coeffs)[0]:
            terms = gf4.MUL[self.coeffs[i]][other.coeffs]
            np.bitwise_xor.at(out, self.group.mul[i], terms)
        return GroupRingElement(self.group, out)

    def _same_group(self, other: "GroupRingElement") -> None:
        if other.group is not self.group:
            raise ValueError("group ring elements live over different group tables")

    def to_text(self) -> str:
        return gf4.format_vector(self.coeffs, sep="")


def sigma(v: GroupRingElement) -> np.ndarray:
    """n x n matrix with entry (i, j) = coefficient of ``g_i^-1 g_j``."""
    g = v.group
    return v.coeffs[g.mul[g.inv[:, None], np.arange(g.order)[None, :]]]


# ---------------------------------------------------------------------------
# block structure


@dataclass(frozen=True, eq=False)
class BlockPartition:
    """``m`` split into an (n/r) x (n/r) grid of r x r blocks.

    ``symbols[I, J]`` numbers distinct block contents in order of first
    appearance (row-major), so equal blocks share a symbol.
    """

    matrix: np.ndarray
    r: int
    symbols: np.ndarray

    @property
    def grid(self) -> int:
        return self.matrix.shape[0] // self.r

    def block(self, i: int, j: int) -> np.ndarray:
        r = self.r
        return self.matrix[i * r:(i + 1) * r, j * r:(j + 1) * r]

    def blocks(self) -> list[list[np.ndarray]]:
        return [[self.block(i, j) for j in range(self.grid)] for i in range(self.grid)]

    def reassemble(self) -> np.ndarray:
        return np.block(self.blocks())


def partition(m: np.ndarray, r: int) -> BlockPartition:
    m = np.asarray(m, dtype=np.uint8)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("partition needs a square matrix")
    if not 1 < r < n or n % r:
        raise ValueError(f"block size {r} must divide {n} with 1 < r < n")
    q = n // r
    seen: dict[bytes, int] = {}
    symbols = np.empty((q, q), dtype=np.int64)
    for i in range(q):
        for j in range(q):
            key = m[i * r:(i + 1) * r, j * r:(j + 1) * r].tobytes()
            symbols[i, j] = seen.setdefault(key, len(seen))
    return BlockPartition(m, r, symbols)


def block_reversal_pairing(symbols: np.ndarray) -> dict[int, int] | None:
    """Map each block row to a block row equal to its block-reverse, or ``None``.

    When several rows match, the largest-indexed one is chosen.
    """
    symbols = np.asarray(symbols)
    pairing: dict[int, int] = {}
    rows = [tuple(row) for row in symbols]
    for i, row in enumerate(rows):
        target = tuple(reversed(row))
        matches = [j for j, other in enumerate(rows) if other == target]
        if not matches:
            return None
        pairing[i] = matches[-1]
    return pairing


def is_block_reversible(p: BlockPartition | np.ndarray) -> tuple[bool, dict[int, int]]:
    """Whether reversing the block order of every block row gives another block row.

    Accepts a :class:`BlockPartition` or a bare symbol grid.
    """
    symbols = p.symbols if isinstance(p, BlockPartition) else p
    pairing = block_reversal_pairing(symbols)
    return (pairing is not None, pairing or {})


# ---------------------------------------------------------------------------
# coefficient placement for C_r x C_m


def theorem32_block_labels(m: int) -> np.ndarray:
    """Structural symbol grid of sigma(v) over the block-reversible C_r x C_m listing.

    Block (I, J) holds the coefficients attached to y^(e_J - e_I), where
    ``e`` is :func:`~revdna.groups.theorem32_exponents`; the label is the
    position of that exponent in the listing.
    """
    seq = theorem32_exponents(m)
    where = {e: b for b, e in enumerate(seq)}
    return np.array([[where[(ej - ei) % m] for ej in seq] for ei in seq], dtype=np.int64)


def theorem32_placement(r: int, m: int) -> list[tuple[int, int]]:
    """``(x exponent, y exponent)`` carried by coefficient slot ``p`` (0-based).

    Slots ``b*r .. b*r + r-1`` go to y^0 for b = 0, y^(m/2) for the last
    block, and y^k / y^(m-k) for blocks 2k-1 / 2k.
    """
    if m < 2 or m % 2:
        raise ValueError("n/r must be even")
    out: list[tuple[int, int]] = [None] * (r * m)  # type: ignore[list-item]
    for i in range(r):
        out[i] = (i, 0)
        out[i + (m - 1) * r] = (i, m // 2)
    for k in range(1, m // 2):
        for j in range(r):
            out[j + (2 * k - 1) * r] = (j, k)
            out[j + 2 * k * r] = (j, m - k)
    return out


def build_v_theorem32(coeffs: Sequence[int] | np.ndarray, r: int, group: GroupTable) -> GroupRingElement:
    """Place coefficient slot p on the group element ``x^i y^k`` dictated by the block-reversible sum.

    ``group`` must be C_r x C_m in the listing of
    :func:`~revdna.groups.theorem32_group` (labels ``x^i y^k``); ``4 | n`` and
    ``m = n/r`` even are required.
    """
    coeffs = np.asarray(coeffs, dtype=np.uint8)
    n = group.order
    if coeffs.shape != (n,):
        raise ValueError(f"need {n} coefficients")
    if n % 4 or n % r or (n // r) % 2 or not 1 < r < n:
        raise ValueError("need 4 | n, r | n, 1 < r < n and n/r even")
    m = n // r
    out = np.zeros(n, dtype=np.uint8)
    for p, (i, k) in enumerate(theorem32_placement(r, m)):
        label = (_power(("x", i)) + _power(("y", k))) or "1"
        out[group.index(label)] = coeffs[p]
    return GroupRingElement(group, out)


def _power(sym_exp: tuple[str, int]) -> str:
    sym, e = sym_exp
    if e == 0:
        return ""
    return sym if e == 1 else f"{sym}^{e}"


# ---------------------------------------------------------------------------
# serialization: group descriptor + coefficient string


def to_record(v: GroupRingElement, descriptor: Mapping[str, Any]) -> dict[str, Any]:
    return {"group": dict(descriptor), "coeffs": v.to_text()}


def from_record(record: Mapping[str, Any]) -> GroupRingElement:
    g = from_descriptor(record["group"])
    return GroupRingElement(g, gf4.parse_vector(record["coeffs"]))
