"""Composite matrices: sigma(v) with blocks rewritten through auxiliary groups.

Block ``l`` (1-based, row-major over the (n/r) x (n/r) grid) of sigma(v) is

    A_l[u, v] = alpha(g_(j+u)^-1 g_(k+v))

and its substituted form through an auxiliary group H of order r is

    A'_l[u, v] = alpha(phi(h_u^-1 h_v)),   phi(h_t) = g_j^-1 g_(k+t-1).

In reversible mode every block is substituted, the H groups are listed
reversibly and blocks with the same symbol share the same H; the resulting
code is closed under reversal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import gf4
from .groupring import GroupRingElement, partition, sigma, theorem32_block_labels
from .groups import GroupTable, auxiliary_group, is_reversible_listing, theorem32_group


def anchor(l: int, n: int, r: int) -> tuple[int, int]:
    """1-based ``(j, k)`` anchor of block ``l``: first row / first column of the block in G's listing."""
    q = n // r
    if not 1 <= l <= q * q:
        raise ValueError(f"block index {l} outside 1..{q * q}")
    return ((l - 1) // q) * r + 1, ((l - 1) % q) * r + 1


@dataclass(frozen=True, eq=False)
class PhiMap:
    """Bijection from H (in listing order) onto the r elements g_j^-1 g_k, ..., g_j^-1 g_(k+r-1)."""

    l: int
    j: int
    k: int
    h: GroupTable
    targets: np.ndarray  # targets[t] = index in G of phi(h_(t+1))

    @classmethod
    def build(cls, l: int, h: GroupTable, base: GroupTable, r: int) -> "PhiMap":
        if h.order != r:
            raise ValueError(f"auxiliary group has order {h.order}, blocks are {r} x {r}")
        j, k = anchor(l, base.order, r)
        gj_inv = base.inv[j - 1]
        targets = base.mul[gj_inv, np.arange(k - 1, k - 1 + r)]
        return cls(l, j, k, h, targets)

    def __call__(self, t: int) -> int:
        return int(self.targets[t])


def plain_block(base: GroupRingElement, l: int, r: int) -> np.ndarray:
    j, k = anchor(l, base.group.order, r)
    return sigma(base)[j - 1:j - 1 + r, k - 1:k - 1 + r]


def build_A_prime(l: int, h: GroupTable, base: GroupRingElement, r: int | None = None) -> np.ndarray:
    """Substituted block ``A'_l`` for auxiliary group ``h`` (``r`` defaults to ``h.order``)."""
    r = h.order if r is None else r
    phi = PhiMap.build(l, h, base.group, r)
    quotients = h.mul[h.inv[:, None], np.arange(r)[None, :]]  # h_u^-1 h_v
    return base.coeffs[phi.targets[quotients]]


@dataclass(frozen=True, eq=False)
class CompositeSpec:
    """Which auxiliary group rewrites which block symbol.

    ``labels`` is the (n/r) x (n/r) symbol grid used to decide which blocks
    are "the same"; it defaults to content equality of sigma(v)'s blocks.
    ``assignment`` maps symbol -> auxiliary group.  In ``"reversible"`` mode
    every symbol must be assigned and every group listed reversibly.
    """

    base: GroupRingElement
    r: int
    assignment: Mapping[int, GroupTable]
    labels: np.ndarray | None = None
    mode: str = "reversible"
    name: str = field(default="")

    def __post_init__(self) -> None:
        n = self.base.group.order
        if not 1 < self.r < n or n % self.r:
            raise ValueError(f"block size {self.r} must divide {n} with 1 < r < n")
        if self.mode not in ("general", "reversible"):
            raise ValueError(f"unknown mode {self.mode!r}")
        labels = self.labels
        if labels is None:
            labels = partition(sigma(self.base), self.r).symbols
        labels = np.asarray(labels, dtype=np.int64)
        q = n // self.r
        if labels.shape != (q, q):
            raise ValueError(f"label grid must be {q} x {q}")
        object.__setattr__(self, "labels", labels)
        for sym, h in self.assignment.items():
            if h.order != self.r:
                raise ValueError(f"group for symbol {sym} has order {h.order}, expected {self.r}")
        if self.mode == "reversible":
            missing = set(np.unique(labels).tolist()) - set(self.assignment)
            if missing:
                raise ValueError(f"reversible mode needs a group for every symbol; missing {sorted(missing)}")
            for sym, h in self.assignment.items():
                if not is_reversible_listing(h):
                    raise ValueError(f"group for symbol {sym} is not listed reversibly")

    @property
    def n(self) -> int:
        return self.base.group.order

    def group_for_block(self, l: int) -> GroupTable | None:
        q = self.n // self.r
        return self.assignment.get(int(self.labels[(l - 1) // q, (l - 1) % q]))


def _assemble(base: GroupRingElement, r: int, block_group) -> np.ndarray:
    n = base.group.order
    q = n // r
    out = sigma(base).copy()
    for l in range(1, q * q + 1):
        h = block_group(l)
        if h is None:
            continue
        j, k = anchor(l, n, r)
        out[j - 1:j - 1 + r, k - 1:k - 1 + r] = build_A_prime(l, h, base, r)
    return out


def omega(spec: CompositeSpec) -> np.ndarray:
    """Composite matrix of ``spec`` (Omega*(v) in reversible mode)."""
    return _assemble(spec.base, spec.r, spec.group_for_block)


def omega_per_position(base: GroupRingElement, r: int, groups: Mapping[int, GroupTable]) -> np.ndarray:
    """Substitute block ``l`` with ``groups[l]`` regardless of block symbols.

    This can hand equal blocks different groups and then loses
    reversibility; it exists to reproduce that failure, not for building codes.
    """
    for l, h in groups.items():
        if h.order != r:
            raise ValueError(f"group for block {l} has order {h.order}, expected {r}")
    return _assemble(base, r, groups.get)


# ---------------------------------------------------------------------------
# Lemma-level permutation


def lemma32_permutation(h: GroupTable) -> np.ndarray:
    """Permutation matrix exchanging row m with row r-m+1 (the anti-identity).

    For any block A' built from a reversibly listed ``h``,
    ``reverse(a @ A') == (a @ P) @ A'``.
    """
    if not is_reversible_listing(h):
        raise ValueError("group is not listed reversibly")
    return np.eye(h.order, dtype=np.uint8)[::-1].copy()


# ---------------------------------------------------------------------------
# families over C_r x C_m


def _split(coeffs: np.ndarray, n: int) -> list[np.ndarray]:
    coeffs = np.asarray(coeffs, dtype=np.uint8)
    if n % 16:
        raise ValueError("closed forms need 16 | n")
    if coeffs.shape != (n,):
        raise ValueError(f"need {n} coefficients")
    q = n // 4
    return [coeffs[i * q:(i + 1) * q] for i in range(4)]


def closed_form_G12(coeffs: Sequence[int] | np.ndarray, n: int) -> np.ndarray:
    """Dihedral on the diagonal blocks, quasi-dihedral off the diagonal."""
    a, b, c, d = _split(coeffs, n)
    A1, B1, A2 = gf4.circulant(a), gf4.circulant(b), gf4.circulant(c)
    B2 = gf4.l_circulant(n // 8 + 1, d)
    T, F = gf4.transpose, gf4.flip
    return np.block([
        [A1, B1, A2, B2],
        [T(B1), T(A1), F(B2), T(A2)],
        [A2, B2, A1, B1],
        [F(B2), T(A2), T(B1), T(A1)],
    ])


def closed_form_G22(coeffs: Sequence[int] | np.ndarray, n: int) -> np.ndarray:
    """Quasi-dihedral on every block."""
    a, b, c, d = _split(coeffs, n)
    shift = n // 8 + 1
    A1, B1 = gf4.circulant(a), gf4.l_circulant(shift, b)
    A2, B2 = gf4.circulant(c), gf4.l_circulant(shift, d)
    T, F = gf4.transpose, gf4.flip
    return np.block([
        [A1, B1, A2, B2],
        [F(B1), T(A1), F(B2), T(A2)],
        [A2, B2, A1, B1],
        [F(B2), T(A2), F(B1), T(A1)],
    ])


def closed_form_G32(coeffs: Sequence[int] | np.ndarray, n: int) -> np.ndarray:
    """Abelian H3 on the diagonal blocks, quasi-dihedral off the diagonal."""
    a, b, c, d = _split(coeffs, n)
    A1 = gf4.circulant(a)
    B1 = gf4.reverse_circulant(b)
    A2 = gf4.circulant(np.concatenate([a[:1], a[:0:-1]]))
    B2 = gf4.reverse_circulant(np.concatenate([b[-2::-1], b[-1:]]))
    A3 = gf4.circulant(c)
    B3 = gf4.l_circulant(n // 8 + 1, d)
    T, F = gf4.transpose, gf4.flip
    return np.block([
        [A1, B1, A3, B3],
        [B2, A2, F(B3), T(A3)],
        [A3, B3, A1, B1],
        [F(B3), T(A3), B2, A2],
    ])


CLOSED_FORMS = {"G12": closed_form_G12, "G22": closed_form_G22, "G32": closed_form_G32}

_PAIR_FAMILIES = {"G12": (1, 2), "G22": (2, 2), "G32": (3, 2)}


def parse_family(family: str) -> tuple[int, ...]:
    """``"G12"`` -> (1, 2); ``"G1123"`` -> (1, 1, 2, 3)."""
    if not family.startswith("G") or not family[1:].isdigit() or len(family) not in (3, 5):
        raise ValueError(f"unknown family {family!r}")
    idx = tuple(int(ch) for ch in family[1:])
    if any(i not in (1, 2, 3) for i in idx):
        raise ValueError(f"group indices must be in 1..3: {family!r}")
    if len(idx) == 2 and family not in _PAIR_FAMILIES:
        raise ValueError(f"two-index families are G12, G22, G32; got {family!r}")
    return idx


def family_blocks(family: str) -> int:
    """Number of blocks per row of the base grid (n/r): 2 for G12/G22/G32, 4 for Gijkl."""
    return 2 if len(parse_family(family)) == 2 else 4


def check_family_length(family: str, n: int) -> None:
    if n % 16:
        raise ValueError(f"{family} needs 16 | n, got n={n}")
    idx = parse_family(family)
    r = n // family_blocks(family)
    if 2 in idx and (r // 2) % 4:
        raise ValueError(f"{family}: quasi-dihedral group of order {r} does not exist in this family (needs 8 | r)")


def family_spec(family: str, coeffs: Sequence[int] | np.ndarray, n: int) -> CompositeSpec:
    """CompositeSpec for ``G12``/``G22``/``G32`` (n/r = 2) or ``Gijkl`` (n/r = 4).

    For ``Gijkl`` the four indices pick H_i for the four symbols of the
    first block row (A, B, C, D) in order.
    """
    check_family_length(family, n)
    idx = parse_family(family)
    q = family_blocks(family)
    r = n // q
    g = theorem32_group(r, q)
    v = GroupRingElement(g, np.asarray(coeffs, dtype=np.uint8))
    labels = theorem32_block_labels(q)
    cache: dict[int, GroupTable] = {}
    assignment = {}
    for sym, which in enumerate(idx):
        if which not in cache:
            cache[which] = auxiliary_group(which, r)
        assignment[sym] = cache[which]
    return CompositeSpec(v, r, assignment, labels=labels, mode="reversible", name=family)


def build_family(family: str, coeffs: Sequence[int] | np.ndarray, n: int) -> np.ndarray:
    """Generator matrix of ``family`` at length ``n`` (closed form when one exists)."""
    if family in CLOSED_FORMS:
        check_family_length(family, n)
        return CLOSED_FORMS[family](coeffs, n)
    return omega(family_spec(family, coeffs, n))
