"""Finite groups as Cayley tables.

A :class:`GroupTable` stores its elements in a fixed *listing*: element ``i``
is the ``i``-th element of the listing, index 0 is the identity.  Changing
the listing is a relabelling (:meth:`GroupTable.relist`); every matrix built
from a group reads the listing straight off the index order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class GroupTable:
    mul: np.ndarray
    inv: np.ndarray
    labels: tuple[str, ...]
    name: str = ""
    _index: dict[str, int] = field(default=None, repr=False, compare=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupTable({self.name or '?'}, order={self.order})"

    def index(self, label: str) -> int:
        return self._index[label]

    def product(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def power(self, a: int, e: int) -> int:
        out = 0
        for _ in range(e % self.element_order(a)):
            out = int(self.mul[out, a])
        return out

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = int(self.mul[x, a])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def relist(self, perm: Sequence[int], name: str | None = None) -> "GroupTable":
        """Return the same group listed as ``perm[0], perm[1], ...``."""
        perm = np.asarray(perm, dtype=np.int64)
        n = self.order
        if sorted(perm.tolist()) != list(range(n)):
            raise ValueError("listing must be a permutation of the elements")
        if perm[0] != 0:
            raise ValueError("listing must start with the identity")
        pos = np.empty(n, dtype=np.int64)
        pos[perm] = np.arange(n)
        mul = pos[self.mul[np.ix_(perm, perm)]]
        inv = pos[self.inv[perm]]
        labels = tuple(self.labels[i] for i in perm)
        return GroupTable(mul, inv, labels, name if name is not None else self.name)

    def check(self, associativity: bool = True) -> None:
        """Raise ``ValueError`` unless the table is a group with identity at 0."""
        n = self.order
        full = np.arange(n)
        if self.mul.shape != (n, n) or self.inv.shape != (n,):
            raise ValueError("bad table shapes")
        if not (np.array_equal(self.mul[0], full) and np.array_equal(self.mul[:, 0], full)):
            raise ValueError("index 0 is not the identity")
        for i in range(n):
            if sorted(self.mul[i]) != list(full) or sorted(self.mul[:, i]) != list(full):
                raise ValueError("multiplication table is not a Latin square")
        if not np.all(self.mul[full, self.inv] == 0):
            raise ValueError("inverse table is wrong")
        if associativity:
            # (ab)c vs a(bc) for all triples at once
            lhs = self.mul[self.mul[:, :, None], full[None, None, :]]
            rhs = self.mul[full[:, None, None], self.mul[None, :, :]]
            if not np.array_equal(lhs, rhs):
                raise ValueError("multiplication is not associative")


def _from_elements(elements: list[Any], op, label, name: str) -> GroupTable:
    pos = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mul[i, j] = pos[op(a, b)]
    inv = np.argmin(mul, axis=1).astype(np.int64)  # identity sits at index 0
    return GroupTable(mul, inv, tuple(label(e) for e in elements), name)


def _power_label(sym: str, e: int) -> str:
    if e == 0:
        return ""
    return sym if e == 1 else f"{sym}^{e}"


def cyclic(m: int, generator: str = "e") -> GroupTable:
    """Cyclic group C_m listed as 1, e, e^2, ..."""
    if m < 1:
        raise ValueError("cyclic group order must be >= 1")
    return _from_elements(
        list(range(m)),
        lambda a, b: (a + b) % m,
        lambda a: _power_label(generator, a) or "1",
        f"C{m}",
    )


def _metacyclic(half: int, s: int, rot: str, ref: str, name: str) -> GroupTable:
    # elements ref^j rot^i stored as (j, i); rot^i ref = ref rot^(i*s)
    elements = [(0, i) for i in range(half)] + [(1, i) for i in range(half)]

    def op(a, b):
        (j1, i1), (j2, i2) = a, b
        return ((j1 + j2) % 2, (i1 * pow(s, j2, half) + i2) % half)

    def label(e):
        j, i = e
        text = (ref if j else "") + _power_label(rot, i)
        return text or "1"

    return _from_elements(elements, op, label, name)


def dihedral(half: int) -> GroupTable:
    """Dihedral group <a, b | a^half = b^2 = 1, b a b = a^-1> of order 2*half.

    Natural listing ``1, a, ..., a^(half-1), b, ba, ..., ba^(half-1)``.
    """
    if half < 2:
        raise ValueError("dihedral group needs half >= 2")
    return _metacyclic(half, half - 1, "a", "b", f"D{2 * half}")


def quasidihedral_exponent(half: int) -> int:
    """Twist exponent ``s = half/2 - 1`` of the quasi-dihedral family."""
    return half // 2 - 1


def quasidihedral(half: int) -> GroupTable:
    """<c, d | c^half = d^2 = 1, d c d = c^s> with ``s = half/2 - 1``.

    Conjugation by ``d`` is an automorphism only when ``s^2 = 1 (mod half)``,
    which holds exactly when ``4 | half``.  For ``half = 4`` the twist is
    trivial and the group is C4 x C2.
    """
    if half < 2 or half % 2:
        raise ValueError("quasi-dihedral group needs an even half >= 2")
    s = quasidihedral_exponent(half)
    if (s * s) % half != 1 % half:
        raise ValueError(f"c -> c^{s} is not an automorphism of C{half} (s^2 != 1 mod {half})")
    return _metacyclic(half, s, "c", "d", f"QD{2 * half}")


def theorem32_exponents(m: int) -> list[int]:
    """Order of the y-exponent blocks: 0, 1, m-1, 2, m-2, ..., m/2-1, m/2+1, m/2."""
    if m < 2 or m % 2:
        raise ValueError("block count must be even and >= 2")
    seq = [0]
    for k in range(1, m // 2):
        seq += [k, m - k]
    seq.append(m // 2)
    return seq


def direct_product(a: GroupTable, b: GroupTable, listing: str = "natural") -> GroupTable:
    """Direct product ``a x b``.

    ``listing="natural"`` lists ``b``-blocks in ``b``'s order with ``a``
    running fastest.  ``listing="theorem32"`` expects ``b`` to be a cyclic
    group ``C_m`` in natural order and arranges its blocks as
    :func:`theorem32_exponents`; with ``a = C_r`` this is the
    ``x^i y^k`` ordering that makes sigma(v) block reversible.
    """
    na, nb = a.order, b.order
    if listing == "natural":
        blocks = list(range(nb))
    elif listing == "theorem32":
        blocks = theorem32_exponents(nb)
    else:
        raise ValueError(f"unknown listing {listing!r}")
    elements = [(i, j) for j in blocks for i in range(na)]
    pos = {e: t for t, e in enumerate(elements)}
    n = na * nb
    mul = np.empty((n, n), dtype=np.int64)
    inv = np.empty(n, dtype=np.int64)
    for t, (i1, j1) in enumerate(elements):
        inv[t] = pos[(int(a.inv[i1]), int(b.inv[j1]))]
        for u, (i2, j2) in enumerate(elements):
            mul[t, u] = pos[(int(a.mul[i1, i2]), int(b.mul[j1, j2]))]

    def label(i: int, j: int) -> str:
        text = ("" if i == 0 else a.labels[i]) + ("" if j == 0 else b.labels[j])
        return text or "1"

    labels = tuple(label(i, j) for i, j in elements)
    return GroupTable(mul, inv, labels, f"{a.name}x{b.name}")


def theorem32_group(r: int, m: int) -> GroupTable:
    """C_r x C_m = <x, y> listed block-wise by y-exponent as in the block-reversible construction."""
    return direct_product(cyclic(r, "x"), cyclic(m, "y"), listing="theorem32")


# ---------------------------------------------------------------------------
# reversible listings {e, t1, ..., t_{l-1}, b t_{l-1}, ..., b t1, b}


def is_subgroup(g: GroupTable, elements: Sequence[int]) -> bool:
    s = set(int(x) for x in elements)
    if 0 not in s:
        return False
    return all(int(g.mul[a, b]) in s for a in s for b in s)


def reversible_listing(g: GroupTable, subgroup: Sequence[int], beta: int) -> list[int]:
    """Listing ``e, t1, ..., t_{l-1}, beta t_{l-1}, ..., beta t1, beta``.

    ``subgroup`` gives the index-2 subgroup T in the desired order with the
    identity first; ``beta`` must be an involution outside T.
    """
    t = [int(x) for x in subgroup]
    n = g.order
    if 2 * len(t) != n:
        raise ValueError(f"subgroup of size {len(t)} does not have index 2 in a group of order {n}")
    if len(set(t)) != len(t) or t[0] != 0:
        raise ValueError("subgroup listing must be distinct and start with the identity")
    if not is_subgroup(g, t):
        raise ValueError("given elements do not form a subgroup")
    if beta in t:
        raise ValueError("beta lies inside the subgroup")
    if beta == 0 or int(g.mul[beta, beta]) != 0:
        raise ValueError("beta must have order 2")
    return t + [int(g.mul[beta, x]) for x in reversed(t)]


def is_reversible_listing(g: GroupTable) -> bool:
    """True if ``g``'s own index order has the reversible shape.

    Checks: the first half is a subgroup, the last element ``beta`` is an
    involution outside it, and element ``n-1-i`` equals ``beta * element i``.
    """
    n = g.order
    if n % 2:
        return False
    beta = n - 1
    if n == 2:
        return int(g.mul[beta, beta]) == 0
    if int(g.mul[beta, beta]) != 0 or not is_subgroup(g, range(n // 2)):
        return False
    return all(int(g.mul[beta, i]) == n - 1 - i for i in range(n // 2))


def listed_reversibly(g: GroupTable, subgroup: Sequence[int], beta: int, name: str | None = None) -> GroupTable:
    return g.relist(reversible_listing(g, subgroup, beta), name=name)


def h1(order: int) -> GroupTable:
    """Dihedral group of the given order, listed 1, a, ..., a^(h-1), ba^(h-1), ..., ba, b."""
    if order % 2:
        raise ValueError("H1 needs even order")
    g = dihedral(order // 2)
    half = order // 2
    return listed_reversibly(g, range(half), g.index("b"), name=f"H1[{order}]")


def h2(order: int) -> GroupTable:
    """Quasi-dihedral group of the given order, listed 1, c, ..., dc^(h-1), ..., dc, d."""
    if order % 2:
        raise ValueError("H2 needs even order")
    g = quasidihedral(order // 2)
    return listed_reversibly(g, range(order // 2), g.index("d"), name=f"H2[{order}]")


def h3(order: int) -> GroupTable:
    """Abelian group of the given order with subgroup <t> of index 2 listed reversibly.

    For ``order = 2 (mod 4)`` this is the cyclic group C_m listed
    ``1, e^2, ..., e^(m-2), e^(m/2) e^(m-2), ..., e^(m/2) e^2, e^(m/2)``.
    When ``4 | order`` the involution ``e^(m/2)`` lies inside ``<e^2>`` and
    that listing repeats elements, so C_(m/2) x C_2 is used instead: it has
    the same shape (cyclic index-2 subgroup in natural order, central
    involution outside it) and produces the same composite blocks.
    """
    if order % 2:
        raise ValueError("H3 needs even order")
    half = order // 2
    if half % 2:
        g = cyclic(order)
        return listed_reversibly(g, [(2 * i) % order for i in range(half)], half, name=f"H3[{order}]")
    g = direct_product(cyclic(half, "e"), cyclic(2, "f"))
    return listed_reversibly(g, range(half), g.index("f"), name=f"H3[{order}]")


AUXILIARY = {1: h1, 2: h2, 3: h3}


def auxiliary_group(which: int, order: int) -> GroupTable:
    try:
        return AUXILIARY[which](order)
    except KeyError:
        raise ValueError(f"auxiliary group index must be 1, 2 or 3, got {which}") from None


# ---------------------------------------------------------------------------
# descriptors {"kind": ..., ...}


def from_descriptor(desc: Mapping[str, Any]) -> GroupTable:
    """Build a group from a config mapping.

    Kinds: ``cyclic`` (``order``), ``dihedral`` / ``quasidihedral``
    (``half``), ``product`` (``r``, ``m``; listed for block reversibility) and
    ``auxiliary`` (``which`` in 1..3, ``order``).  An optional
    ``"listing": {"subgroup": [...], "beta": i}`` relists reversibly.
    """
    kind = desc["kind"]
    if kind == "cyclic":
        g = cyclic(int(desc["order"]))
    elif kind == "dihedral":
        g = dihedral(int(desc["half"]))
    elif kind == "quasidihedral":
        g = quasidihedral(int(desc["half"]))
    elif kind == "product":
        g = theorem32_group(int(desc["r"]), int(desc["m"]))
    elif kind == "auxiliary":
        return auxiliary_group(int(desc["which"]), int(desc["order"]))
    else:
        raise ValueError(f"unknown group kind {kind!r}")
    listing = desc.get("listing")
    if listing and listing != "natural":
        g = listed_reversibly(g, listing["subgroup"], int(listing["beta"]))
    return g
