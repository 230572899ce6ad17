import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revdna import gf4, groupring, groups
from revdna.groupring import GroupRingElement, sigma

GROUPS = [groups.cyclic(6), groups.dihedral(4), groups.theorem32_group(4, 4), groups.h2(8)]


def random_element(g, rng):
    return GroupRingElement(g, rng.integers(0, 4, g.order, dtype=np.uint8))


@pytest.mark.parametrize("g", GROUPS, ids=lambda g: g.name)
def test_sigma_is_multiplicative(g):
    rng = np.random.default_rng(1)
    for _ in range(10):
        a, b = random_element(g, rng), random_element(g, rng)
        assert (sigma(a * b) == gf4.matmul(sigma(a), sigma(b))).all()
        assert (sigma(a + b) == (sigma(a) ^ sigma(b))).all()


def test_sigma_first_row_is_coefficients_and_identity():
    g = groups.dihedral(3)
    v = GroupRingElement(g, np.arange(6) % 4)
    assert (sigma(v)[0] == v.coeffs).all()
    one = GroupRingElement(g, np.eye(1, 6, 0, dtype=np.uint8)[0])
    assert (sigma(one) == np.eye(6, dtype=np.uint8)).all()


def test_cyclic_sigma_is_circulant():
    g = groups.cyclic(5)
    c = np.array([1, 2, 3, 0, 1], dtype=np.uint8)
    assert (sigma(GroupRingElement(g, c)) == gf4.circulant(c)).all()


def test_mismatched_groups_rejected():
    a = GroupRingElement(groups.cyclic(4), np.zeros(4))
    b = GroupRingElement(groups.cyclic(4), np.zeros(4))
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        GroupRingElement(groups.cyclic(4), np.zeros(3))


def test_partition_symbols_and_reassembly():
    m = np.block([[np.ones((2, 2)), np.zeros((2, 2))], [np.zeros((2, 2)), np.ones((2, 2))]]).astype(np.uint8)
    p = groupring.partition(m, 2)
    assert p.symbols.tolist() == [[0, 1], [1, 0]]
    assert (p.reassemble() == m).all()
    assert groupring.is_block_reversible(p)[0]
    with pytest.raises(ValueError):
        groupring.partition(m, 3)
    with pytest.raises(ValueError):
        groupring.partition(m, 4)


def test_block_reversal_pairing():
    ok, pairing = groupring.is_block_reversible(np.array([[0, 1, 2], [2, 1, 0], [1, 1, 1]]))
    assert ok and pairing == {0: 1, 1: 0, 2: 2}
    ok, pairing = groupring.is_block_reversible(np.array([[0, 1], [0, 1]]))
    assert not ok and pairing == {}


def test_theorem32_labels_m4():
    assert groupring.theorem32_block_labels(4).tolist() == [[0, 1, 2, 3], [2, 0, 3, 1], [1, 3, 0, 2], [3, 2, 1, 0]]


@settings(max_examples=30)
@given(st.sampled_from([(16, 4), (16, 8), (24, 6), (32, 8), (32, 4), (24, 4)]), st.integers(0, 2**31))
def test_theorem32_sigma_block_reversible(nr, seed):
    n, r = nr
    g = groups.theorem32_group(r, n // r)
    coeffs = np.random.default_rng(seed).integers(0, 4, n, dtype=np.uint8)
    v = groupring.build_v_theorem32(coeffs, r, g)
    p = groupring.partition(sigma(v), r)
    assert groupring.is_block_reversible(p)[0]
    # content symbols refine the structural labels
    labels = groupring.theorem32_block_labels(n // r)
    for label in np.unique(labels):
        assert len(set(p.symbols[labels == label].tolist())) == 1


def test_theorem32_placement_is_listing_order():
    g = groups.theorem32_group(4, 4)
    coeffs = np.arange(16, dtype=np.uint8) % 4
    v = groupring.build_v_theorem32(coeffs, 4, g)
    assert (v.coeffs == coeffs).all()
    placement = groupring.theorem32_placement(4, 4)
    assert placement[4] == (0, 1) and placement[8] == (0, 3) and placement[12] == (0, 2)


def test_natural_listing_usually_not_block_reversible():
    g = groups.direct_product(groups.cyclic(2), groups.cyclic(4))  # natural y order 0,1,2,3
    rng = np.random.default_rng(3)
    verdicts = {groupring.is_block_reversible(groupring.partition(sigma(random_element(g, rng)), 2))[0]
                for _ in range(20)}
    assert False in verdicts


def test_record_round_trip():
    desc = {"kind": "product", "r": 4, "m": 4}
    g = groups.from_descriptor(desc)
    v = GroupRingElement(g, np.arange(16) % 4)
    back = groupring.from_record(groupring.to_record(v, desc))
    assert (back.coeffs == v.coeffs).all() and back.group.labels == g.labels
