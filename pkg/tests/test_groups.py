import numpy as np
import pytest

from revdna import groups


@pytest.mark.parametrize("g", [
    groups.cyclic(6), groups.dihedral(4), groups.quasidihedral(8), groups.quasidihedral(4),
    groups.theorem32_group(4, 4), groups.h1(8), groups.h2(16), groups.h3(8), groups.h3(6),
], ids=lambda g: g.name)
def test_tables_are_groups(g):
    g.check()


def test_dihedral_relations():
    g = groups.dihedral(4)
    a, b = g.index("a"), g.index("b")
    assert g.element_order(a) == 4 and g.element_order(b) == 2
    assert g.product(g.product(b, a), b) == g.inv[a]
    assert not g.is_abelian()


def test_quasidihedral_twist():
    g = groups.quasidihedral(8)  # order 16, s = 3
    c, d = g.index("c"), g.index("d")
    assert g.product(g.product(d, c), d) == g.power(c, 3)
    assert groups.quasidihedral(4).is_abelian()  # s = 1: C4 x C2
    with pytest.raises(ValueError):
        groups.quasidihedral(6)


def test_theorem32_listing_blocks():
    assert groups.theorem32_exponents(4) == [0, 1, 3, 2]
    assert groups.theorem32_exponents(6) == [0, 1, 5, 2, 4, 3]
    g = groups.theorem32_group(2, 4)
    assert g.labels == ("1", "x", "y", "xy", "y^3", "xy^3", "y^2", "xy^2")


def test_direct_product_natural_listing():
    g = groups.direct_product(groups.cyclic(2, "x"), groups.cyclic(2, "y"))
    assert g.labels == ("1", "x", "y", "xy")


def test_reversible_listing_cyclic6():
    g = groups.cyclic(6)
    assert groups.reversible_listing(g, [0, 2, 4], 3) == [0, 2, 4, 1, 5, 3]


def test_reversible_listing_rejects_bad_input():
    g = groups.cyclic(8)
    with pytest.raises(ValueError):
        groups.reversible_listing(g, [0, 2, 4, 6], 4)  # beta inside the subgroup
    with pytest.raises(ValueError):
        groups.reversible_listing(g, [0, 1, 2, 3], 5)  # not a subgroup
    with pytest.raises(ValueError):
        groups.reversible_listing(groups.cyclic(6), [0, 2, 4], 1)  # beta of order 6


@pytest.mark.parametrize("which", [1, 2, 3])
@pytest.mark.parametrize("order", [4, 8, 16])
def test_auxiliary_groups_listed_reversibly(which, order):
    if which == 2 and order % 8:
        with pytest.raises(ValueError):
            groups.auxiliary_group(which, order)
        return
    h = groups.auxiliary_group(which, order)
    assert h.order == order
    assert groups.is_reversible_listing(h)
    beta = order - 1
    for i in range(order // 2):
        assert h.product(beta, i) == order - 1 - i


def test_h3_cyclic_case_and_order_four_fallback():
    h = groups.h3(6)
    assert h.labels == ("1", "e^2", "e^4", "e", "e^5", "e^3")
    h8 = groups.h3(8)
    assert h8.is_abelian() and max(h8.element_order(i) for i in range(8)) == 4


def test_relist_and_index():
    g = groups.cyclic(4)
    r = g.relist([0, 3, 2, 1])
    assert r.labels == ("1", "e^3", "e^2", "e")
    r.check()
    with pytest.raises(KeyError):
        g.index("nope")


def test_from_descriptor():
    g = groups.from_descriptor({"kind": "cyclic", "order": 6, "listing": {"subgroup": [0, 2, 4], "beta": 3}})
    assert groups.is_reversible_listing(g)
    p = groups.from_descriptor({"kind": "product", "r": 4, "m": 4})
    assert p.order == 16
    a = groups.from_descriptor({"kind": "auxiliary", "which": 2, "order": 8})
    assert a.order == 8
    with pytest.raises(ValueError):
        groups.from_descriptor({"kind": "sporadic"})


def test_power_negative_and_orders():
    g = groups.cyclic(5)
    e = g.index("e")
    assert g.power(e, -1) == g.inv[e]
    assert g.power(e, 5) == 0
    assert np.all(np.sort(g.mul, axis=1) == np.arange(5))
