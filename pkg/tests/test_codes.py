import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revdna import codes, gf4
from revdna.codes import LinearCode


def random_code(rng, k, n):
    return LinearCode(rng.integers(0, 4, (k, n), dtype=np.uint8))


def naive_codewords(code):
    out = []
    for msg in itertools.product(range(4), repeat=code.k):
        out.append(code.encode(np.array(msg, dtype=np.uint8)))
    return np.array(out)


@settings(max_examples=40)
@given(st.integers(1, 80), st.integers(0, 2**31))
def test_pack_round_trip_and_weights(n, seed):
    rng = np.random.default_rng(seed)
    v = rng.integers(0, 4, (5, n), dtype=np.uint8)
    p = codes.pack(v)
    assert (codes.unpack(p, n) == v).all()
    assert (codes.packed_weight(p) == np.count_nonzero(v, axis=1)).all()
    assert (codes.packed_gc_weight(p) == np.count_nonzero(v >= 2, axis=1)).all()
    for c in range(4):
        assert (codes.unpack(codes.packed_scale(c, p), n) == gf4.MUL[c][v]).all()


def test_gray_steps_visit_every_message_once():
    digits = 3
    state, seen = 0, {0}
    for row, c in codes.gray_steps(digits):
        state ^= c << (2 * row)
        seen.add(state)
    assert len(seen) == 4 ** digits


@pytest.mark.parametrize("k,n", [(1, 5), (3, 7), (5, 9), (10, 12)])
def test_enumeration_is_the_row_space(k, n):
    rng = np.random.default_rng(k * n)
    code = random_code(rng, k, n)
    words = codes.all_codewords(code, basis=None, max_k=10)
    assert words.shape[0] == code.size
    assert len(np.unique(words, axis=0)) == code.size
    if code.k <= 5:
        ref = codes.pack(naive_codewords(code))
        assert set(map(bytes, ref)) == set(map(bytes, words))
    for w in codes.unpack(words[:: max(1, len(words) // 50)], n):
        assert code.contains(w)


def test_dimension_and_size_are_exact_integers():
    m = np.vstack([np.eye(3, 6, dtype=np.uint8), np.eye(3, 6, dtype=np.uint8)])
    code = LinearCode(m)
    assert code.k == 3 and code.size == 64
    big = LinearCode(np.eye(40, dtype=np.uint8))
    assert big.size == 4 ** 40 == 1208925819614629174706176


def test_budget_exceeded():
    code = LinearCode(np.eye(12, dtype=np.uint8))
    with pytest.raises(codes.BudgetExceeded):
        codes.all_codewords(code, max_k=10)


def test_distance_brute_matches_naive():
    rng = np.random.default_rng(7)
    for _ in range(20):
        k, n = int(rng.integers(1, 5)), int(rng.integers(5, 12))
        code = random_code(rng, k, n)
        words = naive_codewords(code)
        ref = min(int(np.count_nonzero(w)) for w in words if w.any())
        res = codes.min_distance(code, method="brute")
        assert res.d == ref and res.certified
        assert np.count_nonzero(res.witness) == ref and code.contains(res.witness)


def test_information_set_matches_brute():
    rng = np.random.default_rng(11)
    for _ in range(25):
        k, n = int(rng.integers(2, 9)), int(rng.integers(10, 25))
        code = random_code(rng, min(k, n), n)
        a = codes.min_distance(code, method="brute")
        b = codes.min_distance(code, method="information_set")
        assert a.d == b.d
        assert code.contains(b.witness) and np.count_nonzero(b.witness) == b.d


def test_information_sets_span_the_code():
    rng = np.random.default_rng(5)
    code = random_code(rng, 5, 18)
    sets = codes.information_sets(code.basis)
    assert sets[0][1] == code.k
    assert sum(rank for _, rank in sets) <= code.n
    for g, rank in sets:
        assert rank >= 1 and LinearCode(g).k == code.k
        assert all(code.contains(row) for row in g)


def test_stop_at_certifies_lower_bound():
    # [n, 1] repetition-like code: d = n
    code = LinearCode(np.ones((1, 12), dtype=np.uint8))
    res = codes.min_distance(code, method="information_set", stop_at=4)
    assert res.certified and res.lower >= 4


def test_zero_code_has_no_distance():
    with pytest.raises(ValueError):
        codes.min_distance(LinearCode(np.zeros((2, 4), dtype=np.uint8)))


def test_reversibility():
    pal = LinearCode(np.array([[1, 2, 2, 1], [0, 1, 1, 0]], dtype=np.uint8))
    assert codes.is_reversible(pal) and codes.reversal_witness(pal) is None
    not_rev = LinearCode(np.array([[1, 2, 0, 0]], dtype=np.uint8))
    assert not codes.is_reversible(not_rev)
    assert codes.reversal_witness(not_rev) is not None
    assert codes.is_reversible(not_rev.reversed()) is False


def test_weight_enumerators_small_code():
    code = LinearCode(np.array([[1, 1, 2]], dtype=np.uint8))
    enum = codes.weight_enumerators(code)
    assert enum.total == 4
    # codewords 000, 11w, wwW, WW1 have GC weights 0, 1, 3, 2
    assert enum.gcw == [1, 1, 1, 1]
    assert sorted(enum.cwe.items()) == sorted({(3, 0, 0, 0): 1, (0, 2, 1, 0): 1, (0, 0, 2, 1): 1, (0, 1, 0, 2): 1}.items())


def test_zero_code_enumerator():
    enum = codes.weight_enumerators(LinearCode(np.zeros((1, 5), dtype=np.uint8)))
    assert enum.gcw == [1, 0, 0, 0, 0, 0]
    assert enum.gcw_polynomial() == "X1^5"


def test_enumerator_formats():
    enum = codes.weight_enumerators(LinearCode(np.array([[1, 2]], dtype=np.uint8)))
    assert enum.gcw_text() == "GCW: [1, 2, 1]"
    assert enum.cwe_csv().splitlines()[0] == "n0,n1,nw,nw2,count"
    assert sum(int(line.split(",")[-1]) for line in enum.cwe_csv().splitlines()[1:]) == 4
