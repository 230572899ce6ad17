import json

import numpy as np
import pytest

from revdna import codes, gf4, search
from revdna.search import SearchConfig, SearchRecord


def small_cfg(**kw):
    base = dict(family="G12", n=16, target_d=2, strategy="random", seed=3, trials=40)
    base.update(kw)
    return SearchConfig(**base)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig("G12", 24, 4)
    with pytest.raises(ValueError):
        SearchConfig("G2111", 16, 4)
    with pytest.raises(ValueError):
        SearchConfig("G12", 16, 4, strategy="annealing")
    with pytest.raises(ValueError):
        SearchConfig("G12", 16, 4, strategy="exhaustive", candidates=("0101",))
    with pytest.raises(ValueError):
        SearchConfig.from_dict({"family": "G12", "n": 16, "target_d": 2, "colour": "red"})


def test_zero_trials_gives_nothing():
    assert list(search.run_search(small_cfg(trials=0))) == []


def test_deterministic_stream():
    a = [r.comparable() for r in search.run_search(small_cfg())]
    b = [r.comparable() for r in search.run_search(small_cfg())]
    assert a and a == b
    c = [r.comparable() for r in search.run_search(small_cfg(seed=4))]
    assert a != c


def test_records_ordered_by_index_and_replayable():
    recs = list(search.run_search(small_cfg(trials=60)))
    assert [r.index for r in recs] == sorted(r.index for r in recs)
    for rec in recs:
        code = search.replay(rec)
        assert code.k == rec.k
        assert rec.status == "found" and rec.d_lower >= rec.target_d
        if rec.k <= 10:
            d = codes.min_distance(code, method="brute", max_k=10).d
            assert rec.d_lower <= d <= rec.d_upper
            assert rec.d is None or rec.d == d


def test_biased_strategy_zeroes_coefficient_sum():
    cfg = small_cfg(strategy="biased", trials=20)
    for v in search.candidate_vectors(cfg):
        assert np.bitwise_xor.reduce(v) == 0


def test_exhaustive_candidates_and_prefix():
    cfg = small_cfg(strategy="exhaustive", candidates=("1" * 16, "0" * 15 + "1"), trials=5)
    vs = list(search.candidate_vectors(cfg))
    assert len(vs) == 2 and vs[0].tolist() == [1] * 16
    cfg = small_cfg(strategy="exhaustive", trials=3)
    assert [gf4.format_vector(v, sep="") for v in search.candidate_vectors(cfg)] == [
        "0" * 16, "0" * 15 + "1", "0" * 15 + "w"]


def test_g1111_record():
    cfg = SearchConfig("G1111", 16, 6, strategy="exhaustive", candidates=("11W00WWWwwW0ww1w",), trials=1)
    (rec,) = list(search.run_search(cfg))
    assert (rec.k, rec.d, rec.rc_count) == (8, 6, "65536")
    assert rec.reversible and rec.contains_ones and rec.d_method == "brute"


def test_jsonl_round_trip(tmp_path):
    recs = list(search.run_search(small_cfg(trials=20)))
    path = tmp_path / "r.jsonl"
    assert search.write_jsonl(recs, path) == len(recs)
    back = search.read_records(path)
    assert [r.comparable() for r in back] == [r.comparable() for r in recs]
    line = json.loads(path.read_text().splitlines()[0])
    assert line["size"] == str(4 ** line["k"])
    cfg_path = tmp_path / "c.jsonl"
    search.write_jsonl([small_cfg()], cfg_path)
    assert search.read_configs(cfg_path) == [small_cfg()]


def make_record(k, ts, family="G12", n=32, d=4, coeffs="0"):
    return SearchRecord(family=family, n=n, target_d=d, index=0, coeffs=coeffs, k=k, d=d, d_lower=d,
                        d_upper=d, d_method="brute", certified=True, reversible=True, contains_ones=True,
                        rc_count=str(4 ** k), gc_count=None, status="found", seed=0, strategy="random",
                        timestamp=ts)


def test_table_single_record():
    text = search.render_table([make_record(24, "2024-01-01")])
    lines = text.splitlines()
    assert len(lines) == 3 and "281474976710656" in lines[2]


def test_table_max_size_then_earliest_timestamp():
    recs = [
        make_record(20, "2024-01-01", coeffs="a"),
        make_record(24, "2024-01-03", coeffs="late"),
        make_record(24, "2024-01-02", coeffs="early"),
        make_record(10, "2024-01-01", n=16, coeffs="other"),
    ]
    rows = search.best_rows(recs)
    assert [(r.n, r.k, r.coeffs) for r in rows] == [(16, 10, "other"), (32, 24, "early")]
    csv_text = search.render_table(recs, fmt="csv")
    assert csv_text.splitlines()[0] == ",".join(search.TABLE_COLUMNS)
    assert "281474976710656" in csv_text


def test_table_skips_unresolved():
    rec = make_record(30, "2024-01-01")
    rec.status = "unresolved"
    assert search.best_rows([rec]) == []


def test_published_rows_are_powers_of_four():
    for family, n, d, size in search.PUBLISHED_ROWS:
        k = search.log4_exact(size)
        assert 0 < k <= n
    with pytest.raises(ValueError):
        search.log4_exact(12)


def test_parallel_workers_keep_order():
    def strip(recs):
        return [(r.index, r.coeffs, r.k, r.d_lower, r.d_upper, r.status) for r in recs]

    a = strip(search.run_search(small_cfg(trials=16)))
    b = strip(search.run_search(small_cfg(trials=16, workers=2)))
    assert a and a == b
