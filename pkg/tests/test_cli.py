import json
import subprocess
import sys

import pytest

from revdna import cli, gf4, verify


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_family_spec(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"family": "G1111", "n": 16, "coeffs": verify.G1111_COEFFS}))
    code, out, _ = run(["build", str(spec)], capsys)
    assert code == 0
    assert (gf4.parse_matrix(out) == verify.printed_g1111()).all()


def test_build_group_specs(tmp_path, capsys):
    per_position = {
        "group": {"kind": "product", "r": 6, "m": 2},
        "coeffs": verify.COUNTEREXAMPLE_COEFFS,
        "r": 6,
        "per_position": {
            "1": {"kind": "auxiliary", "which": 1, "order": 6},
            "2": {"kind": "cyclic", "order": 6, "listing": {"subgroup": [0, 2, 4], "beta": 3}},
            "3": {"kind": "auxiliary", "which": 1, "order": 6},
            "4": {"kind": "cyclic", "order": 6, "listing": {"subgroup": [0, 2, 4], "beta": 3}},
        },
    }
    spec = tmp_path / "p.json"
    spec.write_text(json.dumps(per_position))
    out_file = tmp_path / "m.txt"
    assert cli.main(["build", str(spec), "-o", str(out_file), "--summary"]) == 0
    assert (gf4.parse_matrix(out_file.read_text()) == verify.printed_counterexample()).all()
    assert "reversible=False" in capsys.readouterr().out

    plain = {"group": {"kind": "cyclic", "order": 4}, "coeffs": "1w00"}
    spec.write_text(json.dumps(plain))
    code, out, _ = run(["build", str(spec)], capsys)
    assert out.splitlines()[1] == "0 1 w 0"

    assigned = {"group": {"kind": "product", "r": 4, "m": 4}, "coeffs": verify.G1111_COEFFS, "r": 4,
                "labels": [[0, 1, 2, 3], [2, 0, 3, 1], [1, 3, 0, 2], [3, 2, 1, 0]],
                "assignment": {str(s): {"kind": "auxiliary", "which": 1, "order": 4} for s in range(4)}}
    spec.write_text(json.dumps(assigned))
    code, out, _ = run(["build", str(spec)], capsys)
    assert (gf4.parse_matrix(out) == verify.printed_g1111()).all()


def test_verify_quick_checks(capsys):
    code, out, _ = run(["verify", "--only", "g1111-matrix"], capsys)
    assert code == 0 and out.startswith("PASS g1111-matrix")
    code, _, err = run(["verify", "--only", "nonexistent"], capsys)
    assert code == 2


def test_verify_matrix_file(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text(gf4.format_matrix(verify.printed_g1111()))
    dna_out = tmp_path / "dna.txt"
    csv_out = tmp_path / "cwe.csv"
    code, out, _ = run(["verify", "--matrix", str(path), "--d", "6", "--gcw",
                        "--cwe-csv", str(csv_out), "--dna-out", str(dna_out)], capsys)
    assert code == 0
    assert "k=8" in out and "d=6" in out and "HD+RV+RC: 65536" in out
    assert "GCW: [" in out
    assert len(dna_out.read_text().splitlines()) == 65536
    assert csv_out.read_text().startswith("n0,n1,nw,nw2,count")


def test_search_and_table(tmp_path, capsys):
    records = tmp_path / "r.jsonl"
    code, _, _ = run(["search", "--family", "G12", "--n", "16", "--d", "2", "--seed", "1",
                      "--trials", "30", "--out", str(records), "-q"], capsys)
    assert code == 0
    lines = records.read_text().splitlines()
    assert lines and all(json.loads(l)["family"] == "G12" for l in lines)
    code, out, _ = run(["table", str(records), "--format", "csv"], capsys)
    assert out.splitlines()[0].startswith("family,n,d,size")
    assert len(out.splitlines()) == 2


def test_search_config_file(tmp_path, capsys):
    cfg = tmp_path / "c.jsonl"
    cfg.write_text(json.dumps({"family": "G1111", "n": 16, "target_d": 6, "strategy": "exhaustive",
                               "candidates": [verify.G1111_COEFFS], "trials": 1}) + "\n")
    code, out, _ = run(["search", "--config", str(cfg), "-q"], capsys)
    rec = json.loads(out.splitlines()[0])
    assert (rec["k"], rec["d"], rec["rc_count"], rec["size"]) == (8, 6, "65536", "65536")


def test_search_requires_family(capsys):
    with pytest.raises(SystemExit):
        cli.main(["search", "--n", "16"])


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "revdna", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and "build" in res.stdout and "table" in res.stdout
