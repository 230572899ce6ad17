"""Reference instances and self-checks used by ``revdna verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from importlib import resources
from typing import Callable

import numpy as np

from . import codes, composite, dna, gf4, groupring, groups

G1111_COEFFS = "11W00WWWwwW0ww1w"
G1111_PRINTED_GCW = [16, 0, 128, 0, 4032, 0, 15232, 0, 26720, 0, 15232, 0, 4032, 0, 128, 0, 16]
G1111_PRINTED_GC_COUNT = 26720

# per-position counterexample: C6 x C2 with blocks of size 6
COUNTEREXAMPLE_COEFFS = "100w00wWw1wW"
COUNTEREXAMPLE_WORD = "000000000w0w"


def load_matrix(name: str) -> np.ndarray:
    text = resources.files("revdna").joinpath("data", name).read_text()
    return gf4.parse_matrix(text)


def printed_g1111() -> np.ndarray:
    return load_matrix("g1111_n16_matrix.txt")


def printed_counterexample() -> np.ndarray:
    return load_matrix("example_3_1_matrix.txt")


def g1111_matrix() -> np.ndarray:
    return composite.build_family("G1111", gf4.parse_vector(G1111_COEFFS), 16)


def counterexample_matrix() -> np.ndarray:
    """H1 on blocks 1 and 3, reversibly listed C6 on blocks 2 and 4 of equal content."""
    g = groups.theorem32_group(6, 2)
    v = groupring.GroupRingElement(g, gf4.parse_vector(COUNTEREXAMPLE_COEFFS))
    c6 = groups.listed_reversibly(groups.cyclic(6), [0, 2, 4], 3)
    h1 = groups.h1(6)
    return composite.omega_per_position(v, 6, {1: h1, 2: c6, 3: h1, 4: c6})


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    elapsed: float


def _g1111_build() -> tuple[bool, str]:
    ok = bool((g1111_matrix() == printed_g1111()).all())
    return ok, "matches printed 16x16 matrix" if ok else "differs from printed matrix"


def _g1111_code() -> tuple[bool, str]:
    code = codes.LinearCode(g1111_matrix())
    dist = codes.min_distance(code, method="brute")
    ones = code.contains(np.ones(16, dtype=np.uint8))
    rev = codes.is_reversible(code)
    ok = code.size == 65536 and dist.d == 6 and ones and rev
    return ok, f"size={code.size} d={dist.d} reversible={rev} ones={ones}"


def _g1111_constraints(method: str) -> Callable[[], tuple[bool, str]]:
    def run() -> tuple[bool, str]:
        code = codes.LinearCode(g1111_matrix())
        rep = dna.check_constraints(code, 6, ("HD", "RV", "RC"), method=method)
        ok = rep.count == 65536 and rep.counts["RV"] == rep.counts["RC"]
        return ok, f"HD+RV+RC={rep.count} RV={rep.counts['RV']} RC={rep.counts['RC']} ({rep.method})"
    return run


def _g1111_gcw() -> tuple[bool, str]:
    enum = codes.weight_enumerators(codes.LinearCode(g1111_matrix()))
    ok = enum.gcw == G1111_PRINTED_GCW
    return ok, f"{enum.gcw_text()} printed {G1111_PRINTED_GCW}"


def _counterexample() -> tuple[bool, str]:
    m = counterexample_matrix()
    same = bool((m == printed_counterexample()).all())
    code = codes.LinearCode(m)
    c = gf4.parse_vector(COUNTEREXAMPLE_WORD)
    ok = same and code.contains(c) and not code.contains(c[::-1]) and not codes.is_reversible(code)
    return ok, f"matrix match={same} c in C={code.contains(c)} c^r in C={code.contains(c[::-1])}"


def _closed_forms(samples: int = 10, seed: int = 0) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    bad = []
    for family in composite.CLOSED_FORMS:
        for n in (16, 32):
            for _ in range(samples):
                v = rng.integers(0, 4, n, dtype=np.uint8)
                spec = composite.family_spec(family, v, n)
                if not (composite.CLOSED_FORMS[family](v, n) == composite.omega(spec)).all():
                    bad.append((family, n))
    return not bad, "closed forms agree with the group construction" if not bad else f"mismatch {bad[:3]}"


def _reversible_families(samples: int = 5, seed: int = 0) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    fails = []
    for family in ("G12", "G22", "G32", "G1111", "G1231", "G3322"):
        for n in (16, 32):
            try:
                composite.check_family_length(family, n)
            except ValueError:
                continue
            for _ in range(samples):
                v = rng.integers(0, 4, n, dtype=np.uint8)
                if not codes.is_reversible(codes.LinearCode(composite.build_family(family, v, n))):
                    fails.append((family, n))
    return not fails, "all sampled codes reversible" if not fails else f"not reversible: {fails[:3]}"


def checks(full: bool = False) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    out = [
        ("g1111-matrix", _g1111_build),
        ("g1111-code", _g1111_code),
        ("g1111-constraints", _g1111_constraints("brute" if full else "shortcut")),
        ("g1111-gcw", _g1111_gcw),
        ("counterexample", _counterexample),
        ("closed-forms", _closed_forms),
        ("reversible-families", _reversible_families),
    ]
    return out


def run_checks(full: bool = False, only: str | None = None) -> list[CheckResult]:
    results = []
    for name, fn in checks(full):
        if only and name != only:
            continue
        t0 = time.perf_counter()
        ok, detail = fn()
        results.append(CheckResult(name, ok, detail, time.perf_counter() - t0))
    return results
