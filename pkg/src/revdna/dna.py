"""DNA words over {A, T, C, G} and the HD / RV / RC / GC constraint suite.

The correspondence with GF(4) is ``0 -> A, 1 -> T, w -> C, w^2 -> G``.  Under
it the Watson-Crick complement is ``x + 1`` (A<->T, C<->G) and the GC weight
of a word is the number of coordinates equal to w or w^2.

Pairwise constraints follow the usual convention: a pair (x, y) violates a
constraint with map ``f`` when ``0 < d(f(x), y) < d``.  A word that maps
exactly onto another codeword (or onto itself) is not a violation; this is
what makes reversible codes closed under the RV and RC maps admissible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import codes
from .codes import LOW, SHIFT, BudgetExceeded, LinearCode

BASES = "ATCG"
_BASE_VALUE = {b: i for i, b in enumerate(BASES)}
_COMPLEMENT = str.maketrans("ATCG", "TAGC")

CONSTRAINTS = ("HD", "RV", "RC", "GC")
DEFAULT_MAX_PAIRS = 2 ** 34


def eta(v: Sequence[int] | np.ndarray) -> str:
    v = np.asarray(v, dtype=np.uint8)
    if v.size and v.max() > 3:
        raise ValueError("GF(4) symbols must be in 0..3")
    return "".join(BASES[int(x)] for x in v)


def eta_inverse(word: str) -> np.ndarray:
    try:
        return np.array([_BASE_VALUE[b] for b in word.strip().upper()], dtype=np.uint8)
    except KeyError as exc:
        raise ValueError(f"not a DNA base: {exc.args[0]!r}") from None


def reverse(word: str) -> str:
    return word[::-1]


def complement(word: str) -> str:
    return word.translate(_COMPLEMENT)


def reverse_complement(word: str) -> str:
    return complement(word)[::-1]


def gc_weight(word: str) -> int:
    return sum(1 for b in word if b in "CG")


def distance(x: str, y: str) -> int:
    if len(x) != len(y):
        raise ValueError("words of different length")
    return sum(a != b for a, b in zip(x, y))


def write_words(words: Iterable[str], path: str | Path) -> None:
    Path(path).write_text("".join(w + "\n" for w in words))


def read_words(path: str | Path) -> list[str]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            eta_inverse(line)  # validate
            out.append(line.upper())
    return out


# ---------------------------------------------------------------------------
# packed maps


def packed_reverse(words: np.ndarray, n: int) -> np.ndarray:
    return codes.pack(codes.unpack(words, n)[..., ::-1])


def packed_complement(words: np.ndarray, n: int) -> np.ndarray:
    ones = codes.pack(np.ones(n, dtype=np.uint8))
    return np.asarray(words, dtype=np.uint64) ^ ones


def packed_reverse_complement(words: np.ndarray, n: int) -> np.ndarray:
    return packed_complement(packed_reverse(words, n), n)


_MAPS = {
    "HD": lambda w, n: np.asarray(w, dtype=np.uint64),
    "RV": packed_reverse,
    "RC": packed_reverse_complement,
}


def _violators(images: np.ndarray, pool: np.ndarray, d: int, chunk: int = 512) -> np.ndarray:
    """``bad[i]`` is true when some ``y`` in ``pool`` has ``0 < d(images[i], y) < d``."""
    bad = np.zeros(images.shape[0], dtype=bool)
    if d <= 1:
        return bad
    for start in range(0, images.shape[0], chunk):
        x = images[start:start + chunk]
        diff = x[:, None, :] ^ pool[None, :, :]
        dist = np.bitwise_count((diff | (diff >> SHIFT)) & LOW).sum(axis=-1, dtype=np.int16)
        bad[start:start + chunk] = ((dist > 0) & (dist < d)).any(axis=1)
    return bad


def pairwise_ok(words: np.ndarray, n: int, d: int, constraint: str, chunk: int = 512) -> np.ndarray:
    """Per-word verdict for one pairwise constraint inside the set ``words`` (packed)."""
    words = np.asarray(words, dtype=np.uint64)
    images = _MAPS[constraint](words, n)
    return ~_violators(images, words, d, chunk)


# ---------------------------------------------------------------------------
# constraint reports


def _key(combo: Iterable[str]) -> str:
    combo = set(combo)
    return "+".join(c for c in CONSTRAINTS if c in combo)


def _normalize(which: Iterable[str]) -> tuple[str, ...]:
    which = {w.upper() for w in which}
    unknown = which - set(CONSTRAINTS)
    if unknown:
        raise ValueError(f"unknown constraints {sorted(unknown)}")
    if not which:
        raise ValueError("select at least one constraint")
    return tuple(c for c in CONSTRAINTS if c in which)


@dataclass
class ConstraintReport:
    """Codeword counts per combination of the selected constraints.

    ``counts`` maps keys like ``"HD+RV+RC"`` to the number of codewords that
    satisfy every constraint in the key jointly.  Combinations containing GC
    are evaluated inside the GC-target pool.
    """

    n: int
    d: int
    k: int
    which: tuple[str, ...]
    counts: dict[str, int]
    method: str
    pool_size: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def gc_target(self) -> int:
        return self.n // 2

    @property
    def size(self) -> int:
        return 4 ** self.k

    @property
    def count(self) -> int:
        """Count for the full selection."""
        return self.counts[_key(self.which)]

    def to_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d, "k": self.k, "gc_target": self.gc_target,
            "which": list(self.which), "counts": dict(self.counts),
            "method": self.method, "pool_size": self.pool_size,
        }


def shortcut_applies(code: LinearCode, d: int, dmin: int | None = None) -> bool:
    """Reversible, contains the all-ones word and has minimum distance at least ``d``.

    Then ``x^r`` and ``x^r + 1`` are codewords for every codeword ``x``, so
    the HD, RV and RC constraints hold for the whole code.
    """
    if code.k == 0:
        return True
    if not codes.is_reversible(code) or not code.contains(np.ones(code.n, dtype=np.uint8)):
        return False
    if dmin is None:
        dmin = codes.min_distance(code, stop_at=d).lower
    return dmin >= d


def _combos(which: tuple[str, ...]) -> list[tuple[str, ...]]:
    return [c for r in range(1, len(which) + 1) for c in itertools.combinations(which, r)]


def check_constraints(
    code: LinearCode,
    d: int,
    which: Iterable[str] = ("HD", "RV", "RC"),
    method: str = "auto",
    max_k: int = codes.DEFAULT_MAX_K,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    chunk: int = 512,
) -> ConstraintReport:
    """Count codewords satisfying the selected constraints at distance ``d``.

    ``method="brute"`` checks every pair of codewords.  ``"shortcut"`` relies
    on :func:`shortcut_applies`; with GC selected it still enumerates the
    code to size the GC pool, but skips the pairwise pass.  ``"auto"`` takes
    the shortcut when it applies and falls back to pairwise checking.
    """
    which = _normalize(which)
    n, k = code.n, code.k
    pairwise = [c for c in which if c != "GC"]
    if method not in ("auto", "brute", "shortcut"):
        raise ValueError(f"unknown method {method!r}")

    if method in ("auto", "shortcut"):
        if shortcut_applies(code, d):
            counts = {_key(c): 4 ** k for c in _combos(tuple(pairwise))}
            if "GC" not in which:
                return ConstraintReport(n, d, k, which, counts, "shortcut")
            # reversal and complement keep the GC weight, so the pool is closed under both
            pool_size = codes.weight_enumerators(code, max_k=max_k).gcw[n // 2]
            for combo in _combos(tuple(pairwise)) + [()]:
                counts[_key(combo + ("GC",))] = pool_size
            return ConstraintReport(n, d, k, which, counts, "shortcut", pool_size)
        if method == "shortcut":
            raise ValueError("shortcut does not apply: need a reversible code containing 1 with d_min >= d")

    if k > max_k:
        raise BudgetExceeded(f"4^{k} codewords exceed the enumeration budget 4^{max_k}")
    words = codes.all_codewords(code, max_k=max_k)
    if words.shape[0] ** 2 > max_pairs and pairwise:
        raise BudgetExceeded(f"{words.shape[0]}^2 pairs exceed the pairwise budget {max_pairs}")

    counts: dict[str, int] = {}
    ok_all = {c: pairwise_ok(words, n, d, c, chunk) for c in pairwise}
    for combo in _combos(tuple(pairwise)):
        counts[_key(combo)] = int(np.logical_and.reduce([ok_all[c] for c in combo]).sum())

    pool_size = None
    if "GC" in which:
        pool = words[codes.packed_gc_weight(words) == n // 2]
        pool_size = int(pool.shape[0])
        counts["GC"] = pool_size
        ok_pool = {c: pairwise_ok(pool, n, d, c, chunk) for c in pairwise}
        for combo in _combos(tuple(pairwise)):
            joint = np.logical_and.reduce([ok_pool[c] for c in combo])
            counts[_key(combo + ("GC",))] = int(joint.sum())
    return ConstraintReport(n, d, k, which, counts, "brute", pool_size)


def dna_code(code: LinearCode, max_k: int = codes.DEFAULT_MAX_K) -> list[str]:
    """All codewords as DNA words, in enumeration order."""
    return [eta(v) for v in codes.enumerate_codewords(code, max_k=max_k)]
