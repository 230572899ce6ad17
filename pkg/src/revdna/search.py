"""Search over coefficient vectors of the composite families.

Each candidate vector is turned into a generator matrix, the code's
dimension and (bounded) minimum distance are computed, and a record is
emitted when the distance target is certified.  Records and configs are
stored as JSON lines; field names are listed on :class:`SearchConfig` and
:class:`SearchRecord`.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Iterator

import numpy as np

from . import codes, composite, gf4
from .codes import LinearCode

STRATEGIES = ("random", "biased", "exhaustive")


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters.

    JSON fields: ``family``, ``n``, ``target_d``, ``strategy`` (random,
    biased or exhaustive), ``seed``, ``trials``, ``candidates`` (coefficient
    strings over ``01wW`` for exhaustive runs; empty means all of GF(4)^n),
    ``max_k`` (enumeration budget for GC counts), ``distance_method``,
    ``time_limit`` (seconds per candidate), ``min_k`` (skip smaller codes),
    ``require_ones`` (skip codes without the all-ones word), ``workers``.
    """

    family: str
    n: int
    target_d: int
    strategy: str = "random"
    seed: int = 0
    trials: int = 1000
    candidates: tuple[str, ...] = ()
    max_k: int = 8
    distance_method: str = "auto"
    time_limit: float | None = 60.0
    min_k: int = 1
    require_ones: bool = True
    workers: int = 1

    def __post_init__(self) -> None:
        composite.check_family_length(self.family, self.n)
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if self.target_d < 1:
            raise ValueError("target_d must be positive")
        object.__setattr__(self, "candidates", tuple(self.candidates))
        for c in self.candidates:
            if gf4.parse_vector(c).size != self.n:
                raise ValueError(f"candidate {c!r} does not have length {self.n}")

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["candidates"] = list(self.candidates)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SearchConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config fields {sorted(unknown)}")
        return cls(**data)


@dataclass
class SearchRecord:
    """One evaluated candidate.

    ``status`` is ``"found"`` when ``d >= target_d`` is certified and
    ``"unresolved"`` when the per-candidate time budget ran out first.
    ``d`` is the exact distance when known; ``d_lower``/``d_upper`` bound it.
    ``rc_count`` is the number of codewords meeting HD+RC (via the
    reversibility shortcut) and ``gc_count`` those also at the GC target;
    either is ``None`` when not established.  ``size`` is ``4**k`` in decimal.
    """

    family: str
    n: int
    target_d: int
    index: int
    coeffs: str
    k: int
    d: int | None
    d_lower: int
    d_upper: int
    d_method: str
    certified: bool
    reversible: bool
    contains_ones: bool
    rc_count: str | None
    gc_count: int | None
    status: str
    seed: int
    strategy: str
    elapsed: float = 0.0
    timestamp: str = ""
    config: dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return 4 ** self.k

    def comparable(self) -> tuple:
        """Everything except wall-clock fields."""
        d = asdict(self)
        d.pop("elapsed")
        d.pop("timestamp")
        return tuple(sorted((k, json.dumps(v, sort_keys=True)) for k, v in d.items()))

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["size"] = str(self.size)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SearchRecord":
        data = dict(data)
        size = data.pop("size", None)
        rec = cls(**data)
        if size is not None and int(size) != rec.size:
            raise ValueError(f"record size {size} disagrees with k={rec.k}")
        return rec


# ---------------------------------------------------------------------------
# candidate streams


def _exhaustive(n: int) -> Iterator[np.ndarray]:
    for digits in itertools.product(range(4), repeat=n):
        yield np.array(digits, dtype=np.uint8)


def candidate_vectors(cfg: SearchConfig) -> Iterator[np.ndarray]:
    """Deterministic stream of at most ``cfg.trials`` coefficient vectors.

    ``random`` draws i.i.d. uniform coefficients.  ``biased`` then adjusts
    the identity coefficient so the coefficients sum to zero: over these
    2-groups a nonzero sum makes the matrix invertible, i.e. the whole space.
    """
    if cfg.strategy == "exhaustive":
        source = (gf4.parse_vector(c) for c in cfg.candidates) if cfg.candidates else _exhaustive(cfg.n)
        yield from itertools.islice(source, cfg.trials)
        return
    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.trials):
        v = rng.integers(0, 4, cfg.n, dtype=np.uint8)
        if cfg.strategy == "biased":
            v[0] ^= np.bitwise_xor.reduce(v)
        yield v


# ---------------------------------------------------------------------------
# evaluation


def evaluate(cfg: SearchConfig, index: int, coeffs: np.ndarray) -> SearchRecord | None:
    """Build, measure and certify one candidate; ``None`` when it is skipped."""
    t0 = time.perf_counter()
    code = LinearCode(composite.build_family(cfg.family, coeffs, cfg.n))
    base = dict(family=cfg.family, n=cfg.n, target_d=cfg.target_d, index=index,
                coeffs=gf4.format_vector(coeffs, sep=""), k=code.k, seed=cfg.seed,
                strategy=cfg.strategy, config=cfg.to_dict())
    if code.k < cfg.min_k or code.k == 0:
        return None
    ones = code.contains(np.ones(cfg.n, dtype=np.uint8))
    if cfg.require_ones and not ones:
        return None
    reversible = codes.is_reversible(code)
    dist = codes.min_distance(code, method=cfg.distance_method, max_k=cfg.max_k,
                              time_limit=cfg.time_limit, stop_at=cfg.target_d)
    reached = dist.certified and dist.lower >= cfg.target_d
    if dist.certified and not reached:
        return None
    rc_count = gc_count = None
    if reached and reversible and ones:
        rc_count = str(code.size)
        if code.k <= cfg.max_k:
            # the HD/RV/RC maps preserve GC weight, so the GC pool is closed too
            gc_count = codes.weight_enumerators(code, max_k=cfg.max_k).gcw[cfg.n // 2]
    return SearchRecord(
        **base, d=dist.d, d_lower=dist.lower, d_upper=dist.upper, d_method=dist.method,
        certified=dist.certified, reversible=reversible, contains_ones=ones,
        rc_count=rc_count, gc_count=gc_count, status="found" if reached else "unresolved",
        elapsed=time.perf_counter() - t0,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="microseconds"),
    )


def _evaluate_job(args: tuple[SearchConfig, int, np.ndarray]) -> SearchRecord | None:
    return evaluate(*args)


def run_search(cfg: SearchConfig) -> Iterator[SearchRecord]:
    """Evaluate candidates in order and yield records ordered by candidate index."""
    jobs = ((cfg, i, v) for i, v in enumerate(candidate_vectors(cfg)))
    if cfg.workers <= 1:
        results: Iterable[SearchRecord | None] = map(_evaluate_job, jobs)
        for rec in results:
            if rec is not None:
                yield rec
        return
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        for rec in pool.map(_evaluate_job, jobs, chunksize=4):
            if rec is not None:
                yield rec


def first_found(cfg: SearchConfig, k: int | None = None) -> SearchRecord | None:
    """First certified record (with dimension ``k`` if given)."""
    for rec in run_search(cfg):
        if rec.status == "found" and (k is None or rec.k == k):
            return rec
    return None


def replay(record: SearchRecord) -> LinearCode:
    """Rebuild a record's code from its family, length and coefficients."""
    return LinearCode(composite.build_family(record.family, gf4.parse_vector(record.coeffs), record.n))


# ---------------------------------------------------------------------------
# persistence


def write_jsonl(items: Iterable[Any], path: str | Path, append: bool = False) -> int:
    count = 0
    with open(path, "a" if append else "w") as fh:
        for item in items:
            fh.write(json.dumps(item.to_dict(), sort_keys=True) + "\n")
            count += 1
    return count


def _read_jsonl(path: str | Path) -> Iterator[dict[str, Any]]:
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                yield json.loads(line)


def read_records(path: str | Path) -> list[SearchRecord]:
    return [SearchRecord.from_dict(d) for d in _read_jsonl(path)]


def read_configs(path: str | Path) -> list[SearchConfig]:
    return [SearchConfig.from_dict(d) for d in _read_jsonl(path)]


# ---------------------------------------------------------------------------
# tables

TABLE_COLUMNS = ("family", "n", "d", "size", "k", "certificate", "coeffs")


@dataclass(frozen=True)
class TableRow:
    family: str
    n: int
    d: int
    size: int
    k: int
    certificate: str
    coeffs: str

    def cells(self) -> list[str]:
        return [self.family, str(self.n), str(self.d), str(self.size), str(self.k), self.certificate, self.coeffs]


def _certificate(rec: SearchRecord) -> str:
    dist = f"d={rec.d}" if rec.d is not None else f"d>={rec.d_lower}"
    rc = "RC" if rec.rc_count is not None else "no-RC"
    return f"{dist} {rec.d_method} {rc}"


def best_rows(records: Iterable[SearchRecord]) -> list[TableRow]:
    """Largest certified code per (family, n, target_d); ties go to the earliest timestamp."""
    best: dict[tuple[str, int, int], SearchRecord] = {}
    for rec in records:
        if rec.status != "found":
            continue
        key = (rec.family, rec.n, rec.target_d)
        cur = best.get(key)
        if cur is None or rec.k > cur.k or (rec.k == cur.k and rec.timestamp < cur.timestamp):
            best[key] = rec
    rows = []
    for key in sorted(best, key=lambda t: (len(t[0]), t[0], t[1], t[2])):
        rec = best[key]
        rows.append(TableRow(rec.family, rec.n, rec.target_d, rec.size, rec.k, _certificate(rec), rec.coeffs))
    return rows


def render_table(records: Iterable[SearchRecord], fmt: str = "text") -> str:
    rows = best_rows(records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        for row in rows:
            writer.writerow(row.cells())
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown table format {fmt!r}")
    grid = [list(TABLE_COLUMNS)] + [row.cells() for row in rows]
    widths = [max(len(r[i]) for r in grid) for i in range(len(TABLE_COLUMNS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in grid]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# published rows, as (family, n, d, size)

PUBLISHED_ROWS: tuple[tuple[str, int, int, int], ...] = tuple(
    (fam, n, d, 4 ** k)
    for fam, n, d, k in [
        ("G12", 32, 4, 24), ("G12", 48, 3, 40), ("G12", 48, 4, 38), ("G12", 64, 4, 52),
        ("G12", 80, 4, 68), ("G12", 96, 2, 92), ("G12", 112, 2, 108), ("G12", 128, 2, 124),
        ("G22", 32, 4, 24), ("G22", 48, 7, 30), ("G22", 64, 4, 52), ("G22", 80, 3, 72),
        ("G22", 80, 4, 64), ("G22", 96, 2, 92), ("G22", 112, 2, 108), ("G22", 128, 2, 124),
        ("G32", 32, 4, 24), ("G32", 48, 3, 40), ("G32", 80, 3, 72), ("G32", 80, 4, 68),
        ("G32", 96, 2, 92), ("G32", 96, 4, 82), ("G32", 112, 2, 108),
        ("G2222", 32, 3, 24), ("G1111", 32, 4, 24), ("G1111", 48, 3, 40), ("G1111", 80, 4, 68),
        ("G2222", 96, 2, 88), ("G2222", 96, 3, 82), ("G1111", 112, 2, 108), ("G1111", 128, 4, 112),
        ("G1111", 160, 3, 152),
        ("G2111", 32, 4, 24), ("G3111", 48, 3, 40), ("G1121", 64, 4, 50), ("G3111", 80, 4, 68),
        ("G1222", 96, 3, 88), ("G3111", 112, 2, 108), ("G1121", 128, 4, 112), ("G3111", 160, 2, 152),
        ("G2111", 160, 3, 152),
        ("G3132", 32, 4, 24), ("G2113", 64, 4, 50), ("G1322", 96, 2, 88), ("G3121", 128, 4, 112),
        ("G3121", 160, 2, 152),
    ]
)


def log4_exact(size: int) -> int:
    """``k`` with ``4**k == size``; raises if ``size`` is not a power of 4."""
    k = (size.bit_length() - 1) // 2
    if size <= 0 or 4 ** k != size:
        raise ValueError(f"{size} is not a power of 4")
    return k


def achievable_ranks(family: str, n: int, samples: int, seed: int = 0) -> set[int]:
    """Ranks observed over random and zero-sum coefficient vectors (alternating)."""
    rng = np.random.default_rng(seed)
    ranks = set()
    for t in range(samples):
        v = rng.integers(0, 4, n, dtype=np.uint8)
        if t % 2:
            v[0] ^= np.bitwise_xor.reduce(v)
        ranks.add(gf4.rank(composite.build_family(family, v, n)))
    return ranks
