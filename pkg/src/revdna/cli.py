"""Command line interface: ``python -m revdna {build,verify,search,table}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import codes, composite, dna, gf4, groupring, groups, search, verify


# ---------------------------------------------------------------------------
# build


def matrix_from_spec(spec: dict[str, Any]) -> np.ndarray:
    """Generator matrix described by a build spec (see README for the fields)."""
    coeffs = gf4.parse_vector(spec["coeffs"])
    if "family" in spec:
        return composite.build_family(spec["family"], coeffs, int(spec.get("n", coeffs.size)))
    g = groups.from_descriptor(spec["group"])
    v = groupring.GroupRingElement(g, coeffs)
    if "per_position" in spec:
        blocks = {int(l): groups.from_descriptor(d) for l, d in spec["per_position"].items()}
        return composite.omega_per_position(v, int(spec["r"]), blocks)
    if "assignment" in spec:
        assignment = {int(s): groups.from_descriptor(d) for s, d in spec["assignment"].items()}
        labels = np.asarray(spec["labels"]) if "labels" in spec else None
        cs = composite.CompositeSpec(v, int(spec["r"]), assignment, labels=labels,
                                     mode=spec.get("mode", "reversible"))
        return composite.omega(cs)
    return groupring.sigma(v)


def _load_spec(path: str) -> dict[str, Any]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return json.loads(text)


def _summary(m: np.ndarray, d_limit: float | None) -> str:
    code = codes.LinearCode(m)
    parts = [f"n={code.n}", f"k={code.k}", f"size={code.size}",
             f"reversible={codes.is_reversible(code)}",
             f"ones={code.contains(np.ones(code.n, dtype=np.uint8))}"]
    if code.k:
        dist = codes.min_distance(code, time_limit=d_limit)
        parts.append(f"d={dist.d}" if dist.d is not None else f"d in [{dist.lower}, {dist.upper}]")
    return " ".join(parts)


def cmd_build(args: argparse.Namespace) -> int:
    m = matrix_from_spec(_load_spec(args.spec))
    text = gf4.format_matrix(m)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.summary:
        print(_summary(m, args.time_limit), file=sys.stderr if not args.out else sys.stdout)
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args: argparse.Namespace) -> int:
    if args.matrix:
        return _verify_matrix(args)
    results = verify.run_checks(full=args.full, only=args.only)
    if not results:
        print(f"no check named {args.only!r}", file=sys.stderr)
        return 2
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail} [{r.elapsed:.1f}s]")
    return 0 if all(r.ok for r in results) else 1


def _verify_matrix(args: argparse.Namespace) -> int:
    m = gf4.parse_matrix(Path(args.matrix).read_text())
    print(_summary(m, args.time_limit))
    code = codes.LinearCode(m)
    if args.d is not None:
        which = [w.strip() for w in args.constraints.split(",") if w.strip()]
        rep = dna.check_constraints(code, args.d, which, method=args.method, max_k=args.max_k)
        for key, count in rep.counts.items():
            print(f"{key}: {count}")
        print(f"method: {rep.method}")
    if args.gcw or args.cwe_csv:
        enum = codes.weight_enumerators(code, max_k=args.max_k)
        print(enum.gcw_text())
        if args.cwe_csv:
            Path(args.cwe_csv).write_text(enum.cwe_csv())
    if args.dna_out:
        dna.write_words(dna.dna_code(code, max_k=args.max_k), args.dna_out)
    return 0


# ---------------------------------------------------------------------------
# search / table


def _configs(args: argparse.Namespace) -> list[search.SearchConfig]:
    if args.config:
        return search.read_configs(args.config)
    missing = [f for f in ("family", "n", "d") if getattr(args, f) is None]
    if missing:
        raise SystemExit(f"search needs --config or --family/--n/--d (missing {', '.join(missing)})")
    return [search.SearchConfig(
        family=args.family, n=args.n, target_d=args.d, strategy=args.strategy, seed=args.seed,
        trials=args.trials, candidates=tuple(args.candidate or ()), max_k=args.max_k,
        time_limit=args.time_limit, min_k=args.min_k, require_ones=not args.allow_no_ones,
        workers=args.workers,
    )]


def cmd_search(args: argparse.Namespace) -> int:
    out = Path(args.out) if args.out else None
    if out and not args.append:
        out.write_text("")
    total = 0
    for cfg in _configs(args):
        for rec in search.run_search(cfg):
            total += 1
            line = json.dumps(rec.to_dict(), sort_keys=True)
            if out:
                with out.open("a") as fh:
                    fh.write(line + "\n")
            else:
                print(line)
            if not args.quiet:
                dist = rec.d if rec.d is not None else f">={rec.d_lower}"
                print(f"[{rec.index}] {rec.family} n={rec.n} k={rec.k} d={dist} {rec.status}", file=sys.stderr)
            if args.stop_after and total >= args.stop_after:
                return 0
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    records = [rec for path in args.records for rec in search.read_records(path)]
    text = search.render_table(records, fmt=args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="revdna", description="Reversible composite group codes over GF(4) and DNA codes.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="generator matrix from a JSON build spec")
    b.add_argument("spec", help="JSON file ('-' for stdin)")
    b.add_argument("-o", "--out")
    b.add_argument("--summary", action="store_true", help="also report k, d and reversibility")
    b.add_argument("--time-limit", type=float, default=60.0)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run reference checks, or inspect a matrix file")
    v.add_argument("--matrix", help="matrix text file over 01wW")
    v.add_argument("--full", action="store_true", help="brute-force pairwise constraint check")
    v.add_argument("--only", help="run a single named check")
    v.add_argument("--d", type=int)
    v.add_argument("--constraints", default="HD,RV,RC")
    v.add_argument("--method", default="auto", choices=("auto", "brute", "shortcut"))
    v.add_argument("--max-k", type=int, default=codes.DEFAULT_MAX_K)
    v.add_argument("--gcw", action="store_true")
    v.add_argument("--cwe-csv")
    v.add_argument("--dna-out")
    v.add_argument("--time-limit", type=float, default=60.0)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="search coefficient vectors of a family")
    s.add_argument("--config", help="JSON-lines file of search configs")
    s.add_argument("--family")
    s.add_argument("--n", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--strategy", default="random", choices=search.STRATEGIES)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--candidate", action="append", help="coefficient string (exhaustive strategy)")
    s.add_argument("--max-k", type=int, default=8)
    s.add_argument("--min-k", type=int, default=1)
    s.add_argument("--time-limit", type=float, default=60.0)
    s.add_argument("--allow-no-ones", action="store_true", help="keep codes without the all-ones word")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--stop-after", type=int, default=0, help="stop after this many records")
    s.add_argument("--out", help="records file (JSON lines); stdout if omitted")
    s.add_argument("--append", action="store_true")
    s.add_argument("-q", "--quiet", action="store_true")
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="best record per (family, n, d)")
    t.add_argument("records", nargs="+")
    t.add_argument("--format", default="text", choices=("text", "csv"))
    t.add_argument("-o", "--out")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)
