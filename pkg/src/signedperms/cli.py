"""Command line interface.

Subcommands: count, sequence, orbits, census, verify.  Output is byte
identical across runs for the same inputs; timing goes to stderr and only
under --timing.  Exit codes: 0 success, 1 verification found a mismatch,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings
from pathlib import Path

from .census import (
    SchemaError,
    export,
    load_cache,
    run_census,
    verify_registry,
    write_cache,
)
from .core import DEFAULT_CAP, CapExceededError, PatternSet
from .enumeration import BACKTRACK, METHODS, count
from .symmetry import all_orbits


def _parse_patterns(text: str) -> PatternSet:
    # surface duplicate warnings deterministically on stderr
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        tset = PatternSet.parse(text)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return tset


def _default_workers() -> int:
    return os.cpu_count() or 1


class _Timer:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.start = time.perf_counter()

    def report(self) -> None:
        if self.enabled:
            elapsed = time.perf_counter() - self.start
            print(f"timing_seconds: {elapsed:.3f}", file=sys.stderr)


def _cmd_count(args: argparse.Namespace) -> int:
    tset = _parse_patterns(args.patterns)
    timer = _Timer(args.timing)
    result = count(args.n, tset, method=args.method, cap=args.cap, workers=args.threads)
    timer.report()
    if args.format == "json":
        doc = {
            "n": result.n,
            "patterns": tset.text(),
            "method": result.method,
            "value": str(result.value),
        }
        print(json.dumps(doc))
    else:
        print(result.value)
    return 0


def _cmd_sequence(args: argparse.Namespace) -> int:
    tset = _parse_patterns(args.patterns)
    timer = _Timer(args.timing)
    values = [
        count(n, tset, method=args.method, cap=args.cap, workers=args.threads).value
        for n in range(args.n_max + 1)
    ]
    timer.report()
    if args.format == "json":
        doc = {
            "patterns": tset.text(),
            "method": args.method,
            "n_max": args.n_max,
            "values": [str(v) for v in values],
        }
        print(json.dumps(doc))
    elif args.format == "csv":
        print(",".join(str(v) for v in values))
    else:
        for n, v in enumerate(values):
            print(n, v)
    return 0


def _cmd_orbits(args: argparse.Namespace) -> int:
    rows = []
    for orbit_id, orb in enumerate(all_orbits()):
        size = len(orb.representative)
        if args.size is not None and size != args.size:
            continue
        rows.append((orbit_id, size, orb.size, orb.representative.text()))
    if args.format == "json":
        doc = [
            {
                "orbit_id": orbit_id,
                "size": size,
                "orbit_size": members,
                "representative": rep,
            }
            for orbit_id, size, members, rep in rows
        ]
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        print("orbit_id,size,orbit_size,representative")
        for orbit_id, size, members, rep in rows:
            print(f'{orbit_id},{size},{members},"{rep}"')
    else:
        for orbit_id, size, members, rep in rows:
            print(f"{orbit_id}\t{size}\t{members}\t{rep}")
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    cache = None
    cache_path = Path(args.cache) if args.cache else None
    if cache_path and cache_path.exists():
        cache = load_cache(cache_path)
    timer = _Timer(args.timing)
    table = run_census(args.n_max, cap=args.cap, workers=args.threads, cache=cache)
    elapsed = time.perf_counter() - timer.start
    timer.report()
    if args.timing:
        table.metadata = dict(table.metadata, timing_seconds=round(elapsed, 3))
    if cache_path:
        write_cache(table, cache_path)
    data = export(table, args.format)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    timer = _Timer(args.timing)
    report = verify_registry(args.n_max, cap=args.cap, workers=args.threads)
    timer.report()
    if args.format == "json":
        doc = {
            "n_max": report.n_max,
            "checks": [
                {
                    "name": c.entry.name,
                    "patterns": c.entry.patterns.text(),
                    "formula": c.entry.formula,
                    "first_n": c.first_n,
                    "last_n": c.last_n,
                    "status": c.status,
                    "mismatches": list(c.mismatches),
                    "also_holds_at": list(c.holds_below),
                }
                for c in report.checks
            ],
            "superseded": [
                {
                    "patterns": s.patterns.text(),
                    "claimed_formula": s.description,
                    "n": s.n,
                    "claimed": str(s.claimed),
                    "enumerated": str(s.enumerated),
                }
                for s in report.superseded
            ],
            "mismatch_count": report.mismatch_count,
        }
        print(json.dumps(doc, indent=2))
    else:
        for c in report.checks:
            line = (
                f"{'PASS' if c.status == 'verified' else 'FAIL'} "
                f"{c.entry.name} [{c.entry.formula}] n={c.first_n}..{c.last_n}"
            )
            if c.mismatches:
                line += " | " + "; ".join(c.mismatches)
            print(line)
            if c.holds_below:
                spots = ",".join(str(n) for n in c.holds_below)
                print(f"INFO {c.entry.name} also matches below its range at n={spots}")
        for s in report.superseded:
            print(
                f"SUPERSEDED {{{s.patterns.text()}}}: claimed {s.description} "
                f"gives {s.claimed} at n={s.n}, enumeration gives {s.enumerated}"
            )
        print(f"checks: {len(report.checks)}, mismatches: {report.mismatch_count}")
    return 1 if report.mismatch_count else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedperms",
        description="Count signed permutations avoiding 2-letter signed patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="largest order allowed (default %(default)s)")
        p.add_argument("--threads", type=int, default=_default_workers(),
                       help="worker processes for the mask engine")
        p.add_argument("--timing", action="store_true",
                       help="print elapsed seconds to stderr")
        p.add_argument("--format", choices=formats, default=formats[0],
                       help="output format (default %(default)s)")

    p_count = sub.add_parser("count", help="count avoiders of a pattern set at one order")
    p_count.add_argument("--patterns", required=True,
                         help='comma-separated patterns, e.g. "1 2, -2 1"')
    p_count.add_argument("--n", type=int, required=True, help="order to count at")
    p_count.add_argument("--method", choices=METHODS, default=BACKTRACK)
    common(p_count, ("plain", "json"))
    p_count.set_defaults(func=_cmd_count)

    p_seq = sub.add_parser("sequence", help="count avoiders for all orders 0..n-max")
    p_seq.add_argument("--patterns", required=True)
    p_seq.add_argument("--n-max", type=int, required=True)
    p_seq.add_argument("--method", choices=METHODS, default=BACKTRACK)
    common(p_seq, ("plain", "json", "csv"))
    p_seq.set_defaults(func=_cmd_sequence)

    p_orb = sub.add_parser("orbits", help="list symmetry orbits of pattern sets")
    p_orb.add_argument("--size", type=int, default=None,
                       help="only orbits whose sets have this many patterns")
    common(p_orb, ("plain", "json", "csv"))
    p_orb.set_defaults(func=_cmd_orbits)

    p_cen = sub.add_parser("census", help="sequences and verification for all orbits")
    p_cen.add_argument("--n-max", type=int, required=True)
    p_cen.add_argument("--out", default=None, help="write output to this file")
    p_cen.add_argument("--cache", default=None,
                       help="JSON census to reuse and update in place")
    common(p_cen, ("json", "csv"))
    p_cen.set_defaults(func=_cmd_census)

    p_ver = sub.add_parser("verify", help="check all registered formulas by enumeration")
    p_ver.add_argument("--n-max", type=int, default=6)
    common(p_ver, ("plain", "json"))
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (CapExceededError, SchemaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
