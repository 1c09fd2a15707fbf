"""Command-line entry point: ``zagrebcheck verify | extremal | stats``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .graph import GraphError
from .harness import (
    EXTREMAL_KINDS,
    CorpusError,
    EnumerationSource,
    FileSource,
    emit_extremal,
    parse_checks,
    run_stats,
    run_sweep,
)

EXIT_PASS, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zagrebcheck", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run checks over a corpus")
    src = verify.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE.g6", help="graph6 corpus (.g6 or .g6.gz)")
    src.add_argument("--enumerate", type=int, metavar="N", help="all labeled graphs on N <= 7 vertices")
    verify.add_argument("--connected-only", action="store_true")
    verify.add_argument("--checks", default="all",
                        help="comma list of t1,t2,t3,ce,ce_ham,ce_trace,moon,jackson,sandwich,roundtrip,all")
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--report", metavar="PATH")
    verify.add_argument("--csv", metavar="PATH")

    extremal = sub.add_parser("extremal", help="write extremal witnesses as graph6")
    extremal.add_argument("--kind", required=True, choices=EXTREMAL_KINDS)
    extremal.add_argument("--params", required=True, help="k for kkp1/kkp2; n,beta,delta for t3family")
    extremal.add_argument("--out", metavar="PATH")

    stats = sub.add_parser("stats", help="tightness histogram of the Zagreb upper bound")
    stats.add_argument("--input", required=True, metavar="FILE.g6")
    stats.add_argument("--bound", required=True, choices=("t3",))
    stats.add_argument("--jobs", type=int, default=1)
    stats.add_argument("--report", metavar="PATH")
    stats.add_argument("--csv", metavar="PATH")
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            checks = parse_checks(args.checks)
            if args.input:
                source = FileSource(args.input)
            else:
                source = EnumerationSource(args.enumerate, args.connected_only)
            report = run_sweep(source, checks, jobs=max(1, args.jobs))
        elif args.command == "stats":
            report = run_stats(FileSource(args.input), jobs=max(1, args.jobs))
        else:
            params = [int(p) for p in args.params.split(",") if p.strip()]
            lines = emit_extremal(args.kind, params)
            _emit("".join(line + "\n" for line in lines), args.out)
            return EXIT_PASS
    except (CorpusError, GraphError, ValueError, OSError) as exc:
        print(f"zagrebcheck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(report.render(), args.report)
    if args.csv:
        Path(args.csv).write_text(report.csv())
    return EXIT_PASS if report.passed else EXIT_VIOLATIONS


if __name__ == "__main__":
    sys.exit(main())
