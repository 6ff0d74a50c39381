"""``tristrip`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 complex-file parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bench, identities
from .engine import count_dfs, count_dp, enumerate_tilings, stats, tiling_at
from .errors import CapabilityError, ComplexParseError, DomainError, InvariantError
from .fixtures import check_shipped
from .lattice import FamilyId, StripComplex, build_family, parse_complex
from .render import RenderSpec, render_svg
from .report import IdentityReport, merge
from .sequences import RationalGF, SeqId, gf_expand, seq_value, seq_value_alt

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_FILE = 0, 1, 2, 3
FAILURES_PER_IDENTITY = 3


class UsageError(Exception):
    pass


class FileError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load_complex(args: argparse.Namespace) -> StripComplex:
    if args.file is not None:
        if args.family is not None:
            raise UsageError("give either --family or --file, not both")
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise FileError(f"{args.file}: {exc.strerror}") from None
        try:
            return parse_complex(text)
        except ComplexParseError as exc:
            raise FileError(f"{args.file}: {exc}") from None
    if args.family is None:
        raise UsageError("one of --family or --file is required")
    if args.n is None:
        raise UsageError("--n is required with --family")
    return build_family(args.family, args.n)


def _add_source(p: argparse.ArgumentParser, with_method: bool = True) -> None:
    p.add_argument("--family", choices=[f.value for f in FamilyId])
    p.add_argument("--n", type=int)
    p.add_argument("--file", help="complex description file")
    if with_method:
        p.add_argument("--method", choices=["dp", "dfs"], default="dp")
        p.add_argument("--check", action="store_true", help="cross-check against DFS when small")
        p.add_argument("--threads", type=int, default=1)


def _cross_check(cx: StripComplex, value: int) -> None:
    if len(cx.placements) <= 3 * identities.DFS_BUDGET:
        if count_dfs(cx) != value:
            raise InvariantError(f"DFS and DP disagree on {cx.name}")


def cmd_count(args: argparse.Namespace) -> int:
    cx = _load_complex(args)
    value = count_dfs(cx, args.threads) if args.method == "dfs" else count_dp(cx)
    if args.check:
        _cross_check(cx, value if args.method == "dp" else count_dp(cx))
    print(value)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    cx = _load_complex(args)
    st = stats(cx, args.method, args.threads)
    if args.check:
        other = stats(cx, "dfs" if args.method == "dp" else "dp")
        if other != st:
            raise InvariantError(f"DFS and DP statistics disagree on {cx.name}")
    if args.format == "csv":
        print(",".join(str(v) for v in st.as_tuple()))
    elif args.format == "json":
        print(json.dumps({"complex": cx.name, "cells": str(len(cx)), "tilings": str(st.tilings),
                          "total": str(st.total_tiles), "small": str(st.small_tiles),
                          "large": str(st.large_tiles)}, sort_keys=True))
    else:
        print(f"tilings {st.tilings}\ntotal {st.total_tiles}\nsmall {st.small_tiles}\nlarge {st.large_tiles}")
    return EXIT_OK


def cmd_seq(args: argparse.Namespace) -> int:
    hi = args.from_ if args.to is None else args.to
    if hi < args.from_:
        raise UsageError("--to must be >= --from")
    ns = range(args.from_, hi + 1)
    if args.route:
        values = [seq_value_alt(args.id, n, args.route) for n in ns]
    else:
        values = [seq_value(args.id, n) for n in ns]
    if args.format == "json":
        print(json.dumps({"id": args.id, "from": args.from_, "to": hi,
                          "values": [str(v) for v in values]}))
    else:
        print(" ".join(str(v) for v in values))
    return EXIT_OK


VERIFY_SUITES = sorted(set(identities.SUITES) | {"all", "asymptotics", "fixtures", "crossval"})


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        report = identities.run_all(args.max_n, args.oracle_max_n)
    elif args.suite == "asymptotics":
        report = identities.run_asymptotics(args.max_n)
    elif args.suite == "fixtures":
        report = check_shipped()
    elif args.suite == "crossval":
        report = merge("crossval", [identities.cross_validate(f, args.oracle_max_n, args.oracle_max_n)
                                    for f in FamilyId])
    else:
        report = identities.run_suite(args.suite, args.max_n)
    _print_report(report, args.format)
    return EXIT_OK if report.all_passed else EXIT_VERIFY


def _print_report(report: IdentityReport, fmt: str) -> None:
    if fmt == "json":
        print(report.dumps())
        return
    print(report.summary())
    shown: dict[str, int] = {}
    for c in report.failures:
        shown[c.identity] = shown.get(c.identity, 0) + 1
        if shown[c.identity] <= FAILURES_PER_IDENTITY:
            print("  " + c.line())
    for name, k in shown.items():
        if k > FAILURES_PER_IDENTITY:
            print(f"  ... {name}: {k - FAILURES_PER_IDENTITY} more failures")


def cmd_render(args: argparse.Namespace) -> int:
    cx = _load_complex(args)
    try:
        tiling = tiling_at(cx, args.tiling_index)
    except IndexError:
        raise UsageError(f"tiling index {args.tiling_index} out of range for {cx.name}") from None
    spec = RenderSpec(side_px=args.side_px, margin_px=args.margin_px)
    svg = render_svg(cx, tiling, spec)
    if args.out in (None, "-"):
        sys.stdout.write(svg)
    else:
        Path(args.out).write_text(svg, encoding="utf-8")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    cx = _load_complex(args)
    tilings = enumerate_tilings(cx, args.limit)
    if args.format == "json":
        print(json.dumps({"complex": cx.name,
                          "tilings": [[p.label() for p in t.larges] for t in tilings]}))
    else:
        for k, t in enumerate(tilings):
            print(f"{k}: " + (" ".join(p.label() for p in t.larges) or "-"))
    return EXIT_OK


def cmd_gf(args: argparse.Namespace) -> int:
    try:
        gf = RationalGF(tuple(args.num), tuple(args.den))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(" ".join(str(c) for c in gf_expand(gf, args.terms)))
    return EXIT_OK


def _decimal(fr: Fraction, places: int = 8) -> str:
    sign = "-" if fr < 0 else ""
    fr = abs(fr)
    scaled = fr.numerator * 10 ** places // fr.denominator
    whole, frac = divmod(scaled, 10 ** places)
    return f"{sign}{whole}.{frac:0{places}d}"


def cmd_limits(args: argparse.Namespace) -> int:
    rows = identities.asymptotics_report(args.n)
    cols = ["phiOverH", "qOverH", "thetaOverP", "rOverP", "phiGap", "qGap", "thetaGap", "rGap"]
    if args.format == "json":
        print(json.dumps([{k: str(v) for k, v in row.items()} for row in rows], indent=2))
        return EXIT_OK
    if args.exact:
        for row in rows:
            print(f"n={row['n']} " + " ".join(f"{c}={row[c]}" for c in cols))
        return EXIT_OK
    print("n".ljust(8) + "".join(c.ljust(14) for c in cols))
    for row in rows:
        print(str(row["n"]).ljust(8) + "".join(_decimal(row[c]).ljust(14) for c in cols))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    rows = bench.TASKS[args.task](args.sizes)
    for row in rows:
        print(row.line())
    if args.task == "dp-count":
        ok = bench.growth_ok(rows)
        print(f"linear-growth {'ok' if ok else 'VIOLATED'}")
        return EXIT_OK if ok else EXIT_VERIFY
    if args.task == "seq" and not all(r.detail["within_1"] for r in rows):
        return EXIT_VERIFY
    if args.task == "dfs-vs-dp" and not all(r.detail["equal"] for r in rows):
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tristrip", description="Exact tilings of two-row triangular strips.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of tilings")
    _add_source(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("stats", help="tilings and tile totals")
    _add_source(p)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("seq", help="sequence values")
    p.add_argument("--id", required=True, choices=[s.value for s in SeqId])
    p.add_argument("--from", dest="from_", type=int, required=True)
    p.add_argument("--to", type=int)
    p.add_argument("--route", choices=["recurrence", "closedForm", "gf", "bisection"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="identity suites and oracle checks")
    p.add_argument("--suite", default="all", choices=VERIFY_SUITES)
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--oracle-max-n", type=int, default=10)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="SVG of one tiling")
    _add_source(p, with_method=False)
    p.add_argument("--tiling-index", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--side-px", type=float, default=40.0)
    p.add_argument("--margin-px", type=float, default=10.0)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="list tilings in canonical order")
    _add_source(p, with_method=False)
    p.add_argument("--limit", type=int, default=20)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gf", help="expand a rational generating function")
    p.add_argument("--num", type=_int_list, required=True)
    p.add_argument("--den", type=_int_list, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("limits", help="exact tile ratios and their gaps to 4/5, 1/5")
    p.add_argument("--n", type=_int_list, default=[2, 5, 10, 100, 1000])
    p.add_argument("--exact", action="store_true", help="print exact fractions")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("bench", help="timings")
    p.add_argument("--task", choices=sorted(bench.TASKS), required=True)
    p.add_argument("--sizes", type=_int_list, required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileError as exc:
        print(f"tristrip: {exc}", file=sys.stderr)
        return EXIT_FILE
    except (UsageError, DomainError, CapabilityError, ValueError, KeyError) as exc:
        print(f"tristrip: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"tristrip: invariant failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
