"""Command-line surface: map, unmap, member, verify, count, series.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success (and
verification pass), 1 verification failure, 2 usage or domain error.  All
output is deterministic: fixed orderings, sorted JSON keys.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import forward, inverse
from .enumeration import DEFAULT_CAP, count_family, verify_bijection
from .families import in_A, in_B, validate_params
from .partitions import format_partition, parse_partition, to_json_dict
from .series import DEFAULT_SERIES_CAP, a_side_series, b_side_series


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _print_partition(pt, fmt: str) -> None:
    if fmt == "json":
        print(_dump(to_json_dict(pt)))
    else:
        print(format_partition(pt))


def _print_rows(rows: list[list[int]], fmt: str) -> None:
    if fmt == "json":
        print(_dump(rows))
    else:
        for n, count in rows:
            print(f"{n},{count}")


def _cmd_map(args) -> int:
    ps = validate_params(args.p, args.a, args.r)
    _print_partition(forward(ps, parse_partition(args.partition)), args.format)
    return 0


def _cmd_unmap(args) -> int:
    ps = validate_params(args.p, args.a, args.r)
    _print_partition(inverse(ps, parse_partition(args.partition)), args.format)
    return 0


def _cmd_member(args) -> int:
    ps = validate_params(args.p, args.a, args.r)
    pt = parse_partition(args.partition)
    member = in_A(ps, pt) if args.family == "A" else in_B(ps, pt)
    print("true" if member else "false")
    return 0


def _cmd_verify(args) -> int:
    ps = validate_params(args.p, args.a, args.r)
    report = verify_bijection(ps, args.max_n, cap=args.cap or DEFAULT_CAP, jobs=args.jobs)
    if args.format == "json":
        print(_dump(report.to_json_dict()))
    else:
        print("n,count_a,count_b,roundtrip,weight,membership,collision")
        for rec in report.per_n:
            print(
                f"{rec.n},{rec.count_a},{rec.count_b},{rec.roundtrip_failures},"
                f"{rec.weight_failures},{rec.membership_failures},{rec.collision_failures}"
            )
        print("pass" if report.passed else "fail")
    return 0 if report.passed else 1


def _cmd_count(args) -> int:
    ps = validate_params(args.p, args.a, args.r)
    if args.method == "enumerate":
        cap = args.cap or DEFAULT_CAP
        counts = [count_family(ps, args.family, n, cap) for n in range(args.max_n + 1)]
    else:
        cap = args.cap or DEFAULT_SERIES_CAP
        side = a_side_series if args.family == "A" else b_side_series
        counts = list(side(ps, args.max_n, cap).coeffs)
    _print_rows([[n, c] for n, c in enumerate(counts)], args.format)
    return 0


def _cmd_series(args) -> int:
    ps = validate_params(args.p, args.a, args.r)
    side = a_side_series if args.side == "A" else b_side_series
    coeffs = side(ps, args.max_n, args.cap or DEFAULT_SERIES_CAP).coeffs
    _print_rows([[n, c] for n, c in enumerate(coeffs)], args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--p", type=int, required=True, help="modulus p >= 2")
    params.add_argument("--a", type=int, required=True, help="residue a, 1 <= a < p, coprime to p")
    params.add_argument("--r", type=int, required=True, help="extension parameter r >= 0")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="text")

    bound = argparse.ArgumentParser(add_help=False)
    bound.add_argument("--max-n", "--n", dest="max_n", type=int, required=True,
                       help="largest weight n to process")
    bound.add_argument("--cap", type=int, default=None,
                       help="resource guard override (enumeration default 60, series 2000)")

    parser = argparse.ArgumentParser(
        prog="macmahon",
        description="Map, test, count, and verify the two partition families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_map = sub.add_parser("map", parents=[params, fmt], help="apply the forward map")
    p_map.add_argument("--partition", required=True, help="A-side partition, e.g. '2^2,1^3'")
    p_map.set_defaults(handler=_cmd_map)

    p_unmap = sub.add_parser("unmap", parents=[params, fmt], help="apply the inverse map")
    p_unmap.add_argument("--partition", required=True, help="B-side partition, e.g. '4,3'")
    p_unmap.set_defaults(handler=_cmd_unmap)

    p_member = sub.add_parser("member", parents=[params, fmt], help="test family membership")
    p_member.add_argument("--family", choices=("A", "B"), required=True)
    p_member.add_argument("--partition", required=True)
    p_member.set_defaults(handler=_cmd_member)

    p_verify = sub.add_parser("verify", parents=[params, fmt, bound],
                              help="exhaustively verify the bijection up to max-n")
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="worker processes for per-n verification")
    p_verify.set_defaults(handler=_cmd_verify)

    p_count = sub.add_parser("count", parents=[params, fmt, bound],
                             help="count family members for n = 0..max-n")
    p_count.add_argument("--family", choices=("A", "B"), required=True)
    p_count.add_argument("--method", choices=("enumerate", "series"), default="enumerate")
    p_count.set_defaults(handler=_cmd_count)

    p_series = sub.add_parser("series", parents=[params, fmt, bound],
                              help="generating-function coefficients for one side")
    p_series.add_argument("--side", choices=("A", "B"), required=True)
    p_series.set_defaults(handler=_cmd_series)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
