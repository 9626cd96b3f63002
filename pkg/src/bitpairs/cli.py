"""Command-line interface.

Subcommands: count, table, triangle, verify, enumerate, bijection.

Exit status contract: 0 on success, 1 when `verify` finds mismatches, 2 on
usage or domain errors (reported as one line on stderr).  All output is
newline-terminated, decimal and locale-free.

The oracle-backed commands honor the limit on exhaustive-enumeration size:
the --oracle-limit flag wins over the BITPAIRS_ORACLE_LIMIT environment
variable, which wins over the built-in default of 20.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Optional

from .counting import (
    MemoCache,
    s_circular,
    s_circular_oracle,
    z_auto,
    z_closed_m0,
    z_oracle,
    z_recur_firstone,
    z_recur_split,
    z_reduce_to_m0,
)
from .enumeration import enumerate_circular, enumerate_Z, from_terquem, to_terquem
from .tables import (
    TRIANGLE_FORMATS,
    VERIFY_MODES,
    Z_TABLE_FORMATS,
    render_terquem_triangle,
    render_z_table,
    verify_all,
)

ORACLE_LIMIT_ENV = "BITPAIRS_ORACLE_LIMIT"

METHODS = ("auto", "oracle", "split", "first-one", "reduce", "closed")


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # one-line diagnostics on stderr instead of argparse's usage dump
    def error(self, message: str) -> None:
        raise _UsageError(message)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return value


def _resolve_limit(args: argparse.Namespace) -> Optional[int]:
    flag = getattr(args, "oracle_limit", None)
    if flag is not None:
        return flag
    env = os.environ.get(ORACLE_LIMIT_ENV)
    if env is None:
        return None
    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"invalid {ORACLE_LIMIT_ENV}: {env!r}") from None
    if value < 0:
        raise ValueError(f"invalid {ORACLE_LIMIT_ENV}: {env!r}")
    return value


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_count(args: argparse.Namespace) -> int:
    limit = _resolve_limit(args)
    n, k, m, method = args.n, args.k, args.m, args.method
    if method == "closed":
        if args.circular:
            raise ValueError("method 'closed' does not apply to circular adjacency")
        if m != 0:
            raise ValueError("method 'closed' requires m = 0")
        value = z_closed_m0(n, k)
    elif args.circular:
        if method == "auto":
            value = s_circular(n, k, m)
        elif method == "oracle":
            value = s_circular_oracle(n, k, m, limit=limit)
        else:
            value = s_circular(n, k, m, z=_linear_evaluator(method, limit))
    else:
        value = _linear_evaluator(method, limit)(n, k, m)
    print(value)
    return 0


def _linear_evaluator(
    method: str, limit: Optional[int]
) -> Callable[[int, int, int], int]:
    if method == "auto":
        return z_auto
    if method == "oracle":
        return lambda n, k, m: z_oracle(n, k, m, limit=limit)
    if method == "reduce":
        return z_reduce_to_m0
    recur = z_recur_split if method == "split" else z_recur_firstone
    cache = MemoCache()
    return lambda n, k, m: recur(n, k, m, cache)


def _cmd_table(args: argparse.Namespace) -> int:
    mode = "circular" if args.circular else "linear"
    _emit(render_z_table(args.n, mode, args.format), args.out)
    return 0


def _cmd_triangle(args: argparse.Namespace) -> int:
    _emit(render_terquem_triangle(args.rows, args.format), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_all(args.max_n, args.mode, limit=_resolve_limit(args))
    print(report.summary())
    return 0 if report.success else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    limit = _resolve_limit(args)
    if args.circular:
        strings = enumerate_circular(args.n, args.k, args.m, limit=limit)
    else:
        strings = enumerate_Z(args.n, args.k, args.m, limit=limit)
    for b in strings:
        print(b)
    return 0


def _parse_sequence(text: str) -> tuple[int, ...]:
    body = text.strip()
    if not body:
        return ()
    try:
        return tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ValueError(
            f"invalid sequence: {text!r} (expected comma-separated integers)"
        ) from None


def _cmd_bijection(args: argparse.Namespace) -> int:
    if args.string is not None:
        print(",".join(str(i) for i in to_terquem(args.string)))
        return 0
    if args.n is None:
        raise ValueError("--n is required with --sequence")
    print(from_terquem(_parse_sequence(args.sequence), args.n))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bitpairs",
        description="Count and enumerate binary strings by their adjacent "
        "0-pair and 1-pair statistics, linear or circular.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_limit(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--oracle-limit",
            type=_nonneg,
            default=None,
            help=f"max n for exhaustive enumeration (default 20; env {ORACLE_LIMIT_ENV})",
        )

    p = sub.add_parser("count", help="print one exact count")
    p.add_argument("--n", type=_nonneg, required=True, help="string length")
    p.add_argument("--k", type=_nonneg, required=True, help="number of 0-pairs")
    p.add_argument("--m", type=_nonneg, required=True, help="number of 1-pairs")
    p.add_argument("--circular", action="store_true", help="wraparound adjacency")
    p.add_argument("--method", choices=METHODS, default="auto")
    add_limit(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="all counts for one length as a table")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--circular", action="store_true")
    p.add_argument("--format", choices=Z_TABLE_FORMATS, default="csv")
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("triangle", help="rows of the A046854 triangle")
    p.add_argument("--rows", type=_nonneg, required=True)
    p.add_argument("--format", choices=TRIANGLE_FORMATS, default="csv")
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("verify", help="cross-check all methods against the oracles")
    p.add_argument("--max-n", type=_nonneg, required=True, dest="max_n")
    p.add_argument("--mode", choices=VERIFY_MODES, default="both")
    add_limit(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="list the counted strings, one per line")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--circular", action="store_true")
    add_limit(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("bijection", help="map a 1-pair-free string to its 0-pair positions, or back")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--string", default=None, help="string to map to positions")
    group.add_argument("--sequence", default=None, help="comma-separated positions to map back")
    p.add_argument("--n", type=_nonneg, default=None, help="target length (with --sequence)")
    p.set_defaults(func=_cmd_bijection)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:  # argparse --help
        code = e.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
