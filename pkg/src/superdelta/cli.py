"""Command line interface.

Exit codes: 0 = EQUAL / success, 1 = DIFFER, 2 = INCONCLUSIVE,
3 = usage error, 4 = internal error.
"""

from __future__ import annotations

import argparse
import sys

from .coinvariants import component_characters, frobenius_module
from .macdonald import htilde_schur, rhs_series
from .partitions import partition_from_str, partition_to_str, partitions_of
from .superring import TriDegree
from .verifier import (
    DIFFER,
    EQUAL,
    INCONCLUSIVE,
    ComponentCache,
    render_report,
    verify_conjecture,
)

LONG_RUN_THRESHOLD = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors must exit with code > 2
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _parse_degree(text: str) -> TriDegree:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 3 or any(x < 0 for x in parts):
        raise ValueError(f"degree must be 'a,b,c' with nonnegative entries: {text!r}")
    return TriDegree(*parts)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superdelta", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="compare both sides of the identity")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--extra-band", type=int, default=1)
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.add_argument("--cache-dir", default=None)
    p_verify.add_argument("--format", default="text",
                          choices=["json", "csv", "latex", "text"])
    p_verify.add_argument("--budget-seconds", type=float, default=None)
    p_verify.add_argument("--max-degree", type=int, default=None,
                          help="frontier budget on a+b per theta row")
    p_verify.add_argument("--no-modular-prefilter", action="store_true")
    p_verify.add_argument("--long", action="store_true",
                          help="allow the long-running module side for n >= 5")

    p_frob = sub.add_parser("frobenius", help="print one side's Schur expansion")
    p_frob.add_argument("--n", type=int, required=True)
    p_frob.add_argument("--side", required=True, choices=["module", "delta"])
    p_frob.add_argument("--spec", default=None, choices=["z=0", "t=0", "q=t=1"])
    p_frob.add_argument("--threads", type=int, default=1)
    p_frob.add_argument("--cache-dir", default=None)
    p_frob.add_argument("--long", action="store_true")

    p_hilb = sub.add_parser("hilbert", help="module-side dimensions per tri-degree")
    p_hilb.add_argument("--n", type=int, required=True)
    p_hilb.add_argument("--threads", type=int, default=1)
    p_hilb.add_argument("--cache-dir", default=None)
    p_hilb.add_argument("--long", action="store_true")

    p_mac = sub.add_parser("macdonald", help="Schur expansion of one H~_mu")
    p_mac.add_argument("--mu", required=True, help='partition such as "3,1"')

    p_char = sub.add_parser("character", help="quotient characters of one component")
    p_char.add_argument("--n", type=int, required=True)
    p_char.add_argument("--degree", required=True, help="tri-degree a,b,c")
    return parser


def _require_long(parser: argparse.ArgumentParser, n: int, long_flag: bool) -> None:
    if n >= LONG_RUN_THRESHOLD and not long_flag:
        parser.error(
            f"the module side for n={n} is a long-running computation; pass --long"
        )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(parser, args)
    except BrokenPipeError:
        return 4
    except SystemExit:
        raise
    except Exception as exc:  # internal errors must exit with code > 2
        print(f"superdelta: internal error: {exc}", file=sys.stderr)
        return 4


def _dispatch(parser, args) -> int:
    if args.command == "verify":
        _require_long(parser, args.n, args.long)
        report = verify_conjecture(
            args.n,
            extra_band=args.extra_band,
            threads=args.threads,
            cache_dir=args.cache_dir,
            budget_seconds=args.budget_seconds,
            max_ab=args.max_degree,
            use_modp=not args.no_modular_prefilter,
        )
        print(render_report(report, args.format))
        return {EQUAL: 0, DIFFER: 1, INCONCLUSIVE: 2}[report.verdict]

    if args.command == "frobenius":
        series = _series_for_side(parser, args)
        if args.spec == "z=0":
            series = series.specialize(z=0)
        elif args.spec == "t=0":
            series = series.specialize(t=0)
        elif args.spec == "q=t=1":
            series = series.specialize(q=1, t=1)
        for line in series.pretty_lines():
            print(line)
        return 0

    if args.command == "hilbert":
        _require_long(parser, args.n, args.long)
        cache = ComponentCache(args.cache_dir) if args.cache_dir else None
        result = frobenius_module(args.n, threads=args.threads, component_cache=cache)
        print("a b c dim")
        for d, dim in sorted(result.hilbert().items()):
            print(f"{d.a} {d.b} {d.c} {dim}")
        return 0

    if args.command == "macdonald":
        mu = partition_from_str(args.mu)
        if not mu:
            parser.error("mu must be a nonempty partition")
        h = htilde_schur(mu)
        for lam in partitions_of(sum(mu)):
            c = h.coefficient(lam)
            if not c.is_zero():
                print(f"s({partition_to_str(lam)}): {c}")
        return 0

    if args.command == "character":
        degree = _parse_degree(args.degree)
        comp = component_characters(args.n, degree)
        print(f"component ({degree.a},{degree.b},{degree.c}): "
              f"ambient dim {comp.dim}, ideal rank {comp.rank}, "
              f"quotient dim {comp.dim_quotient}")
        for mu in partitions_of(args.n):
            print(f"chi({partition_to_str(mu)}) = {comp.chars[mu]}")
        return 0

    parser.error(f"unknown command {args.command!r}")
    return 3


def _series_for_side(parser, args):
    if args.side == "delta":
        return rhs_series(args.n)
    _require_long(parser, args.n, args.long)
    cache = ComponentCache(args.cache_dir) if args.cache_dir else None
    return frobenius_module(args.n, threads=args.threads, component_cache=cache).series


if __name__ == "__main__":
    sys.exit(main())
