"""Command-line surface: compute any polynomial family, or run the identity
battery.

Shapes are comma-separated part lists.  Families indexed by partitions reject
unsorted input instead of sorting it; the increasing/decreasing distinction
is meaningful everywhere in this package.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .integral import j_compact, j_plain, p_poly
from .modified import htilde_compact, htilde_plain
from .nonsymmetric import e_permuted_basement, f_poly, integral_e
from .polyring import KEEP, MPoly
from .quasisym import g_poly, qs_schur, schur_ssyt
from .shapes import ShapeError
from .verify import run_suite

MPOLY_FAMILIES = {"htilde", "j", "qschur", "schur"}
ERESULT_FAMILIES = {"e", "f", "p", "g"}


class UsageError(SystemExit):
    def __init__(self, message: str):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(2)


def parse_shape(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise UsageError(f"shape {text!r} is not a comma-separated integer list")
    if any(p < 0 for p in parts):
        raise UsageError("shape parts must be nonnegative")
    return parts


def parse_value(text: str) -> int | Fraction:
    if "/" in text:
        return Fraction(text)
    return int(text)


def require_partition(shape: tuple[int, ...]) -> tuple[int, ...]:
    if any(a < b for a, b in zip(shape, shape[1:])) or any(p <= 0 for p in shape):
        raise UsageError(
            f"{shape} is not a partition (weakly decreasing, positive parts); "
            "input is not sorted for you"
        )
    return shape


def require_strong(shape: tuple[int, ...]) -> tuple[int, ...]:
    if any(p <= 0 for p in shape):
        raise UsageError(f"{shape} must have positive parts only")
    return shape


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macpoly",
        description="Exact Macdonald-polynomial families from combinatorial formulas",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(name, aliases=(), partition=False, strong=False, needs_n=True):
        p = sub.add_parser(name, aliases=list(aliases))
        p.add_argument("--shape", required=True, type=parse_shape)
        if needs_n:
            p.add_argument("--n", required=True, type=int)
        p.add_argument("--q", type=parse_value, default=None)
        p.add_argument("--t", type=parse_value, default=None)
        p.add_argument("--json", action="store_true")
        p.set_defaults(family=name, partition=partition, strong=strong)
        return p

    ht = add_family("htilde", partition=True)
    ht.add_argument("--formula", choices=["plain", "hhl", "compact"], default="compact",
                    help="hhl is a compatibility alias for plain")
    jp = add_family("j", partition=True)
    jp.add_argument("--formula", choices=["plain", "hhl", "compact"], default="compact",
                    help="hhl is a compatibility alias for plain")
    for name in ("e", "f"):
        p = add_family(name, needs_n=False)
        p.add_argument("--integral", action="store_true")
        p.add_argument("--verify", action="store_true",
                       help="with --integral: also run the multiplier-cleared route")
    add_family("p", partition=True)
    add_family("g", aliases=("gpoly",), strong=True)
    add_family("qschur", strong=True)
    add_family("schur", partition=True)

    v = sub.add_parser("verify")
    v.add_argument("suite", choices=["all", "htilde", "j", "qsym", "fixtures"])
    v.add_argument("--max-size", type=int, default=None)
    v.add_argument("--max-n", type=int, default=None)
    return parser


def _specialize_args(args):
    q = KEEP if args.q is None else args.q
    t = KEEP if args.t is None else args.t
    return q, t


def _emit_mpoly(poly: MPoly, args) -> None:
    if args.json:
        print(json.dumps(poly.to_json_obj(), separators=(",", ":")))
    else:
        print(poly)


def _emit_eresult(result, args) -> None:
    q, t = _specialize_args(args)
    if q is not KEEP or t is not KEEP:
        if q is KEEP or t is KEEP:
            raise UsageError("this family needs both --q and --t for substitution")
        _emit_mpoly(result.specialize(q=q, t=t), args)
        return
    if args.json:
        print(json.dumps(result.to_json_obj(), separators=(",", ":")))
    else:
        for exps in sorted(result.coeffs, reverse=True):
            mono = MPoly.monomial(result.n, x=exps)
            print(f"{mono}  *  {result.coeffs[exps]}")
        if not result.coeffs:
            print("0")


def run_family(args) -> int:
    family = args.family
    shape = args.shape
    if args.partition:
        shape = require_partition(shape)
    if args.strong:
        shape = require_strong(shape)
    q, t = _specialize_args(args)

    if family == "htilde":
        fn = htilde_compact if args.formula == "compact" else htilde_plain
        poly = fn(shape, args.n)
        _emit_mpoly(poly.specialize(q=q, t=t), args)
    elif family == "j":
        poly = j_compact(shape, args.n).value if args.formula == "compact" else j_plain(shape, args.n)
        _emit_mpoly(poly.specialize(q=q, t=t), args)
    elif family in ("e", "f"):
        if getattr(args, "integral", False):
            poly = integral_e(shape, verify=getattr(args, "verify", False))
            _emit_mpoly(poly.specialize(q=q, t=t), args)
        else:
            fn = e_permuted_basement if family == "e" else f_poly
            _emit_eresult(fn(shape), args)
    elif family == "p":
        _emit_eresult(p_poly(shape, args.n), args)
    elif family == "g":
        _emit_eresult(g_poly(shape, args.n), args)
    elif family == "qschur":
        _emit_mpoly(qs_schur(shape, args.n).specialize(q=q, t=t), args)
    elif family == "schur":
        _emit_mpoly(schur_ssyt(shape, args.n).specialize(q=q, t=t), args)
    else:  # pragma: no cover
        raise UsageError(f"unknown family {family}")
    return 0


def run_verify(args) -> int:
    max_size = args.max_size
    if max_size is None and os.environ.get("MACPOLY_VERIFY_MAX_SIZE"):
        max_size = int(os.environ["MACPOLY_VERIFY_MAX_SIZE"])
    results = run_suite(args.suite, max_size, args.max_n)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify(args)
        return run_family(args)
    except ShapeError as exc:
        raise UsageError(str(exc))
    except ValueError as exc:
        raise UsageError(str(exc))


if __name__ == "__main__":
    sys.exit(main())
