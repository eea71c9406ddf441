"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error.  Results go
to stdout as JSON or TSV; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .claims import CLAIMS, VerifyConfig, jsonable, verify
from .combinatorics import bell, format_partition, partitions_up_to
from .diagrams import (
    enumerate_diagrams,
    enumerate_dual,
    enumerate_K,
    enumerate_L,
    enumerate_N,
    enumerate_V,
    format_diagram,
    parse_diagram,
    rank,
)
from .exactlinalg import format_poly, parse_rational
from .palgebra import AlgebraElement, multiply, parse_element
from .reps import character_table
from .rook import bratteli_emit, is_partial_permutation
from .rsk import rsk_count_check, rsk_roundtrip
from .wbimodule import bitrace, image_rank, w_commutant_dim


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diagramma", description="Partition algebras, rook monoids and their bimodule.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("bell", help="Bell number B(k)")
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("diagrams", help="enumerate a family of partition diagrams (TSV)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--family", choices=["A", "V", "N", "dual", "L", "K"], default="A")
    s.add_argument("--i", type=int, help="rank for V, N, L, K (default: all ranks)")

    s = sub.add_parser("multiply", help="product in P_k(delta)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s.add_argument("--delta", type=_rational)

    s = sub.add_parser("bratteli", help="Ind/Res Bratteli diagram for the rook monoid tower")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["dot", "json"], default="json")

    s = sub.add_parser("characters", help="table of chi_{P_k^lambda}(d_mu) (TSV)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--delta", type=_rational)

    s = sub.add_parser("verify", help="check a claim and report both sides")
    s.add_argument("--claim", choices=CLAIMS, required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--n", type=int)
    s.add_argument("--delta", type=_rational)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("bitrace", help="bitrace of (sigma, d) on W_{k,n}")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--sigma", required=True, help="images of 1..n, 0 = undefined, e.g. 2,1,0")
    s.add_argument("--d", required=True)
    s.add_argument("--delta", type=_rational)

    s = sub.add_parser("commutant", help="image rank of P_k(delta) against dim End_{R_n}(W_{k,n})")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--delta", type=_rational, required=True)

    s = sub.add_parser("rsk", help="RSK count identity for n-restricted set partitions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--roundtrip", action="store_true")
    return p


def _emit(obj) -> None:
    print(json.dumps(jsonable(obj), indent=2))


def _parse_operand(text: str, k: int) -> AlgebraElement:
    text = text.strip()
    if text.startswith("["):
        d = parse_diagram(text)
        if d.k != k or d.l != k:
            raise ValueError(f"{text!r} is not a diagram in A_{k}")
        return AlgebraElement.basis(d)
    return parse_element(text)


def _family(k: int, family: str, i: int | None):
    if family == "A":
        return enumerate_diagrams(k)
    if family == "dual":
        return enumerate_dual(k)
    make = {"V": enumerate_V, "N": enumerate_N, "L": enumerate_L, "K": enumerate_K}[family]
    ranks = [i] if i is not None else range(k + 1)
    return [d for r in ranks for d in make(k, r)]


def _check_nonneg(**kw) -> None:
    for name, v in kw.items():
        if v is not None and v < 0:
            raise UsageError(f"--{name} must be nonnegative")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_nonneg(**{a: getattr(args, a, None) for a in ("k", "n", "i")})
        return _dispatch(args)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}))
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(json.dumps({"error": "invalid input", "message": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    verb = args.verb
    if verb == "bell":
        print(bell(args.k))
    elif verb == "diagrams":
        print("rank\tdiagram")
        for d in _family(args.k, args.family, args.i):
            print(f"{rank(d)}\t{format_diagram(d)}")
    elif verb == "multiply":
        a = _parse_operand(args.lhs, args.k)
        b = _parse_operand(args.rhs, args.k)
        prod = multiply(a, b, args.delta)
        _emit({"terms": [{"coefficient": format_poly(c), "diagram": format_diagram(d)}
                         for d, c in prod.terms.items()]})
    elif verb == "bratteli":
        sys.stdout.write(bratteli_emit(args.k, args.n, args.format))
        if args.format == "json":
            print()
    elif verb == "characters":
        table = character_table(args.k, args.delta)
        mus = partitions_up_to(args.k)
        print("lambda\\mu\t" + "\t".join(format_partition(mu) for mu in mus))
        for lam, row in table.items():
            print(format_partition(lam) + "\t" + "\t".join(format_poly(row[mu]) for mu in mus))
    elif verb == "verify":
        cfg = VerifyConfig(k=args.k, n=args.n, delta=args.delta, seed=args.seed)
        report = verify(args.claim, cfg)
        _emit(report)
        if not report["equal"]:
            print(f"verification failed: {args.claim}", file=sys.stderr)
            return 1
    elif verb == "bitrace":
        sigma = tuple(int(x) for x in args.sigma.split(","))
        d = parse_diagram(args.d)
        if not is_partial_permutation(sigma, args.n) or d.k != args.k or d.l != args.k:
            raise ValueError("sigma must have n entries and d must lie in A_k")
        value = bitrace(sigma, d, args.n, args.delta)
        _emit({"k": args.k, "n": args.n, "sigma": list(sigma), "d": format_diagram(d), "bitrace": value})
    elif verb == "commutant":
        r = image_rank(args.k, args.n, args.delta)
        c = w_commutant_dim(args.k, args.n)
        _emit({"k": args.k, "n": args.n, "delta": str(args.delta), "image_rank": r,
               "commutant_dim": c, "surjective": r == c})
    elif verb == "rsk":
        report = rsk_count_check(args.n, args.k, enumerate_=True)
        if args.roundtrip:
            report["roundtrip"] = rsk_roundtrip(args.n, args.k)
            report["equal"] = report["equal"] and report["roundtrip"]["equal"]
        _emit(report)
        if not report["equal"]:
            return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
