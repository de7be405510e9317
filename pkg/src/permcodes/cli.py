"""Command-line front end.

Exit codes: 0 success, 2 parse/format error, 3 invalid instance,
4 enumeration guard exceeded.  Decision answers go to stdout.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .camwu import counterexample_demo
from .errors import (
    DomainError,
    InstanceTooLargeError,
    InvalidAssignmentError,
    InvalidInstanceError,
    InvalidPermutationError,
    NotAbelianInvolutiveError,
    ParseError,
)
from .group import contains, loads_generators, order, schreier_sims
from .minweight import METHODS, decide_minwspa, min_nonzero_weight
from .naesat import parse_dimacs, solve_nae_bruteforce
from .perm import format_cycles, parse_cycles
from .reduction import build_generators, theorem_sweep

EXIT_PARSE, EXIT_INSTANCE, EXIT_GUARD = 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("-")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


def cmd_reduce(args, out):
    r = build_generators(parse_dimacs(_read(args.input)))
    text = r.dumps()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"degree={r.degree}", file=out)
        print(f"generators={len(r.generators)}", file=out)
        print(f"wrote={args.output}", file=out)
    else:
        out.write(text)


def cmd_minweight(args, out):
    gs = loads_generators(_read(args.gens))
    res = min_nonzero_weight(gs, args.method)
    if res is None:
        print("minweight=none", file=out)
        print("witness=()", file=out)
        return
    print(f"minweight={res.weight}", file=out)
    print(f"witness={format_cycles(res.witness)}", file=out)
    print(f"method={res.method}", file=out)


def cmd_decide(args, out):
    gs = loads_generators(_read(args.gens))
    print("YES" if decide_minwspa(gs, args.bound, args.method) else "NO", file=out)


def cmd_member(args, out):
    gs = loads_generators(_read(args.gens))
    p = parse_cycles(args.perm)
    print(f"member={str(contains(schreier_sims(gs), p)).lower()}", file=out)


def cmd_order(args, out):
    gs = loads_generators(_read(args.gens))
    print(f"order={order(schreier_sims(gs))}", file=out)


def cmd_naesat(args, out):
    sol = solve_nae_bruteforce(parse_dimacs(_read(args.input)))
    if sol is None:
        print("UNSAT", file=out)
    else:
        print("SAT", file=out)
        print(f"assignment={sol.to_dimacs()}", file=out)


def cmd_verify_theorem(args, out):
    reports = theorem_sweep(args.trials, args.seed, args.vars, args.clauses, args.method)
    ok = 0
    for t, rep in enumerate(reports, 1):
        ok += rep.consistent
        print(
            f"trial={t} n={rep.formula.num_vars} m={rep.formula.m} "
            f"sat={str(rep.satisfiable).lower()} minweight={rep.minweight} "
            f"expected={rep.expected} {'PASS' if rep.consistent else 'FAIL'}",
            file=out,
        )
    print(f"consistent={ok}/{len(reports)}", file=out)


def cmd_camwu_demo(args, out):
    rep = counterexample_demo()
    for line in rep.lines():
        print(line, file=out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permcodes", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", help="NAESAT DIMACS file -> generator-set file")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reduce)

    for name, func, helptext in (
        ("minweight", cmd_minweight, "exact minimum nonzero weight"),
        ("decide", cmd_decide, "is there a non-identity element of weight <= B"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("gens")
        s.add_argument("--method", choices=METHODS, default="auto")
        if name == "decide":
            s.add_argument("--bound", "-B", type=int, required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("member", help="membership test via Schreier-Sims")
    s.add_argument("gens")
    s.add_argument("perm", help="cycle notation, e.g. '(1,2)(3,4)'")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("order", help="group order via Schreier-Sims")
    s.add_argument("gens")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("naesat", help="brute-force NAE satisfiability")
    s.add_argument("input")
    s.set_defaults(func=cmd_naesat)

    s = sub.add_parser("verify-theorem", help="seeded random sweep: min weight 6 iff NAE-satisfiable")
    s.add_argument("--vars", type=_int_range, default=(2, 6), help="N or LO-HI (default 2-6)")
    s.add_argument("--clauses", type=_int_range, default=(1, 5), help="N or LO-HI (default 1-5)")
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--method", choices=METHODS, default="auto")
    s.set_defaults(func=cmd_verify_theorem)

    s = sub.add_parser("camwu-demo", help="weight-5 element breaking the Cameron-Wu reduction")
    s.set_defaults(func=cmd_camwu_demo)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args, out) or 0
    except (ParseError, InvalidPermutationError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidInstanceError, InvalidAssignmentError, NotAbelianInvolutiveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INSTANCE
    except InstanceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
