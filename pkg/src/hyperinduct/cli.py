"""Command-line front end.

Usage::

    hyperinduct families SPEC --prime P [--format json]
    hyperinduct generation SPEC --prime P [--dedupe]
    hyperinduct cover SPEC --prime P
    hyperinduct classify SPEC --prime P --M M [--window W]
    hyperinduct dress SPEC --prime P
    hyperinduct exponents N_OR_SPEC [--slack L]
    hyperinduct vanishing N_OR_SPEC
    hyperinduct verify [--quick]

SPEC uses the construction grammar of :mod:`hyperinduct.construct`, e.g.
``sym:3``, ``product(sym:3,cyclic:2)``,
``semidirect(c:7,p:cyclic:3,action:[2])`` or ``perm(4;(1 2 3);(1 2)(3 4))``.

Exit status: 0 success, 2 bad input, 3 order cap exceeded, 4 internal
failure (a verification that the theory guarantees did not pass).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import report
from .checks import run_all
from .classify import classify_all
from .construct import make_group
from .dress import dress_certificate
from .errors import CapExceeded, InternalFailure, SpecError
from .families import family_report
from .generation import (dedupe, elementary_cover, exponent_report, generation_data,
                         vanishing_report)
from .groups import DEFAULT_CAP

EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 2, 3, 4

PRIME_VERBS = ("families", "generation", "cover", "classify", "dress")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperinduct", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="group order cap")
    common.add_argument("--out", help="also write the report to this file")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in PRIME_VERBS:
        sp = sub.add_parser(verb, parents=[common])
        sp.add_argument("spec")
        sp.add_argument("--prime", "-p", type=int)
        if verb == "classify":
            sp.add_argument("--M", type=int)
            sp.add_argument("--window", type=int, help="Z-window for alpha checks (default 3N)")
        if verb == "generation":
            sp.add_argument("--dedupe", action="store_true",
                            help="collapse data with equal (P class, E class, |g|)")
    sp = sub.add_parser("exponents", parents=[common])
    sp.add_argument("n", help="group order, or a group spec")
    sp.add_argument("--slack", type=int, default=0, help="extra powers of q in c_q")
    sp = sub.add_parser("vanishing", parents=[common])
    sp.add_argument("n", help="group order, or a group spec")
    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("--quick", action="store_true", help="smaller sweeps")
    return parser


def _order_arg(text: str, cap: int) -> int:
    if text.strip().isdigit():
        return int(text)
    return make_group(text, cap).order


def dispatch(args: argparse.Namespace) -> tuple[dict, int]:
    verb = args.verb
    if verb in PRIME_VERBS:
        if args.prime is None:
            raise SpecError(f"{verb} requires --prime")
        if verb == "classify" and (args.M is None or args.M < 1):
            raise SpecError("classify requires a positive --M")
        G = make_group(args.spec, args.cap)
        p = args.prime
        if verb == "families":
            return report.families_report(G, family_report(G, p)), 0
        if verb == "generation":
            data = generation_data(G, p)
            if args.dedupe:
                data = dedupe(data)
            return report.generation_report(G, p, data, args.dedupe), 0
        if verb == "cover":
            return report.cover_report(G, p, elementary_cover(G, p)), 0
        if verb == "classify":
            table = classify_all(G, p, args.M)
            doc, ok = report.classify_report(table, args.window or 3 * table.N)
            return doc, 0 if ok else EXIT_INTERNAL
        doc = report.dress_report(G, dress_certificate(G, p))
        return doc, 0 if doc["verified"] else EXIT_INTERNAL
    if verb == "exponents":
        return report.exponents_report(exponent_report(_order_arg(args.n, args.cap), args.slack)), 0
    if verb == "vanishing":
        return report.vanishing_json(vanishing_report(_order_arg(args.n, args.cap))), 0
    results = run_all(full=not args.quick)
    passed = all(r.passed for r in results)
    doc = report.envelope("verify", passed=passed, lines=[r.line() for r in results],
                          checks=[{"name": r.name, "passed": r.passed, "cases": r.cases,
                                   "failures": [repr(f) for f in r.failures[:5]]}
                                  for r in results])
    return doc, 0 if passed else EXIT_INTERNAL


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, status = dispatch(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalFailure as exc:
        print(f"internal failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    # verify lines carry timings, so verify is the one command whose output is not byte-stable
    text = report.dumps(doc) + "\n" if args.format == "json" else report.to_text(doc)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
