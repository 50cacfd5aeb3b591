"""``rigidity-lab`` command line.

Exit codes: 0 success, 1 parse error, 2 invalid input or validation failure,
3 size cap exceeded, 4 built-in table mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import report as R
from .betti import bigraded_betti
from .errors import CapExceeded, ParseError, RigidityLabError
from .polytope import format_profile, parse_profile
from .tables import TABLES, render_tables, run_tables, search_profile

EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4


def _emit(doc, fmt: str, render) -> None:
    if fmt == "text":
        print(render(doc))
    else:
        print(R.dumps(doc))


def cmd_build(args) -> int:
    P, name = R.load(args.input)
    _emit(R.complex_to_json(P.complex, name), args.format, R.render_complex)
    return 0


def cmd_invariants(args) -> int:
    P, _ = R.load(args.input)
    _emit(R.invariants_to_json(P), args.format, R.render_invariants)
    return 0


def cmd_betti(args) -> int:
    P, _ = R.load(args.input)
    _emit(R.betti_to_json(bigraded_betti(P, args.cap)), args.format, R.render_betti)
    return 0


def cmd_classify(args) -> int:
    P, _ = R.load(args.input)
    _emit(R.classify_to_json(P), args.format, R.render_classification)
    return 0


def cmd_compare(args) -> int:
    P1, _ = R.load(args.first)
    P2, _ = R.load(args.second)
    _emit(R.compare(P1, P2, args.cap), args.format, R.render_compare)
    return 0


def cmd_tables(args) -> int:
    which = tuple(args.table) if args.table else tuple(TABLES)
    rep = run_tables(which, jobs=args.jobs, cap=args.cap, search=args.search)
    _emit(rep, args.format, render_tables)
    return 0 if rep["all_passed"] else EXIT_MISMATCH


def _render_search(doc: dict) -> str:
    if not doc["results"]:
        return f"no truncation of the bases has profile {doc['target']}"
    return "\n".join(f"{r['construction']}  {r['profile']}" for r in doc["results"])


def cmd_search(args) -> int:
    target = parse_profile(args.profile)
    bases = args.base or ["product(polygon(5),simplex(1))", "product(polygon(6),simplex(1))"]
    hits = search_profile(target, bases, args.depth)
    doc = {
        "target": format_profile(target),
        "bases": bases,
        "depth": args.depth,
        "results": [{"construction": e, "profile": format_profile(target), "m": P.m} for e, P in hits],
    }
    _emit(doc, args.format, _render_search)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cap", type=int, default=None,
                        help="largest facet count for subset enumeration (default: $RIGIDITY_CAP or 20)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for 'tables'")

    parser = argparse.ArgumentParser(prog="rigidity-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    src_help = "DSL expression, built-in name, or complex JSON file"

    for name, func, text in (
        ("build", cmd_build, "print the dual complex as JSON"),
        ("invariants", cmd_invariants, "f- and h-vectors, 2-face profile, flag tests"),
        ("betti", cmd_betti, "bigraded Betti numbers"),
        ("classify", cmd_classify, "product-of-simplices and vertex-cut recognisers"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input", help=src_help)
        p.set_defaults(func=func)

    p = sub.add_parser("compare", parents=[common], help="Betti tables and isomorphism of two polytopes")
    p.add_argument("first", help=src_help)
    p.add_argument("second", help=src_help)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("tables", parents=[common], help="check the built-in Betti tuple tables")
    p.add_argument("--table", type=int, action="append", choices=sorted(TABLES))
    p.add_argument("--search", action="store_true", help="also search for unconstructed rows")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("search", parents=[common], help="find truncations with a given 2-face profile")
    p.add_argument("profile", help='e.g. "4:5,5:2,6:2" or "4^5 5^2 6^2"')
    p.add_argument("--base", action="append", help="base polytope (repeatable)")
    p.add_argument("--depth", type=int, default=1, choices=(0, 1, 2))
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (RigidityLabError, ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
