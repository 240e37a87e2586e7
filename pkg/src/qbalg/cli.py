"""qbalg command line.

Exit codes: 0 success, 1 a property or equivalence was violated (a bug
surface), 2 bad input.
"""
import argparse
import sys

from . import report
from .errors import PresentationError, TheoremViolation
from .io import emit_report, load

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", metavar="PATH",
                        help="write the JSON report here instead of stdout")
    common.add_argument("--bound", type=int, default=None, metavar="M",
                        help="degree bound")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for sampled harness scopes")

    p = argparse.ArgumentParser(prog="qbalg", parents=[common],
                                description="Quadratic sets and quantum binomial algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    cmd("check", "predicates and quantum binomial verdict").add_argument("file")
    c = cmd("orbits", "orbit census of words of length m")
    c.add_argument("file")
    c.add_argument("--degree", type=int, default=3)
    c = cmd("dims", "dimensions of A and its Koszul dual")
    c.add_argument("file")
    c.add_argument("--max", type=int, default=None, dest="max_degree")
    c = cmd("pbw", "Groebner check for one order or search all orders")
    c.add_argument("file")
    c.add_argument("--order", help="e.g. 't>x>z>y'")
    c.add_argument("--search", action="store_true")
    c = cmd("graphs", "graphs of normal words and obstructions")
    c.add_argument("file")
    c.add_argument("--order", required=True)
    c = cmd("harness", "equivalence matrices for a file, or a whole suite")
    c.add_argument("file", nargs="?")
    c.add_argument("--scope", help="run a suite instead: fixtures, "
                   "exhaustive-n<=3, sampled-n<=5, census-n<=4")
    c.add_argument("--samples", type=int, default=200)
    c.add_argument("--witness-dir", help="write failing instances here")
    c = cmd("report", "full report for a presentation")
    c.add_argument("file")
    c = cmd("classify", "quantum binomial sets up to isomorphism")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--no-pbw", action="store_true",
                   help="skip counting PBW orders per class")
    return p


def _run(args):
    """Return (document, exit code)."""
    if args.command == "classify":
        return report.classify_report(args.n, not args.no_pbw), EXIT_OK
    if args.command == "harness" and args.file is None:
        if not args.scope:
            raise ValueError("harness needs a file or --scope")
        from .harness import run_suite
        res = run_suite(args.scope, args.seed, args.samples, args.witness_dir)
        return res.as_dict(), EXIT_OK if res.passed else EXIT_VIOLATION
    obj = load(args.file)
    names = list(obj.names)
    if args.command == "check":
        return report.check_report(obj), EXIT_OK
    if args.command == "orbits":
        return report.orbit_report(obj, args.degree), EXIT_OK
    if args.command == "dims":
        bound = args.max_degree if args.max_degree is not None else (args.bound or 5)
        doc = report.dims_report(obj, bound)
        ok = doc.get("oracles_agree", True) is not False
        return doc, EXIT_OK if ok else EXIT_VIOLATION
    if args.command == "pbw":
        order = report.parse_order(args.order, names) if args.order else None
        if order is None and not args.search:
            raise ValueError("pbw needs --order or --search")
        return report.pbw_report(obj, order, args.search), EXIT_OK
    if args.command == "graphs":
        order = report.parse_order(args.order, names)
        return report.graphs_report(obj, order, args.bound or 8), EXIT_OK
    if args.command == "harness":
        return report.harness_report(obj, args.bound or 4), EXIT_OK
    return report.full_report(obj, args.bound or 5), EXIT_OK


def main(argv=None):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        doc, code = _run(args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (PresentationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = emit_report(doc)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
