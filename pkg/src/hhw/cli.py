"""``hhw`` command line.

Exit codes: 0 all checks pass, 1 an identity is violated, 2 bad input
(unreadable or malformed file, bad arguments), 3 a cochain space exceeds
the resource bound.
"""

import argparse
import json
import sys
import time

from .algebra import validate
from .cohomology import DEFAULT_BOUND, Bicomplex, cohomology_dims, hodge_cohomology_dims
from .corpus import ALGEBRAS
from .formats import (
    FormatError,
    dumps,
    load_algebra,
    load_bivector,
    load_fixture_algebra,
    to_jsonable,
)
from .hochschild import ResourceBoundError
from .poisson import is_poisson
from .spectral import (
    first_page_first_filtration,
    first_page_second_filtration,
    smooth_collapse_check,
    total_z2_cohomology,
)
from .verify import SUITES, default_bivectors, run_suite, suite_star

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


def _common(p, window=True):
    if window:
        p.add_argument("--max-degree", "-N", type=_positive, default=4, dest="N")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--bound", type=_positive, default=DEFAULT_BOUND,
                   help="largest cochain-space dimension m^(n+1) allowed")
    p.add_argument("--no-timing", action="store_true", help="omit the timing field")


def build_parser():
    ap = argparse.ArgumentParser(prog="hhw", description="Exact Hochschild/Hodge workbench.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the algebra axioms of an algebra JSON file")
    p.add_argument("algebra")
    _common(p, window=False)

    p = sub.add_parser("cohomology", help="Hochschild cohomology dimensions")
    p.add_argument("algebra")
    p.add_argument("--hodge", action="store_true",
                   help="also the H^(p,q) table, both first pages and the total window")
    _common(p)

    p = sub.add_parser("verify", help="run an identity battery")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("inputs", nargs="*",
                   help="algebra files (bivector files for schouten); default: the fixture corpus")
    p.add_argument("--trials", "-T", type=_positive, default=100)
    p.add_argument("--seed", "-S", type=int, default=0)
    p.add_argument("--order", type=int, default=None, help="star suite: truncation order")
    p.add_argument("--vars", type=_positive, default=4, help="star suite: variables")
    _common(p)

    p = sub.add_parser("poisson", help="Poisson bivector tools")
    psub = p.add_subparsers(dest="action", required=True)
    q = psub.add_parser("jacobi", help="check the Jacobi identity of a bivector")
    q.add_argument("bivector")
    _common(q, window=False)

    p = sub.add_parser("star", help="Moyal-type star products")
    psub = p.add_subparsers(dest="action", required=True)
    q = psub.add_parser("verify", help="associativity modulo h^(order+1)")
    q.add_argument("--order", type=int, default=4)
    q.add_argument("--vars", type=_positive, default=4)
    q.add_argument("--trials", "-T", type=_positive, default=100)
    q.add_argument("--seed", "-S", type=int, default=0)
    _common(q, window=False)
    return ap


def _status(checks):
    return "fail" if any(c["status"] == "fail" for c in checks) else "pass"


def _algebras(paths):
    if not paths:
        return {name: load_fixture_algebra(name) for name in ALGEBRAS}
    return {path: load_algebra(path) for path in paths}


# -- commands --------------------------------------------------------------------

def cmd_validate(args):
    A = load_algebra(args.algebra)
    problems = validate(A)
    checks = [{"name": "algebra axioms", "status": "fail" if problems else "pass"}]
    if problems:
        checks[0]["witness"] = problems
    return {"algebra": A.name or args.algebra, "dim": A.dim, "checks": checks}


def cmd_cohomology(args):
    A = load_algebra(args.algebra)
    N = args.N
    report = {"algebra": A.name or args.algebra, "dim": A.dim, "max_degree": N,
              "H": cohomology_dims(A, N + 1, args.bound)}
    checks = []
    if args.hodge:
        bc = Bicomplex(A, args.bound)
        hpq = hodge_cohomology_dims(A, N + 1, args.bound, bc)
        report["Hpq"] = [{"p": p, "q": q, "dim": d} for (p, q), d in sorted(hpq.items())]
        sums = [sum(d for (p, q), d in hpq.items() if p + q == n) for n in range(N + 1)]
        bad = [n for n in range(N + 1) if sums[n] != report["H"][n]]
        checks.append({"name": "sum_(p+q=n) H^(p,q) = H^n", "status": "fail" if bad else "pass"})
        if bad:
            checks[-1]["witness"] = {"degrees": bad, "sums": sums}
        report["first_page_first"] = first_page_first_filtration(A, N + 1, args.bound, bc)
        report["first_page_second"] = first_page_second_filtration(A, N + 1, args.bound, bc)
        if N + 1 >= 3:
            report["total"] = total_z2_cohomology(A, N + 1, args.bound, bc)
            report["smooth_collapse"] = smooth_collapse_check(A, N + 1, args.bound)
    report["checks"] = checks
    return report


def cmd_verify(args):
    if args.suite == "star":
        order = args.N if args.order is None else args.order
        checks = suite_star(order, args.vars, args.trials, args.seed)
        return {"suite": "star", "seed": args.seed, "order": order, "vars": args.vars,
                "trials": args.trials, "checks": checks}
    if args.suite == "schouten":
        bivs = ({p: load_bivector(p) for p in args.inputs} if args.inputs
                else default_bivectors(args.seed))
        checks = run_suite("schouten", trials=args.trials, seed=args.seed, bivectors=bivs)
    else:
        checks = run_suite(args.suite, _algebras(args.inputs), args.N, args.trials, args.seed,
                           args.bound)
    return {"suite": args.suite, "seed": args.seed, "max_degree": args.N,
            "trials": args.trials, "checks": checks}


def cmd_poisson(args):
    g = load_bivector(args.bivector)
    if g.degree != 2:
        raise FormatError(f"{args.bivector}: expected a bivector, got degree {g.degree}")
    ok, witness = is_poisson(g)
    check = {"name": "Jacobi identity", "status": "pass" if ok else "fail"}
    if not ok:
        check["witness"] = witness
    return {"bivector": args.bivector, "n_vars": g.n_vars, "checks": [check]}


def cmd_star(args):
    if args.order < 0:
        raise FormatError("--order must be >= 0")
    checks = suite_star(args.order, args.vars, args.trials, args.seed)
    return {"seed": args.seed, "order": args.order, "vars": args.vars, "trials": args.trials,
            "checks": checks}


COMMANDS = {
    "validate": cmd_validate,
    "cohomology": cmd_cohomology,
    "verify": cmd_verify,
    "poisson": cmd_poisson,
    "star": cmd_star,
}


def _render_text(report):
    lines = [f"hhw {' '.join(report['command'])}"]
    for key in ("algebra", "suite", "seed", "H"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    if "Hpq" in report:
        lines.append("H^(p,q): " + ", ".join(f"({e['p']},{e['q']})={e['dim']}"
                                             for e in report["Hpq"]))
    if "total" in report:
        t = report["total"]
        lines.append(f"total Z/2 window: even={t.dims_even} odd={t.dims_odd} "
                     f"(degrees t <= {t.interior_valid_upto})")
    if "smooth_collapse" in report:
        lines.append(f"smooth collapse: {report['smooth_collapse']['status']}")
    for c in report["checks"]:
        lines.append(f"{c['status'].upper():7} {c['name']}")
        if c["status"] == "fail" and "witness" in c:
            lines.append("        witness: " + json.dumps(to_jsonable(c["witness"]), sort_keys=True))
    lines.append(f"status: {report['status']}")
    if "timing" in report:
        lines.append(f"time: {report['timing']['milliseconds']} ms")
    return "\n".join(lines)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    key = args.command
    start = time.perf_counter()
    try:
        report = COMMANDS[key](args)
    except FormatError as e:
        print(f"hhw: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceBoundError as e:
        print(f"hhw: resource bound exceeded at (m, n) = ({e.m}, {e.n}): {e}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as e:
        print(f"hhw: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    report = {"command": argv, **report, "status": _status(report["checks"])}
    if not args.no_timing:
        report["timing"] = {"milliseconds": int(1000 * (time.perf_counter() - start))}
    if args.format == "json":
        print(dumps(report))
    else:
        print(_render_text(report))
    return EXIT_FAIL if report["status"] == "fail" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
