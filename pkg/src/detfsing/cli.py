"""Batch command-line front end.

Subcommands: `gen` prints constructed objects in the polynomial grammar,
`check` runs a single named check, `verify` runs identity checks or the full
suite, `lattice` explores compatible ideals.  Reports go to stdout as
line-delimited JSON (--json) or text blocks; diagnostics go to stderr.

Exit codes: 0 all pass, 1 at least one fail, 3 inconclusive only, 2 usage.
"""

from __future__ import annotations

import argparse
import os
import sys

from .determinantal import (
    DetContext,
    gamma_minors,
    generic_matrix,
    minors_ideal,
    splitting_delta_of,
)
from .errors import (
    BudgetExceeded,
    KernelError,
    PreconditionViolated,
    SeedIncompatible,
    UsageError,
)
from .frobenius import PhiMap
from .groebner import Budget, DEFAULT_MAX_GB_STEPS, DEFAULT_MAX_SECONDS
from .lattice import compatible_closure, lattice_export
from .ring import is_prime
from .verify import (
    CHECKS,
    default_grid,
    run_suite,
    validate_request,
    worst_verdict,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

GEN_KINDS = ("matrix", "minors", "divisor", "delta", "gamma")
CHECK_KINDS = ("split", "compat", "fedder", "freg", "pure-freg", "dim")
VERIFY_KINDS = ("suite", "rowdec", "gammadec", "local", "sylvester",
                "extension", "reduction")


def _add_common(sp):
    sp.add_argument("--json", action="store_true", help="line-delimited JSON output")
    sp.add_argument("--max-gb-steps", type=int, default=None,
                    help="reduction-step cap per check (env DETF_MAX_GB_STEPS)")
    sp.add_argument("--max-seconds", type=float, default=None,
                    help="wall-clock cap per check (env DETF_MAX_SECONDS)")


def _add_params(sp, *names):
    metav = {"m": "M", "n": "N", "t": "T", "s": "S", "r": "R", "k": "K"}
    for name in names:
        if name == "p":
            sp.add_argument("-p", "--p", dest="p", type=int, default=2,
                            help="prime modulus")
        elif name == "e_max":
            sp.add_argument("--e-max", dest="e_max", type=int, default=None,
                            help="largest Frobenius iterate to sweep")
        else:
            sp.add_argument(f"--{name}", type=int, default=None, metavar=metav.get(name, name))
    return sp


def build_parser():
    ap = argparse.ArgumentParser(
        prog="detfsing",
        description="Determinantal Frobenius-splitting workbench over F_p",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print constructed objects")
    g.add_argument("what", choices=GEN_KINDS)
    _add_params(g, "m", "n", "t", "p")
    g.add_argument("--order", default="grevlex",
                   choices=("grevlex", "lex", "diaglex"), help="term order")
    _add_common(g)

    c = sub.add_parser("check", help="run one named check")
    c.add_argument("what", choices=CHECK_KINDS)
    _add_params(c, "m", "n", "t", "p", "e_max")
    _add_common(c)

    v = sub.add_parser("verify", help="run identity checks or the suite")
    v.add_argument("what", choices=VERIFY_KINDS)
    _add_params(v, "m", "n", "t", "s", "r", "k", "p", "e_max")
    v.add_argument("--cols-added", type=int, default=1)
    v.add_argument("--block", choices=("w", "z", "xprime"), default=None)
    v.add_argument("--i", type=int, default=1, help="row inside the block")
    v.add_argument("--j", type=int, default=1, help="column inside the block")
    v.add_argument("--checks", default=None,
                   help="comma-separated check ids to keep from the suite grid")
    v.add_argument("--workers", type=int, default=1, help="suite parallelism")
    v.add_argument("--figures", default=None, metavar="DIR",
                   help="write matplotlib figures next to the reports")
    _add_common(v)

    l = sub.add_parser("lattice", help="explore compatible ideals")
    _add_params(l, "m", "n", "t", "p")
    l.add_argument("--node-cap", type=int, default=512)
    l.add_argument("--figures", default=None, metavar="DIR")
    _add_common(l)
    return ap


def _budget(args):
    steps = args.max_gb_steps
    if steps is None:
        steps = int(os.environ.get("DETF_MAX_GB_STEPS", DEFAULT_MAX_GB_STEPS))
    seconds = args.max_seconds
    if seconds is None:
        seconds = float(os.environ.get("DETF_MAX_SECONDS", DEFAULT_MAX_SECONDS))
    if steps <= 0 or seconds <= 0:
        raise UsageError("budget caps must be positive")
    return Budget(max_steps=steps, max_seconds=seconds)


def _require(args, *names):
    vals = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")
        vals.append(v)
    return vals


def _check_spec_params(args, need_t=True):
    m, n = _require(args, "m", "n")
    t = args.t
    if need_t:
        (t,) = _require(args, "t")
    for name, v in (("m", m), ("n", n)) + ((("t", t),) if need_t else ()):
        if v < 1:
            raise UsageError(f"--{name} must be positive")
    if not is_prime(args.p):
        raise UsageError(f"-p {args.p} is not prime")
    return m, n, t


def _emit(reports, as_json, out=None):
    out = out if out is not None else sys.stdout
    for r in reports:
        if as_json:
            out.write(r.to_json() + "\n")
        else:
            out.write(r.text_block() + "\n")
    out.flush()


def _exit_code(reports):
    v = worst_verdict(reports)
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[v]


def _cmd_gen(args):
    import json as _json

    m, n, _ = _check_spec_params(args, need_t=args.what in ("minors", "divisor"))
    M = generic_matrix(m, n, args.p, args.order)
    if args.what == "matrix":
        payload = [[str(M[i, j]) for j in range(n)] for i in range(m)]
        if args.json:
            print(_json.dumps({"rows": m, "cols": n, "entries": payload}, sort_keys=True))
        else:
            for row in payload:
                print(" ".join(row))
        return EXIT_PASS
    if args.what == "minors":
        polys = [str(g) for g in minors_ideal(M, args.t).gens]
    elif args.what == "divisor":
        if args.t < 2:
            raise UsageError("the divisor ideal needs --t at least 2")
        ctx = DetContext((m, n, args.t), args.p, args.order)
        polys = [str(g) for g in ctx.divisor.gens]
    elif args.what == "delta":
        polys = [str(splitting_delta_of(M))]
    else:  # gamma
        if m > n:
            raise UsageError("gamma minors need --m at most --n")
        polys = [str(g) for g in gamma_minors(M)]
    if args.json:
        print(_json.dumps({"polys": polys}, sort_keys=True))
    else:
        for s in polys:
            print(s)
    return EXIT_PASS


def _cmd_check(args):
    budget = _budget(args)
    m, n, t = _check_spec_params(args)
    req = {"check": args.what, "m": m, "n": n, "t": t}
    fn, _, optional = CHECKS[args.what]
    if "p" in CHECKS[args.what][1] or "p" in optional:
        req["p"] = args.p
    if args.e_max is not None:
        if "e_max" not in optional:
            raise UsageError(f"check {args.what!r} takes no --e-max")
        req["e_max"] = args.e_max
    fn, kwargs = validate_request(req)
    reports = [fn(**kwargs, budget=budget)]
    _emit(reports, args.json)
    return _exit_code(reports)


def _cmd_verify(args):
    budget = _budget(args)
    if args.what == "suite":
        grid = default_grid()
        if args.checks:
            keep = {c.strip() for c in args.checks.split(",") if c.strip()}
            unknown = keep - set(CHECKS)
            if unknown:
                raise UsageError(f"unknown check ids {sorted(unknown)}")
            grid = [g for g in grid if g["check"] in keep]
        reports = run_suite(grid, budget=budget, workers=max(1, args.workers))
        _emit(reports, args.json)
        if args.figures:
            from .figures import save_suite_figure

            path = save_suite_figure(reports, os.path.join(args.figures, "suite.png"))
            print(f"figure: {path}", file=sys.stderr)
        return _exit_code(reports)

    if args.what == "reduction":
        if args.block is None:
            raise UsageError("--block {w,z,xprime} is required")
        m, t, s = _require(args, "m", "t", "s")
        req = {"check": "reduction", "m": m, "t": t, "s": s,
               "block": args.block, "entry": [args.i, args.j], "p": args.p}
    elif args.what == "gammadec":
        r, n = _require(args, "r", "n")
        req = {"check": "gammadec", "r": r, "n": n, "p": args.p}
    elif args.what == "sylvester":
        m, n, t, k = _require(args, "m", "n", "t", "k")
        req = {"check": "sylvester", "m": m, "n": n, "t": t, "k": k, "p": args.p}
    elif args.what == "extension":
        m, n, t = _require(args, "m", "n", "t")
        req = {"check": "extension", "m": m, "n": n, "t": t,
               "cols_added": args.cols_added, "p": args.p}
    elif args.what == "local":
        m, n, t = _require(args, "m", "n", "t")
        req = {"check": "local", "m": m, "n": n, "t": t, "p": args.p}
    else:  # rowdec
        m, n, t = _require(args, "m", "n", "t")
        req = {"check": "rowdec", "m": m, "n": n, "t": t, "p": args.p}
    fn, kwargs = validate_request(req)
    reports = [fn(**kwargs, budget=budget)]
    _emit(reports, args.json)
    return _exit_code(reports)


def _cmd_lattice(args):
    budget = _budget(args)
    m, n, t = _check_spec_params(args)
    if t < 2:
        raise UsageError("the lattice seeds need --t at least 2")
    ctx = DetContext((m, n, t), args.p)
    phi = PhiMap(ctx.delta() ** (args.p - 1), 1)
    lat = compatible_closure(
        phi, [ctx.presentation, ctx.divisor], node_cap=args.node_cap, budget=budget
    )
    text = lattice_export(lat)
    if args.json:
        print(text.splitlines()[-1])
    else:
        print(text)
    if args.figures:
        from .figures import save_lattice_figure

        path = save_lattice_figure(lat, os.path.join(args.figures, "lattice.png"))
        print(f"figure: {path}", file=sys.stderr)
    return EXIT_INCONCLUSIVE if lat.capped else EXIT_PASS


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_lattice(args)
    except (UsageError, KernelError, PreconditionViolated) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(ap.format_usage().rstrip(), file=sys.stderr)
        return EXIT_USAGE
    except SeedIncompatible as exc:
        print(f"seed rejected: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
