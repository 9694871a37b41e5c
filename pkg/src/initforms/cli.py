"""``initforms`` command line.

stdout carries exactly one JSON document per invocation (compact, sorted
keys, rationals as "p/q" strings); diagnostics go to stderr, controlled by
INITFORMS_LOG=debug|info. Exit codes: 0 verified/success, 1 failed,
2 hypothesis fails, 3 input or validation error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional

from . import errors
from .actions import (
    LND,
    AutomorphismPair,
    is_invariant,
    lnd_exp,
    make_coaction,
    stable_invariant_witness,
)
from .fuzz import SUITES, run_suite
from .newton import check_monomial_criterion, hull_vertices, intruders
from .poly import AlgebraHom, exact_divide, parse_many, parse_poly
from .reports import EXIT_CODES, Report, Status, jsonify
from .theorems import (
    build_twist,
    build_u,
    check_coords_instance,
    check_initial_compat,
    check_initial_membership,
    check_no_intruder_stable,
    check_stable_coordinate,
    check_star,
    find_nondividing,
)
from .weights import MINUS_INFINITY, Weight, initial_form, wdeg

SCHEMA = "1"
log = logging.getLogger("initforms")


class JobError(errors.InitformsError, ValueError):
    """Malformed job payload."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def emit(payload: dict, status: Status = Status.VERIFIED) -> int:
    payload = dict(payload)
    payload["schema"] = SCHEMA
    print(dumps(payload))
    return EXIT_CODES[status]


# -- payload decoding ---------------------------------------------------------


def _load_json(text: str):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobError(f"invalid JSON at position {exc.pos}: {exc.msg}") from exc


def parse_weight(value) -> Weight:
    if isinstance(value, str):
        value = _load_json(value)
    if not isinstance(value, list) or not value:
        raise JobError("a weight is a non-empty list")
    try:
        return Weight.of(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, errors.InitformsError):
            raise
        raise JobError(f"bad weight entry: {exc}") from exc


def _need(job, key):
    if key not in job:
        raise JobError(f"job is missing {key!r}")
    return job[key]


def parse_hom(desc, allow_z: bool) -> AlgebraHom:
    m = _need(desc, "m")
    images = _need(desc, "images")
    return AlgebraHom.from_images(parse_many(images, m, allow_z=allow_z))


def parse_action(desc):
    if "d" in desc:
        return lnd_exp(parse_lnd(desc))
    m = _need(desc, "m")
    return make_coaction(parse_many(_need(desc, "images"), m, allow_z=True))


def parse_lnd(desc) -> LND:
    m = _need(desc, "m")
    cap = desc.get("cap")
    images = parse_many(_need(desc, "d"), m)
    return LND(images) if cap is None else LND(images, cap=cap)


def parse_ap(desc) -> AutomorphismPair:
    m = _need(desc, "m")
    return AutomorphismPair(tuple(parse_many(_need(desc, "F"), m)), tuple(parse_many(_need(desc, "G"), m)))


# -- theorem jobs -------------------------------------------------------------


def _job_prop23(job):
    t = build_twist(parse_hom(_need(job, "psi"), False), parse_weight(_need(job, "u")))
    report = check_initial_compat(t, parse_poly(_need(job, "f"), t.n))
    report.details["u_psi"] = t.u_psi
    return report


def _job_thm24i(job):
    t = build_twist(parse_hom(_need(job, "psi"), False), parse_weight(_need(job, "u")))
    return check_initial_membership(t, int(_need(job, "l")), parse_poly(_need(job, "f"), t.n))


def _job_star(job):
    phi = parse_hom(_need(job, "phi"), True)
    return check_star(phi, parse_weight(_need(job, "v")), parse_weight(_need(job, "w")))


def _job_build_u(job):
    phi = parse_hom(_need(job, "phi"), True)
    try:
        data = build_u(phi, parse_weight(_need(job, "v")), parse_weight(_need(job, "w")))
    except errors.StarFails as exc:
        return Report(Status.HYPOTHESIS_FAILS, reason=f"star_{exc.clause}")
    details = {
        "deg_v_phi": data.deg_v_phi,
        "u": data.u,
        "phi_u": list(data.phi_u),
        "maximizers": [[i + 1, j] for i, j in data.maximizers],
        "degrees_match": data.degrees_match,
        "z_monomial_present": data.z_monomial_present,
        "independent": data.independent,
    }
    if data.postconditions_hold:
        return Report(Status.VERIFIED, witness=data.u, details=details)
    return Report(Status.FAILED, reason="theorem_violated", details=details)


def _job_thm12(job):
    w = parse_weight(_need(job, "w"))
    if "phi" in job:
        phi = parse_hom(job["phi"], True)
        v = parse_weight(job["v"]) if "v" in job else None
    else:
        action = parse_action(_need(job, "action"))
        phi = action.restrict(int(_need(job, "n")))
        v = None
    n = phi.src_nvars
    S = parse_many(_need(job, "S"), n)
    fs = parse_many(_need(job, "fs"), n)
    return find_nondividing(phi, S, fs, w, v)


def _job_thm11(job):
    action = parse_action(_need(job, "action"))
    n = int(_need(job, "n"))
    f = parse_poly(_need(job, "f"), n)
    try:
        return check_no_intruder_stable(f, action, n)
    except errors.WitnessInvalid as exc:
        return Report(Status.HYPOTHESIS_FAILS, reason="witness_invalid", details={"message": str(exc)})


def _job_thm14(job):
    ap = parse_ap(_need(job, "ap"))
    n = int(_need(job, "n"))
    w = parse_weight(_need(job, "w"))
    S = parse_many(_need(job, "S"), n)
    if "fs" in job:
        return check_coords_instance(ap, n, S, w, parse_many(job["fs"], n))
    return check_stable_coordinate(ap, n, S, w)


JOBS = {
    "prop23": _job_prop23,
    "thm24i": _job_thm24i,
    "star": _job_star,
    "build_u": _job_build_u,
    "thm12": _job_thm12,
    "thm11": _job_thm11,
    "thm14": _job_thm14,
}


def run_theorem_job(job: dict) -> tuple:
    """Return (report JSON, exit code) for one job payload."""
    if not isinstance(job, dict):
        raise JobError("a job is a JSON object")
    check = _need(job, "check")
    if check not in JOBS:
        raise JobError(f"unknown check {check!r}; expected one of {sorted(JOBS)}")
    log.debug("running job %s", check)
    try:
        report = JOBS[check](job)
    except errors.HypothesisFails as exc:
        report = Report(Status.HYPOTHESIS_FAILS, reason="hypothesis_fails", details={"message": str(exc)})
    out = report.to_json()
    out["check"] = check
    out["reproducer"] = job
    return out, EXIT_CODES[report.status]


# -- subcommands --------------------------------------------------------------


def cmd_poly(args):
    if args.op == "parse":
        p = parse_poly(args.exprs[0], args.nvars, allow_z=args.z)
        return emit({"poly": str(p), "nvars": p.nvars})
    if len(args.exprs) != 2:
        raise JobError(f"poly {args.op} takes two expressions")
    a, b = parse_many(args.exprs, args.nvars)
    if args.op == "mul":
        return emit({"product": str(a * b)})
    q = exact_divide(a, b)
    return emit({"divides": q is not None, "quotient": None if q is None else str(q)})


def cmd_initform(args):
    w = parse_weight(args.w)
    f = parse_poly(args.expr, args.nvars if args.nvars else w.nvars)
    d = wdeg(f, w)
    return emit({"deg": None if d is MINUS_INFINITY else jsonify(d), "initial": str(initial_form(f, w))})


def cmd_newton(args):
    f = parse_poly(args.expr, args.nvars)
    if args.op == "vertices":
        if f.is_zero():
            raise errors.ZeroPolynomial("the zero polynomial has no Newton polytope")
        certs = hull_vertices(f.support())
        return emit(
            {
                "vertices": [list(c.vertex) for c in certs],
                "intruders": [list(c.vertex) for c in certs if all(c.vertex)],
                "certificates": [c.to_json() for c in certs],
            }
        )
    if args.op == "intruders":
        return emit({"intruders": [list(v) for v in intruders(f)]})
    report = check_monomial_criterion(f)
    return emit(report.to_json(), report.status)


def cmd_action(args):
    if args.op == "exp":
        action = lnd_exp(parse_lnd(_load_json(args.lnd)))
        return emit({"status": "verified", "images": [str(g) for g in action.images]})
    desc = _load_json(args.action)
    if args.op == "validate":
        try:
            action = parse_action(desc)
        except errors.CounitFails as exc:
            return emit({"status": "failed", "reason": "counit", "index": exc.index + 1}, Status.FAILED)
        except errors.CoassocFails as exc:
            return emit(
                {"status": "failed", "reason": "coassociativity", "index": exc.index + 1,
                 "lhs": str(exc.lhs), "rhs": str(exc.rhs)},
                Status.FAILED,
            )
        return emit({"status": "verified", "trivial": action.is_trivial(),
                     "images": [str(g) for g in action.images]})
    action = parse_action(desc)
    if args.op == "invariant":
        f = parse_poly(args.expr, action.m)
        inv = is_invariant(action, f)
        return emit({"invariant": inv, "image": str(action.apply(f))})
    if args.n is None:
        raise JobError("stable-witness needs --n")
    report = stable_invariant_witness(action, parse_poly(args.expr, args.n), args.n)
    return emit(report.to_json(), report.status)


def cmd_theorem(args):
    if args.job == "-":
        job = json.load(sys.stdin)
    else:
        with open(args.job, encoding="utf-8") as fh:
            job = json.load(fh)
    out, code = run_theorem_job(job)
    out["schema"] = SCHEMA
    print(dumps(out))
    return code


def cmd_fuzz(args):
    if args.suite not in SUITES:
        raise JobError(f"unknown suite {args.suite!r}; expected one of {sorted(SUITES)}")
    summary = run_suite(args.suite, args.seed, args.count)
    return emit(summary, Status.FAILED if summary["failed_instances"] else Status.VERIFIED)


class _ArgParser(argparse.ArgumentParser):
    # argparse's own exit code 2 would read as "hypothesis fails"
    def error(self, message):
        raise JobError(message)


def build_parser():
    parser = _ArgParser(prog="initforms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="parse, multiply, divide")
    p.add_argument("op", choices=["parse", "mul", "divides"])
    p.add_argument("exprs", nargs="+")
    p.add_argument("--nvars", type=int)
    p.add_argument("--z", action="store_true", help="allow the coaction variable z")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("initform", help="weighted degree and initial form")
    p.add_argument("expr")
    p.add_argument("--w", required=True, help='weight literal, e.g. "[[1],[1]]"')
    p.add_argument("--nvars", type=int)
    p.set_defaults(func=cmd_initform)

    p = sub.add_parser("newton", help="Newton polytope vertices and intruders")
    p.add_argument("op", choices=["vertices", "intruders", "criterion"])
    p.add_argument("expr")
    p.add_argument("--nvars", type=int)
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("action", help="Ga-actions")
    p.add_argument("op", choices=["validate", "exp", "invariant", "stable-witness"])
    p.add_argument("expr", nargs="?")
    p.add_argument("--action", help="action descriptor JSON (or @file)")
    p.add_argument("--lnd", help="LND descriptor JSON (or @file)")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_action)

    p = sub.add_parser("theorem", help="run a theorem-check job")
    p.add_argument("--job", required=True, help="job file, or - for stdin")
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("fuzz", help="seeded property suites")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=cmd_fuzz)
    return parser


def _check_args(args):
    if args.command == "action":
        if args.op == "exp" and not args.lnd:
            raise JobError("action exp needs --lnd")
        if args.op != "exp" and not args.action:
            raise JobError(f"action {args.op} needs --action")
        if args.op in ("invariant", "stable-witness") and args.expr is None:
            raise JobError(f"action {args.op} needs a polynomial")


def main(argv: Optional[list] = None) -> int:
    level = os.environ.get("INITFORMS_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        _check_args(args)
        return args.func(args)
    except (errors.InitformsError, json.JSONDecodeError, OSError) as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        print(dumps({"schema": SCHEMA, "status": "error", "error": type(exc).__name__, "message": str(exc)}))
        return EXIT_CODES[Status.ERROR]


if __name__ == "__main__":
    sys.exit(main())
