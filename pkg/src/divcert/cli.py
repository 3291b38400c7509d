"""Command-line interface.

Subcommands expose the library operations over JSON files; all numeric
output carries both the exact rational and a 12-significant-digit
decimal.  Exit codes follow one contract everywhere: 0 when the queried
relation holds or the operation succeeds, 1 when a relation or
precondition fails (the report says why), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import demo, serialize
from .certify import (
    CertificationError,
    MeansDifferError,
    SsdViolatedError,
    certify_div1,
    decompose_ssd,
    lift_delta_gamma,
    mps_coupling,
)
from .dist import GridCapError, as_rational, common_refinement, mixture, quantize_values
from .dominance import (
    check_majorization,
    fsd_violation,
    verify_div1_certificate,
    verify_div2_instance,
)
from .risk import expected_shortfall, ssd_gap, ssd_violation
from .serialize import decimal_str, dumps, load_dist, rational_obj, rational_str
from .transport import kantorovich, kantorovich_cdf

OK, FAIL, ERROR = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out:
        serialize.save_text(out, text)
    else:
        sys.stdout.write(text)


def _scalar_line(x: Fraction) -> str:
    return f"{rational_str(x)} ({decimal_str(x)})\n"


def cmd_check(args) -> int:
    a = load_dist(args.input_a)
    b = load_dist(args.input_b)
    report = {
        "relation": args.relation,
        "mean_a": rational_obj(a.mean()),
        "mean_b": rational_obj(b.mean()),
    }
    if args.relation == "fsd":
        witness = fsd_violation(a, b)
        report["holds"] = witness is None
        if witness is not None:
            report["witness"] = {"cdf_crossing_above": rational_obj(witness)}
    elif args.relation == "ssd":
        gap = ssd_gap(a, b)
        witness = ssd_violation(a, b)
        report["gap"] = rational_obj(gap)
        report["holds"] = witness is None
        if witness is not None:
            report["witness"] = {"alpha": rational_obj(witness)}
    else:  # majorization, on the common uniform refinement
        ga, gb = common_refinement(a, b)
        result = check_majorization(ga, gb)
        report["grid_size"] = ga.n
        report["holds"] = result.holds
        if not result:
            report["witness"] = {"prefix_index": result.witness}
    _emit(dumps(report), args.out)
    return OK if report["holds"] else FAIL


def cmd_es(args) -> int:
    d = load_dist(args.input)
    value = expected_shortfall(d, as_rational(args.alpha))
    _emit(_scalar_line(value), args.out)
    return OK


def cmd_kantorovich(args) -> int:
    a = load_dist(args.input_a)
    b = load_dist(args.input_b)
    quantile_form = kantorovich(a, b)
    cdf_form = kantorovich_cdf(a, b)
    if quantile_form != cdf_form:
        raise AssertionError("the two transport representations disagree")
    _emit(_scalar_line(quantile_form), args.out)
    return OK


def cmd_certify(args) -> int:
    xi = load_dist(args.input_xi)
    eta = load_dist(args.input_eta)
    try:
        cert, joint = certify_div1(xi, eta)
        coupling = mps_coupling(xi, eta)
    except MeansDifferError as exc:
        _emit(dumps({"certified": False, "reason": "means differ",
                     "mean_xi": rational_obj(exc.mean_xi),
                     "mean_eta": rational_obj(exc.mean_eta)}), args.out)
        return FAIL
    except SsdViolatedError as exc:
        _emit(dumps({"certified": False,
                     "reason": f"ssd violated at alpha={rational_str(exc.alpha)}",
                     "alpha": rational_obj(exc.alpha)}), args.out)
        return FAIL
    if not verify_div1_certificate(xi, eta, cert):
        raise AssertionError("constructed certificate failed self-verification")
    if not verify_div2_instance(xi, eta, joint, cert.weights):
        raise AssertionError("witnessing joint law failed self-verification")
    payload = {
        "certified": True,
        **serialize.certificate_to_obj(cert),
        "joint": serialize.joint_to_obj(joint),
        "coupling": serialize.coupling_to_obj(coupling),
    }
    _emit(dumps(payload), args.out)
    return OK


def cmd_mps(args) -> int:
    xi = load_dist(args.input_xi)
    eta = load_dist(args.input_eta)
    try:
        coupling = mps_coupling(xi, eta)
    except CertificationError as exc:
        _emit(dumps({"certified": False, "reason": str(exc)}), args.out)
        return FAIL
    _emit(dumps(serialize.coupling_to_obj(coupling)), args.out)
    return OK


def cmd_lift(args) -> int:
    xi = load_dist(args.input_xi)
    eta = load_dist(args.input_eta)
    result = lift_delta_gamma(xi, eta)
    payload = serialize.lift_to_obj(result)
    payload["gap"] = rational_obj(ssd_gap(xi, eta))
    _emit(dumps(payload), args.out)
    return OK


def cmd_decompose(args) -> int:
    xi = load_dist(args.input_xi)
    eta = load_dist(args.input_eta)
    try:
        result = decompose_ssd(xi, eta)
    except SsdViolatedError as exc:
        _emit(dumps({"decomposed": False,
                     "reason": f"ssd violated at alpha={rational_str(exc.alpha)}"}),
              args.out)
        return FAIL
    payload = {
        "decomposed": True,
        "c": None if result.c is None else rational_obj(result.c),
        "zeta": serialize.dist_to_obj(result.zeta),
    }
    _emit(dumps(payload), args.out)
    return OK


def cmd_mix(args) -> int:
    ds = [load_dist(path) for path in args.inputs]
    weights = [as_rational(w) for w in args.weights.split(",")]
    _emit(dumps(serialize.dist_to_obj(mixture(ds, weights))), args.out)
    return OK


def cmd_quantize(args) -> int:
    d = load_dist(args.input)
    _emit(dumps(serialize.dist_to_obj(quantize_values(d, args.denominator))), args.out)
    return OK


def cmd_demo_lln(args) -> int:
    rows = demo.lln_table(args.max_doublings, as_rational(args.alpha),
                          args.grid, args.seed)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "es", "es_decimal", "kappa", "kappa_decimal"])
    for row in rows:
        writer.writerow([row.n, rational_str(row.es), decimal_str(row.es),
                         rational_str(row.kappa), decimal_str(row.kappa)])
    _emit(buf.getvalue(), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divcert",
        description="Exact dominance tests, Expected Shortfall and "
        "diversification certificates for finite distributions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a dominance relation between two distributions")
    p.add_argument("relation", choices=["fsd", "ssd", "majorization"])
    p.add_argument("input_a")
    p.add_argument("input_b")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("es", help="Expected Shortfall at a level")
    p.add_argument("input")
    p.add_argument("--alpha", required=True, help="level in (0,1], e.g. 1/20 or 0.05")
    p.add_argument("--out")
    p.set_defaults(func=cmd_es)

    p = sub.add_parser("kantorovich", help="transport distance between two distributions")
    p.add_argument("input_a")
    p.add_argument("input_b")
    p.add_argument("--out")
    p.set_defaults(func=cmd_kantorovich)

    p = sub.add_parser("certify", help="build a diversification certificate")
    p.add_argument("input_xi")
    p.add_argument("input_eta")
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("mps", help="martingale coupling witnessing a mean-preserving spread")
    p.add_argument("input_xi")
    p.add_argument("input_eta")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mps)

    p = sub.add_parser("lift", help="lift an arbitrary pair to a certified one")
    p.add_argument("input_xi")
    p.add_argument("input_eta")
    p.add_argument("--out")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("decompose", help="split second-order dominance into "
                       "a first-order step and an equal-means step")
    p.add_argument("input_xi")
    p.add_argument("input_eta")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("mix", help="probabilistic mixture of distributions")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--weights", required=True, help="comma-separated rationals summing to 1")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mix)

    p = sub.add_parser("quantize", help="round values to a 1/q lattice")
    p.add_argument("input")
    p.add_argument("--denominator", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_quantize)

    p = sub.add_parser("demo-lln", help="law-of-large-numbers contraction table (CSV)")
    p.add_argument("--max-doublings", type=int, default=6)
    p.add_argument("--alpha", default="1/20")
    p.add_argument("--grid", type=int, default=1024)
    p.add_argument("--seed", type=int, default=None,
                   help="switch to seeded sampling instead of the deterministic grid")
    p.add_argument("--out")
    p.set_defaults(func=cmd_demo_lln)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, ValueError, GridCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
