"""Command-line interface: verification suites, extremal searches, series
expansions, closed-form maxima and membership checks.

Every subcommand prints a human-readable summary and emits a JSON
document (to stdout, or to ``--output``).  Exit codes: 0 on success,
1 when a verification or membership check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .bounds import YArgs, global_search, y_closed, y_oracle
from .hankel import h21_log, log_coeffs_series
from .lune import (LuneClass, MAX_MEMBERSHIP_RADIUS, extremal_g, extremal_h,
                   koebe, membership_check, q_series)
from .series import DEFAULT_ORDER
from .verify import VerifyConfig, run_verification

#: Reference expansions printed alongside observed coefficients, where a
#: closed form is known.  Keys are coefficient indices.
_SQ = math.sqrt(69.0) / (4.0 * math.sqrt(17.0))
_REFERENCE_COEFFS = {
    "g": {2: 0.0, 3: 0.5, 4: 0.0, 5: 0.25},
    "h0": {2: 0.0, 3: _SQ, 4: 0.0, 5: (69.0 / 136.0 + _SQ) / 4.0},
    "h": {2: 0.0, 3: _SQ / 3.0, 4: 0.0, 5: (69.0 / 136.0 + _SQ) / 20.0},
    "q": {0: 1.0, 1: 1.0, 2: 0.5, 3: 0.0, 4: -0.125},
    "koebe": {},
}


def _series_by_name(name: str, order: int):
    if name == "g":
        return extremal_g(order)
    if name == "h0":
        return extremal_h(order)[0]
    if name == "h":
        return extremal_h(order)[1]
    if name == "q":
        return q_series(order)
    if name == "koebe":
        return koebe(order)
    raise KeyError(name)


def _emit(doc: dict, output: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_config(args) -> VerifyConfig:
    """Flag > config file > defaults."""
    data = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            data.update(json.load(fh))
    for key in ("order", "tau1_steps", "tau2_radial", "tau2_angular",
                "refine_depth", "seed"):
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    return VerifyConfig.from_dict(data)


def _cmd_verify(args) -> int:
    cfg = _load_config(args)
    report = run_verification(cfg)
    width = max(len(c.check_id) for c in report.checks)
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.check_id:<{width}}  expected={c.expected:< .12g} "
              f"observed={c.observed:< .12g} tol={c.tolerance:.0e}")
    print(f"{'OVERALL PASS' if report.passed else 'OVERALL FAIL'} "
          f"({len(report.checks)} checks, {report.runtime_seconds:.1f}s)")
    if args.output:
        _emit(report.to_dict(), args.output)
    elif args.json:
        _emit(report.to_dict(), None)
    return 0 if report.passed else 1


def _cmd_search(args) -> int:
    cfg = _load_config(args)
    report = global_search(LuneClass(args.lune_class),
                           tau1_steps=cfg.tau1_steps,
                           tau2_radial=cfg.tau2_radial,
                           tau2_angular=cfg.tau2_angular,
                           refine_depth=cfg.refine_depth)
    print(f"sup |H_2,1| over lune-{args.lune_class}: {report.sup_found:.12g}")
    print(f"theoretical bound: {report.theoretical_bound:.12g} "
          f"(gap {report.gap:.3e})")
    a = report.argmax
    print(f"argmax: tau1={a.tau1:.6g} tau2={a.tau2:.6g} tau3={a.tau3:.6g}")
    print(f"branch at argmax: {report.branch_trace}")
    _emit(report.to_dict(), args.output)
    return 0


def _cmd_series(args) -> int:
    f = _series_by_name(args.function, args.order)
    reference = _REFERENCE_COEFFS[args.function]
    rows = []
    for n in range(args.order + 1):
        c = f[n]
        row = {"n": n, "re": c.real, "im": c.imag}
        if args.function == "koebe":
            row["reference"] = float(n)
        elif n in reference:
            row["reference"] = reference[n]
        rows.append(row)
    for row in rows:
        ref = f"  reference={row['reference']:.12g}" if "reference" in row else ""
        print(f"a[{row['n']}] = {row['re']:+.12g}{row['im']:+.12g}j{ref}")
    _emit({"function": args.function, "order": args.order,
           "coefficients": rows}, args.output)
    return 0


def _cmd_ymax(args) -> int:
    result = y_closed(YArgs(args.A, args.B, args.C))
    doc = {"A": args.A, "B": args.B, "C": args.C,
           "value": result.value, "branch": result.branch}
    print(f"Y({args.A}, {args.B}, {args.C}) = {result.value:.10g} "
          f"[{result.branch}]")
    if args.oracle:
        oracle = y_oracle(YArgs(args.A, args.B, args.C))
        doc["oracle"] = oracle
        doc["discrepancy"] = abs(result.value - oracle)
        print(f"oracle: {oracle:.10g} (discrepancy {doc['discrepancy']:.3e})")
    _emit(doc, args.output)
    return 0


def _cmd_membership(args, parser) -> int:
    if args.radius > MAX_MEMBERSHIP_RADIUS:
        parser.error(
            f"--radius must be <= {MAX_MEMBERSHIP_RADIUS}: beyond it the "
            f"order-{DEFAULT_ORDER} truncation tail can eat into the "
            "sampled margin")
    if args.function == "q":
        parser.error("q is the target region map, not a normalized function; "
                     "choose one of g, h0, h, koebe")
    f = _series_by_name(args.function, DEFAULT_ORDER)
    report = membership_check(f, LuneClass(args.lune_class),
                              radii=(args.radius,),
                              samples_per_circle=args.samples)
    status = "PASS" if report.passed else "FAIL"
    print(f"{status}  {args.function} in lune-{args.lune_class} at "
          f"radius {args.radius}: worst margin {report.worst_margin:.6g} "
          f"at z = {report.location:.6g}")
    _emit({"function": args.function, "class": args.lune_class,
           "radius": args.radius, "samples": args.samples,
           "passed": report.passed, "worst_margin": report.worst_margin,
           "location": [report.location.real, report.location.imag]},
          args.output)
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lunehankel",
        description="Certify the sharp second Hankel determinant bounds for "
                    "the lune-starlike and lune-convex classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_grid=False):
        p.add_argument("--output", help="write the JSON document to this path")
        p.add_argument("--config", help="JSON file with configuration "
                                        "overrides (flags win)")
        if with_grid:
            p.add_argument("--order", type=int, default=None)
            p.add_argument("--tau1-steps", dest="tau1_steps", type=int,
                           default=None)
            p.add_argument("--tau2-radial", dest="tau2_radial", type=int,
                           default=None)
            p.add_argument("--tau2-angular", dest="tau2_angular", type=int,
                           default=None)
            p.add_argument("--refine-depth", dest="refine_depth", type=int,
                           default=None)
            p.add_argument("--seed", type=int, default=None)

    p_verify = sub.add_parser("verify", help="run the full certification suite")
    add_common(p_verify, with_grid=True)
    p_verify.add_argument("--json", action="store_true",
                          help="also dump the JSON report to stdout")

    p_search = sub.add_parser("search", help="global extremal search")
    p_search.add_argument("--class", dest="lune_class", required=True,
                          choices=[c.value for c in LuneClass])
    add_common(p_search, with_grid=True)

    p_series = sub.add_parser("series", help="expand a named function")
    p_series.add_argument("--function", required=True,
                          choices=sorted(_REFERENCE_COEFFS))
    p_series.add_argument("--order", type=int, default=8)
    add_common(p_series)

    p_ymax = sub.add_parser("ymax", help="closed-form disk maximum Y(A,B,C)")
    p_ymax.add_argument("-A", type=float, required=True)
    p_ymax.add_argument("-B", type=float, required=True)
    p_ymax.add_argument("-C", type=float, required=True)
    p_ymax.add_argument("--oracle", action="store_true",
                        help="also run the brute-force oracle")
    add_common(p_ymax)

    p_member = sub.add_parser("membership", help="sampled lune membership")
    p_member.add_argument("--function", required=True,
                          choices=sorted(_REFERENCE_COEFFS))
    p_member.add_argument("--class", dest="lune_class", required=True,
                          choices=[c.value for c in LuneClass])
    p_member.add_argument("--radius", type=float, default=0.9)
    p_member.add_argument("--samples", type=int, default=720)
    add_common(p_member)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "series" and args.order < 2:
        parser.error("--order must be >= 2")
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "search":
            return _cmd_search(args)
        if args.command == "series":
            return _cmd_series(args)
        if args.command == "ymax":
            return _cmd_ymax(args)
        return _cmd_membership(args, parser)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
