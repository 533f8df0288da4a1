"""Command-line front door.

Subcommands:
  controllability   rank sweeps for the classical, octonionic and
                    space-form systems
  geodesic          sample a closed-form geodesic and certify it
  verify-all        run every numerical identity suite

Reports are deterministic: the same flags and seed produce byte-identical
files.  JSON output carries a "schema": "screwsr/1" key; CSV uses 17
significant digits and LF line endings.  Exit codes: 0 all checks pass,
1 check failure, 2 usage or precondition error.
"""

import argparse
import json
import sys

import numpy as np

from . import config, control, dualspace, geodesics, groups, linalg, octonion, verify
from .exceptions import DomainError
from .groups import CompactGroupId
from .screws import ScrewSystem

SCHEMA = "screwsr/1"


def _fmt(x):
    return format(float(x), ".17g")


def _jsonify(obj):
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonify(v) for v in obj.tolist()]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    return obj


def _write(text, path):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload, path):
    doc = {"schema": SCHEMA}
    doc.update(_jsonify(payload))
    _write(json.dumps(doc, sort_keys=True, indent=2) + "\n", path)


def _emit_csv(header, rows, path):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(
            _fmt(v) if isinstance(v, (int, float, np.floating)) else str(v)
            for v in row))
    _write("\n".join(lines) + "\n", path)


def _parse_group(text):
    text = text.replace(":", "")
    for family in ("SO", "SU", "Sp"):
        if text.startswith(family):
            try:
                return CompactGroupId(family, int(text[len(family):]))
            except ValueError:
                break
    raise DomainError(f"cannot parse group {text!r}; expected e.g. SU:2 or SU2")


def _lambda_values(args):
    if args.lambda_grid is not None:
        if args.lambda_grid == "default":
            return list(control.LAMBDA_GRID)
        return [float(v) for v in args.lambda_grid.split(",")]
    if args.lam is None:
        raise DomainError("provide --lambda or --lambda-grid")
    return [args.lam]


def cmd_controllability(args):
    tol = args.tol if args.tol is not None else config.default_tol()
    reports = []
    if args.octonion:
        for lam in _lambda_values(args):
            reports.append(octonion.octo_controllability(lam))
    elif args.space_form:
        if args.kappa is None:
            raise DomainError("--space-form requires --kappa")
        for lam in _lambda_values(args):
            reports.append(control.space_form_report(args.kappa, lam))
    else:
        if args.group is None:
            raise DomainError("choose --group, --octonion or --space-form")
        gid = _parse_group(args.group)
        ks = [args.k] if args.k is not None else [1, -1, 0]
        for k in ks:
            for lam in _lambda_values(args):
                reports.append(control.bracket_generating_rank(
                    ScrewSystem(gid, k, lam)))
    rows = [r.to_dict() for r in reports]
    failures = sum(0 if r.consistent else 1 for r in reports)
    warnings = sum(1 for r in reports if r.observed != r.predicted)
    payload = {
        "command": "controllability",
        "tolerance": tol,
        "reports": rows,
        "failures": failures,
        "predicate_warnings": warnings,
    }
    if args.format == "csv":
        header = ["family", "n", "k", "lambda", "dim_g", "dim_span",
                  "predicted", "observed", "consistent"]
        csv_rows = []
        for r in reports:
            sysd = r.system
            csv_rows.append([
                sysd.get("family", ""), sysd.get("n", ""),
                sysd.get("k", ""), sysd.get("lambda", ""),
                r.dim_g, r.dim_span, r.predicted, r.observed, r.consistent,
            ])
        _emit_csv(header, csv_rows, args.out)
    else:
        _emit_json(payload, args.out)
    return 1 if failures else 0


def cmd_geodesic(args):
    tol = args.tol if args.tol is not None else config.default_tol()
    if args.octonion:
        lam = args.lam if args.lam is not None else 1.0
        x, y = octonion.random_orthogonal_pair(args.seed)
        times = np.linspace(0.0, args.t_max, args.samples)
        cert = octonion.certify_octo_momentum(x, y, lam)
        worst = 0.0
        rows = []
        for t in times:
            point = octonion.octo_geodesic(x, y, lam, float(t))
            lld = octonion.octo_log_derivative(x, y, lam, float(t))
            worst = max(worst, float(np.linalg.norm(
                lld.rotation - lam * octonion.L_op(lld.translation))))
            rows.append([t, *point.translation, *point.rotation.ravel()])
        residuals = {
            "horizontality_residual": worst,
            "cometric_residual": cert["cometric_residual"],
            "ad_X_residual": cert["ad_X_residual"],
            "ad_Z_residual": cert["ad_Z_residual"],
        }
        payload = {
            "command": "geodesic",
            "system": {"family": "R7xSO7", "lambda": lam, "seed": args.seed},
            "momentum": {"c": cert["c"], "d": cert["d"], "n": cert["n"]},
            "certification": residuals,
            "tolerance": tol,
            "samples": [list(map(float, r)) for r in rows],
        }
        passed = all(v <= tol for v in residuals.values())
    elif args.space_form:
        if args.kappa is None:
            raise DomainError("--space-form requires --kappa")
        lam = args.lam if args.lam is not None else 1.0
        rng = np.random.Generator(np.random.PCG64(args.seed))
        x, y = rng.standard_normal(3), rng.standard_normal(3)
        rep = geodesics.cross_check_space_form(
            args.kappa, lam, x, y, t_max=args.t_max)
        times = np.linspace(0.0, args.t_max, args.samples)
        rows = [
            [t, *geodesics.space_form_geodesic(args.kappa, lam, x, y, float(t)).ravel()]
            for t in times
        ]
        payload = {
            "command": "geodesic",
            "system": {"family": "space-form", "kappa": args.kappa,
                       "lambda": lam, "seed": args.seed},
            "certification": rep,
            "tolerance": tol,
            "samples": [list(map(float, r)) for r in rows],
        }
        passed = rep["derivative_gap"] <= max(tol, 1e-8)
    else:
        if args.group is None:
            raise DomainError("choose --group, --octonion or --space-form")
        gid = _parse_group(args.group)
        k = args.k if args.k is not None else 0
        lam = args.lam if args.lam is not None else 1.0
        system = ScrewSystem(gid, k, lam)
        x = groups.random_algebra_element(gid, args.seed)
        y = groups.random_algebra_element(gid, args.seed + 10**6)
        spec = geodesics.GeodesicSpec(system, x, y)
        cert = geodesics.certify(spec, t_max=args.t_max, count=args.samples)
        curve = geodesics.sample(spec, t_max=args.t_max, count=args.samples)
        rows = [
            [t, *np.concatenate([p.real.ravel(), p.imag.ravel()])]
            for t, p in zip(curve.times, curve.points)
        ]
        cert["single_exponential"] = bool(
            cert["single_exponential_gap"] <= 1e-10)
        payload = {
            "command": "geodesic",
            "system": system.descriptor() | {"seed": args.seed},
            "certification": cert,
            "tolerance": tol,
            "samples": [list(map(float, r)) for r in rows],
        }
        passed = (cert["horizontality_residual"] <= tol
                  and cert["speed_deviation"] <= tol
                  and cert["membership_residual"] <= tol)
    if args.format == "csv":
        width = len(payload["samples"][0]) - 1
        header = ["t"] + [f"m{i}" for i in range(width)]
        _emit_csv(header, payload["samples"], args.out)
    else:
        _emit_json(payload, args.out)
    return 0 if passed else 1


def cmd_verify_all(args):
    tol_override = args.tol
    results, elapsed = verify.run_all(seed=args.seed)
    failures = 0
    lines = []
    for r in results:
        tolerance = r.tolerance if tol_override is None else tol_override
        passed = r.passed if tol_override is None else (r.residual <= tolerance)
        failures += 0 if passed else 1
        lines.append(f"{'PASS' if passed else 'FAIL'}  {r.name}  "
                     f"residual={r.residual:.3e} tol={tolerance:.1e}")
    summary = {
        "command": "verify-all",
        "checks": len(results),
        "failures": failures,
        "elapsed_seconds": elapsed,
        "kernel": _kernel_name(),
        "results": [r.to_dict() for r in results],
    }
    if args.out:
        _emit_json(summary, args.out)
    for line in lines:
        print(line)
    print(f"{len(results)} checks, {failures} failures, "
          f"{elapsed:.1f}s ({_kernel_name()} kernel)")
    return 1 if failures else 0


def _kernel_name():
    from . import _kernels

    return _kernels.IMPLEMENTATION


def build_parser():
    parser = argparse.ArgumentParser(
        prog="screwsr",
        description="Screw-motion control systems: controllability sweeps, "
                    "closed-form sub-Riemannian geodesics, and numerical "
                    "certification of the underlying identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_system=True):
        if with_system:
            p.add_argument("--group", help="group as FAMILY:n, e.g. SU:2 or SU2")
            p.add_argument("--octonion", action="store_true",
                           help="use the system on R^7 x| SO(7)")
            p.add_argument("--space-form", action="store_true",
                           help="use the 3-dimensional space-form system")
            p.add_argument("--k", type=int, choices=(1, -1, 0),
                           help="curvature sign of the symmetric pair")
            p.add_argument("--kappa", type=int, choices=(1, -1, 0),
                           help="space-form curvature")
            p.add_argument("--lambda", dest="lam", type=float, help="pitch")
            p.add_argument("--lambda-grid", dest="lambda_grid",
                           help="'default' or a comma-separated list")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=None,
                       help="tolerance override (also: SCREWSR_TOL)")
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p_ctrl = sub.add_parser("controllability",
                            help="bracket-generating rank reports")
    common(p_ctrl)

    p_geo = sub.add_parser("geodesic", help="sample and certify a geodesic")
    common(p_geo)
    p_geo.add_argument("--t-max", type=float, default=5.0)
    p_geo.add_argument("--samples", type=int, default=101)

    p_ver = sub.add_parser("verify-all", help="run the full identity suite")
    common(p_ver, with_system=False)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "controllability": cmd_controllability,
        "geodesic": cmd_geodesic,
        "verify-all": cmd_verify_all,
    }
    try:
        return handlers[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
