"""Command-line front end.

Exit codes are stable across subcommands: 0 on success, 1 when a
verification fails, 2 on usage or configuration errors. Output is
deterministic; identical configuration yields byte-identical payloads.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__
from .coherent import TruncationError, crosscheck, run_crosscheck_grid
from .ellipse import (
    SAMPLES_CSV_HEADER,
    build_quadratic,
    max_residual,
    proportionality_report,
    quadratic_in_stokes,
    sample_curve,
)
from .fock import FockBasis, verify_algebra
from .hyperboloid import classify, surface_mesh
from .params import FieldParams
from .stokes import stokes_like

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2

REPORT_K0_VALUES = (0.3, 1.0, 1.5)


class ConfigError(ValueError):
    """Invalid option combination; maps to exit code 2."""


def _add_field_arguments(parser: argparse.ArgumentParser, *, required: bool = True) -> None:
    parser.add_argument("--amp1", type=float, required=required, default=None,
                        help="amplitude of mode 1 (nonnegative)")
    parser.add_argument("--amp2", type=float, required=required, default=None,
                        help="amplitude of mode 2 (nonnegative)")
    parser.add_argument("--phi1", type=float, default=0.0,
                        help="phase of mode 1, radians (default 0)")
    parser.add_argument("--phi2", type=float, default=0.0,
                        help="phase of mode 2, radians (default 0)")
    parser.add_argument("--omega", type=float, default=1.0,
                        help="angular frequency (default 1)")
    parser.add_argument("--wavenumber", type=float, default=1.0,
                        help="wave number entering tau = omega*t - wavenumber*z (default 1)")
    parser.add_argument("--degrees", action="store_true",
                        help="interpret --phi1/--phi2 in degrees")


def _field_params(args: argparse.Namespace) -> FieldParams:
    phi1, phi2 = args.phi1, args.phi2
    if args.degrees:
        phi1, phi2 = math.radians(phi1), math.radians(phi2)
    return FieldParams(
        amp1=args.amp1,
        amp2=args.amp2,
        phi1=phi1,
        phi2=phi2,
        omega=args.omega,
        wavenumber=args.wavenumber,
    )


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _write_output(text: str, destination: str) -> None:
    if destination == "-":
        sys.stdout.write(text)
        return
    Path(destination).write_text(text, encoding="utf-8", newline="\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su11pol",
        description="Hyperbolic description of light polarization: "
        "operator verification, Stokes-like parameters, ellipse, and surface data.",
    )
    parser.add_argument("--version", action="version", version=f"su11pol {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_stokes = sub.add_parser(
        "stokes", help="Stokes-like parameters and polarization class for one field"
    )
    _add_field_arguments(p_stokes)
    p_stokes.add_argument("--tol", type=float, default=1e-9,
                          help="region boundary tolerance on delta21 (default 1e-9)")
    p_stokes.add_argument("--output", default="-", help="output path or - for stdout")

    p_algebra = sub.add_parser(
        "verify-algebra", help="verify the generator algebra on a truncated basis"
    )
    p_algebra.add_argument("--n-max", type=int, default=12,
                           help="per-mode occupation cutoff, at least 4 (default 12)")
    p_algebra.add_argument("--margin", type=int, default=2,
                           help="safe-subspace margin (default 2)")
    p_algebra.add_argument("--tol", type=float, default=1e-12,
                           help="absolute tolerance per check (default 1e-12)")
    p_algebra.add_argument("--sparse", action="store_true",
                           help="use sparse matrices instead of dense")
    p_algebra.add_argument("--output", default="-", help="output path or - for stdout")

    p_ellipse = sub.add_parser(
        "ellipse", help="field samples over one period plus the curve coefficients"
    )
    _add_field_arguments(p_ellipse)
    p_ellipse.add_argument("--samples", type=int, default=256,
                           help="tau samples over one period, at least 8 (default 256)")
    p_ellipse.add_argument("--format", choices=("json", "csv"), default="json",
                           help="json bundles samples and coefficients; csv emits samples only")
    p_ellipse.add_argument("--output", default="-", help="output path or - for stdout")

    p_surface = sub.add_parser(
        "surface", help="vertex grid of the polarization surface"
    )
    p_surface.add_argument("--k0", type=float, required=True,
                           help="surface scale |k0|, positive")
    p_surface.add_argument("--chi2-min", type=float, default=-0.4)
    p_surface.add_argument("--chi2-max", type=float, default=0.4)
    p_surface.add_argument("--psi2-min", type=float, default=-0.4)
    p_surface.add_argument("--psi2-max", type=float, default=0.4)
    p_surface.add_argument("--steps", type=int, default=41,
                           help="grid points per axis, at least 2 (default 41)")
    p_surface.add_argument("--sign-k1", type=int, choices=(-1, 1), default=1)
    p_surface.add_argument("--sign-k2", type=int, choices=(-1, 1), default=1)
    p_surface.add_argument("--format", choices=("csv", "json"), default="csv")
    p_surface.add_argument("--output", default="-", help="output path or - for stdout")

    p_cross = sub.add_parser(
        "crosscheck",
        help="numeric vs closed-form generator expectations in coherent states",
    )
    _add_field_arguments(p_cross, required=False)
    p_cross.add_argument("--t", type=float, default=0.0, help="evaluation time (default 0)")
    p_cross.add_argument("--n-max", type=int, default=40,
                         help="occupation cutoff (default 40)")
    p_cross.add_argument("--tol", type=float, default=1e-8,
                         help="per-component tolerance (default 1e-8)")
    p_cross.add_argument("--grid", action="store_true",
                         help="run the built-in 90-point sweep instead of one point")
    p_cross.add_argument("--output", default="-", help="output path or - for stdout")

    p_report = sub.add_parser(
        "report",
        help="write the full data bundle plus rendered figures to a directory",
    )
    _add_field_arguments(p_report, required=False)
    p_report.set_defaults(amp1=1.0, amp2=0.5, phi2=math.pi / 3.0)
    p_report.add_argument("--out-dir", default="report",
                          help="target directory (default ./report)")
    p_report.add_argument("--n-max", type=int, default=12,
                          help="cutoff for the algebra check (default 12)")
    p_report.add_argument("--steps", type=int, default=41,
                          help="surface grid points per axis (default 41)")
    return parser


def cmd_stokes(args: argparse.Namespace) -> int:
    params = _field_params(args)
    s = stokes_like(params)
    region = classify(params, tol=args.tol)
    payload = s.to_json_payload()
    payload["classification"] = {"tag": region.tag, "detail": region.detail}
    payload["force_residual"] = s.force_residual()
    _write_output(_dump_json(payload), args.output)
    return EXIT_OK


def cmd_verify_algebra(args: argparse.Namespace) -> int:
    if args.n_max < 4:
        raise ConfigError("--n-max must be at least 4")
    report = verify_algebra(
        FockBasis(args.n_max), margin=args.margin, tol=args.tol, sparse=args.sparse
    )
    _write_output(_dump_json(report.to_json_payload()), args.output)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_ellipse(args: argparse.Namespace) -> int:
    if args.samples < 8:
        raise ConfigError("--samples must be at least 8")
    params = _field_params(args)
    tau, e1, e2 = sample_curve(params, args.samples)
    if args.format == "csv":
        lines = [SAMPLES_CSV_HEADER]
        lines.extend(
            f"{float(t)!r},{float(x)!r},{float(y)!r}" for t, x, y in zip(tau, e1, e2)
        )
        _write_output("\n".join(lines) + "\n", args.output)
        return EXIT_OK
    quadratic = build_quadratic(params)
    form = quadratic_in_stokes(stokes_like(params))
    payload = {
        "quadratic": quadratic.to_json_payload(),
        "stokes_form": form.to_json_payload(),
        "scales": proportionality_report(quadratic, form).to_json_payload(),
        "max_residual": max_residual(quadratic, params, args.samples),
        "samples": [
            {"tau": float(t), "e1": float(x), "e2": float(y)}
            for t, x, y in zip(tau, e1, e2)
        ],
    }
    _write_output(_dump_json(payload), args.output)
    return EXIT_OK


def cmd_surface(args: argparse.Namespace) -> int:
    mesh = surface_mesh(
        args.k0,
        chi2_range=(args.chi2_min, args.chi2_max),
        psi2_range=(args.psi2_min, args.psi2_max),
        steps=(args.steps, args.steps),
        signs=(args.sign_k1, args.sign_k2),
    )
    if args.format == "csv":
        _write_output(mesh.to_csv(), args.output)
    else:
        _write_output(_dump_json(mesh.to_json_payload()), args.output)
    return EXIT_OK


def cmd_crosscheck(args: argparse.Namespace) -> int:
    if args.n_max < 1:
        raise ConfigError("--n-max must be at least 1")
    if args.grid:
        reports = run_crosscheck_grid(n_max=args.n_max, tol=args.tol)
        passed = all(r.passed for r in reports)
        payload = {
            "points": [r.to_json_payload() for r in reports],
            "count": len(reports),
            "passed": passed,
        }
        _write_output(_dump_json(payload), args.output)
        return EXIT_OK if passed else EXIT_CHECK_FAILED
    if args.amp1 is None or args.amp2 is None:
        raise ConfigError("--amp1 and --amp2 are required without --grid")
    params = _field_params(args)
    report = crosscheck(params, FockBasis(args.n_max), tol=args.tol, t=args.t)
    _write_output(_dump_json(report.to_json_payload()), args.output)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_report(args: argparse.Namespace) -> int:
    # deferred so plain data subcommands never touch matplotlib
    from . import figures

    if args.steps < 2:
        raise ConfigError("--steps must be at least 2")
    if args.n_max < 4:
        raise ConfigError("--n-max must be at least 4")
    params = _field_params(args)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    s = stokes_like(params)
    region = classify(params)
    stokes_payload = s.to_json_payload()
    stokes_payload["classification"] = {"tag": region.tag, "detail": region.detail}
    stokes_payload["force_residual"] = s.force_residual()
    (out / "stokes.json").write_text(_dump_json(stokes_payload), encoding="utf-8")

    tau, e1, e2 = sample_curve(params, 256)
    lines = [SAMPLES_CSV_HEADER]
    lines.extend(
        f"{float(t)!r},{float(x)!r},{float(y)!r}" for t, x, y in zip(tau, e1, e2)
    )
    (out / "ellipse_samples.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    quadratic = build_quadratic(params)
    form = quadratic_in_stokes(s)
    ellipse_payload = {
        "quadratic": quadratic.to_json_payload(),
        "stokes_form": form.to_json_payload(),
        "scales": proportionality_report(quadratic, form).to_json_payload(),
        "max_residual": max_residual(quadratic, params, 256),
    }
    (out / "ellipse_quadratic.json").write_text(
        _dump_json(ellipse_payload), encoding="utf-8"
    )

    meshes = []
    for k0_abs in REPORT_K0_VALUES:
        mesh = surface_mesh(k0_abs, steps=(args.steps, args.steps))
        meshes.append(mesh)
        (out / f"surface_k0_{k0_abs}.csv").write_text(mesh.to_csv(), encoding="utf-8")

    algebra = verify_algebra(FockBasis(args.n_max), margin=2, tol=1e-12)
    (out / "algebra.json").write_text(
        _dump_json(algebra.to_json_payload()), encoding="utf-8"
    )

    cross = crosscheck(params, FockBasis(40), tol=1e-8, t=0.0)
    (out / "crosscheck.json").write_text(
        _dump_json(cross.to_json_payload()), encoding="utf-8"
    )

    figures.render_hyperboloid_family(meshes, out / "figure_hyperboloids.png")
    figures.render_polarization_regions(meshes[-1], out / "figure_regions.png")
    figures.render_ellipse(params, out / "figure_ellipse.png")

    ok = algebra.passed and cross.passed
    sys.stdout.write(f"report written to {out}\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


_HANDLERS = {
    "stokes": cmd_stokes,
    "verify-algebra": cmd_verify_algebra,
    "ellipse": cmd_ellipse,
    "surface": cmd_surface,
    "crosscheck": cmd_crosscheck,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ConfigError, ValueError, TruncationError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
