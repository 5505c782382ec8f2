"""Command-line front end.

Subcommands expose every solver; the fig1/fig2 commands emit CSV datasets
(one-line header, comma delimited, 17 significant digits) and, when
writing to a file, render the matching figure next to the data.

Exit codes: 0 success, 1 usage/parameter error, 2 numerical
non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import clamped_series, perturbation, variational
from .domain import (BracketError, ConvergenceError, EnergyEstimate,
                     HYDROGEN_BETA, Method, ModelParams, QuadratureSpec)

_PT_MODELS = {
    "moving-sinc": Method.MOVING_PT_SINC,
    "moving-poly": Method.MOVING_PT_POLY,
    "clamped-poly": Method.CLAMPED_PT_POLY,
    "clamped-sinc": Method.CLAMPED_PT_SINC,
}

_USAGE_EXIT = 1
_NUMERIC_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(_USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="confined-hydrogen",
        description="Ground-state energies of a hydrogen atom confined to "
                    "an impenetrable spherical box (dimensionless units).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_beta=True):
        if with_beta:
            p.add_argument("--beta", type=float, default=HYDROGEN_BETA,
                           help="electron-to-nucleus mass ratio "
                                "(default: hydrogen, ~1/1836)")
        p.add_argument("--order", type=int, default=None,
                       help="quadrature base order per dimension")
        p.add_argument("--max-refinements", type=int, default=None,
                       help="quadrature order-doubling budget")
        p.add_argument("--rtol", type=float, default=None,
                       help="quadrature relative tolerance")
        p.add_argument("--output", type=Path, default=None,
                       help="write results to this file instead of stdout")

    p = sub.add_parser("perturb", help="first-order perturbation energy")
    p.add_argument("--model", required=True, choices=sorted(_PT_MODELS))
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    add_common(p)

    p = sub.add_parser("clamped", help="numerically exact clamped-nucleus energy")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--output", type=Path, default=None)

    p = sub.add_parser("variational",
                       help="minimised variational energy at one coupling")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    add_common(p)

    p = sub.add_parser("critical", help="critical coupling lambda_c")
    p.add_argument("--model", required=True,
                   choices=sorted(_PT_MODELS) + ["moving-variational",
                                                 "clamped-series"])
    p.add_argument("--tol", type=float, default=1e-9,
                   help="tolerance for the clamped-series root")
    add_common(p)

    p = sub.add_parser("fig1", help="CSV of energy vs coupling, all methods")
    p.add_argument("--lambda-min", type=float, default=0.0)
    p.add_argument("--lambda-max", type=float, default=5.0)
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--no-plot", action="store_true",
                   help="do not render a figure next to the CSV")
    add_common(p)

    p = sub.add_parser("fig2", help="CSV of eps/lambda^2 for the two trial "
                                    "families plus the free-atom asymptote")
    p.add_argument("--lambda-min", type=float, default=None,
                   help="first coupling (default: one step)")
    p.add_argument("--lambda-max", type=float, default=12.0)
    p.add_argument("--step", type=float, default=0.5)
    p.add_argument("--no-plot", action="store_true")
    add_common(p)

    return parser


def _quad_spec(args) -> QuadratureSpec | None:
    overrides = {}
    if getattr(args, "order", None) is not None:
        overrides["base_order"] = args.order
    if getattr(args, "max_refinements", None) is not None:
        overrides["max_refinements"] = args.max_refinements
    if getattr(args, "rtol", None) is not None:
        overrides["rel_tol"] = args.rtol
    if not overrides:
        return None
    base = QuadratureSpec(rel_tol=1e-9)
    return QuadratureSpec(
        base_order=overrides.get("base_order", base.base_order),
        max_refinements=overrides.get("max_refinements", base.max_refinements),
        rel_tol=overrides.get("rel_tol", base.rel_tol))


def _lambda_grid(args) -> np.ndarray:
    start = args.lambda_min if args.lambda_min is not None else args.step
    if not (args.step > 0 and start < args.lambda_max):
        raise ValueError("need step > 0 and lambda-min < lambda-max")
    n = int(round((args.lambda_max - start) / args.step))
    grid = start + args.step * np.arange(n + 1)
    return grid[grid <= args.lambda_max + 1e-12]


def _require(estimate: EnergyEstimate) -> float:
    if not estimate.converged:
        raise ConvergenceError(
            f"{estimate.method.value} did not converge "
            f"(residual {estimate.residual:.3e})")
    return estimate.epsilon


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)


def _csv(header: list[str], rows: list[dict]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(row[col]) for col in header))
    return "\n".join(lines) + "\n"


def _cmd_perturb(args) -> str:
    params = ModelParams(beta=args.beta, lam=args.lam)
    spec = _quad_spec(args)
    method = _PT_MODELS[args.model]
    if method is Method.MOVING_PT_SINC:
        est = perturbation.moving_pt_sinc(params, spec)
    elif method is Method.MOVING_PT_POLY:
        est = perturbation.moving_pt_poly(params)
    elif method is Method.CLAMPED_PT_POLY:
        est = perturbation.clamped_pt_poly(args.lam)
    else:
        est = perturbation.clamped_pt_sinc(args.lam, spec)
    return _fmt(_require(est)) + "\n"


def _cmd_clamped(args) -> str:
    est = clamped_series.clamped_ground_energy(args.lam, args.tol)
    return _fmt(_require(est)) + "\n"


def _cmd_variational(args) -> str:
    point = variational.minimize_energy(args.beta, args.lam, _quad_spec(args))
    header = ["epsilon", "alpha", "kinetic", "coulomb"]
    row = {"epsilon": point.epsilon, "alpha": point.alpha,
           "kinetic": point.kinetic, "coulomb": point.coulomb}
    return _csv(header, [row])


def _cmd_critical(args) -> str:
    params = ModelParams(beta=args.beta, lam=0.0)
    if args.model == "clamped-series":
        value = clamped_series.clamped_critical_lambda(args.tol)
    elif args.model == "moving-variational":
        value = variational.variational_critical_lambda(args.beta, _quad_spec(args))
    else:
        value = perturbation.pt_critical_lambda(
            _PT_MODELS[args.model], params, _quad_spec(args))
    return _fmt(value) + "\n"


def _cmd_fig1(args) -> tuple[str, list[dict]]:
    spec = _quad_spec(args)
    grid = _lambda_grid(args)
    c_pair, _, ok_pair = perturbation.sinc_pair_coulomb(spec)
    c_clamped, _, ok_clamped = perturbation.sinc_clamped_coulomb(spec)
    if not (ok_pair and ok_clamped):
        raise ConvergenceError("sinc Coulomb coefficients did not converge")
    kin = perturbation.SPHERE_GROUND_ENERGY
    rows = []
    for lam in grid:
        rows.append({
            "lambda": lam,
            "eps_moving_sinc": kin * (1.0 + args.beta) - c_pair * lam,
            "eps_moving_poly": perturbation.moving_pt_poly(
                ModelParams(args.beta, lam)).epsilon,
            "eps_clamped_poly": perturbation.clamped_pt_poly(lam).epsilon,
            "eps_clamped_sinc": kin - c_clamped * lam,
            "eps_clamped_series": _require(
                clamped_series.clamped_ground_energy(lam)),
        })
    header = ["lambda", "eps_moving_sinc", "eps_moving_poly",
              "eps_clamped_poly", "eps_clamped_sinc", "eps_clamped_series"]
    return _csv(header, rows), rows


def _cmd_fig2(args) -> tuple[str, list[dict]]:
    spec = _quad_spec(args)
    grid = _lambda_grid(args)
    asymptote = -1.0 / (2.0 * (1.0 + args.beta))
    rows = []
    for lam in grid:
        poly = perturbation.moving_pt_poly(ModelParams(args.beta, lam)).epsilon
        point = variational.minimize_energy(args.beta, lam, spec)
        rows.append({
            "lambda": lam,
            "eps_over_lambda2_poly": poly / lam ** 2,
            "eps_over_lambda2_variational": point.epsilon / lam ** 2,
            "asymptote": asymptote,
        })
    header = ["lambda", "eps_over_lambda2_poly",
              "eps_over_lambda2_variational", "asymptote"]
    return _csv(header, rows), rows


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "perturb":
            _emit(_cmd_perturb(args), args.output)
        elif args.command == "clamped":
            _emit(_cmd_clamped(args), args.output)
        elif args.command == "variational":
            _emit(_cmd_variational(args), args.output)
        elif args.command == "critical":
            _emit(_cmd_critical(args), args.output)
        elif args.command in ("fig1", "fig2"):
            text, rows = (_cmd_fig1 if args.command == "fig1" else _cmd_fig2)(args)
            _emit(text, args.output)
            if args.output is not None and not args.no_plot:
                from . import figures
                png = args.output.with_suffix(".png")
                if args.command == "fig1":
                    figures.render_energy_curves(rows, str(png))
                else:
                    figures.render_scaled_energy_curves(rows, str(png))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    except (ConvergenceError, BracketError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _NUMERIC_EXIT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    return 0


if __name__ == "__main__":
    sys.exit(main())
