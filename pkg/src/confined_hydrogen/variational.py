"""One-parameter variational treatment of the moving-nucleus model.

The trial function is

    phi(r_e, r_n, r) = (1 - r_e)(1 - r_n) exp(-alpha r),

which satisfies the box boundary conditions, reduces to the polynomial
perturbation state at alpha = 0, and carries the correct exp(-alpha r)
asymptotics of the free atom for large coupling.  All expectation values
are ratios of triangle-domain integrals, so normalisation constants never
appear.

Since eps(alpha, lambda) = T(alpha) - lambda V(alpha) is linear in
lambda, the stationarity condition d eps / d alpha = 0 is solved once for
lambda instead of alpha:

    lambda(alpha) = T'(alpha) / V'(alpha),

giving the optimised energy as a parametric curve
(lambda(alpha), eps(alpha, lambda(alpha))).  The alpha derivatives are
taken under the integral sign (the integrands are elementary in alpha),
so quadrature is the only numerical approximation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .domain import BracketError, ConvergenceError, QuadratureSpec
from .quadrature import DEFAULT_SPEC_3D, integrate_triangle_stack

log = logging.getLogger(__name__)

# Default alpha grid for curve emission and the critical-lambda scan.
ALPHA_GRID_MAX = 12.0
ALPHA_GRID_STEP = 0.05
ALPHA_ROOT_TOL = 1e-10


@dataclass(frozen=True)
class TrialState:
    """The pair trial function (1 - r_e)(1 - r_n) exp(-alpha r)."""

    alpha: float

    def __post_init__(self):
        if not self.alpha >= 0.0:
            raise ValueError("alpha must be >= 0")

    def __call__(self, re, rn, r):
        return (1.0 - re) * (1.0 - rn) * np.exp(-self.alpha * r)


@dataclass(frozen=True)
class VariationalPoint:
    """One sample (alpha, lambda, energy, <T>, <1/r>) of the trial family."""

    alpha: float
    lam: float
    epsilon: float
    kinetic: float
    coulomb: float


def kinetic_action(state: TrialState, beta: float, re, rn, r):
    """Kinetic part of the Hamiltonian applied to the trial state.

    Evaluates T phi in the radial coordinates (r_e, r_n, r), where the
    kinetic operator consists of an electron block with the cross term
    (r_e^2 - r_n^2 + r^2)/(r_e r) d^2/(dr_e dr), the beta-weighted mirror
    block for the nucleus, and a (1 + beta)/2 block in the separation r.
    The -lambda/r potential is NOT included; it is integrated separately.

    Points on the coordinate planes r_e = 0, r_n = 0 or r = 0 are rejected
    (the cross-term denominators are singular there); quadrature nodes are
    always interior so this never triggers during integration.
    """
    re = np.asarray(re, dtype=float)
    rn = np.asarray(rn, dtype=float)
    r = np.asarray(r, dtype=float)
    if np.any(re <= 0.0) or np.any(rn <= 0.0) or np.any(r <= 0.0):
        raise ValueError("kinetic action requires r_e, r_n, r > 0")
    alpha, beta = state.alpha, float(beta)
    ce = (1.0 - rn) * (re * re - rn * rn + r * r) / (re * r)
    cn = (1.0 - re) * (rn * rn - re * re + r * r) / (rn * r)
    ge = -0.5 * (-2.0 * (1.0 - rn) / re + alpha * ce)
    gn = -0.5 * beta * (-2.0 * (1.0 - re) / rn + alpha * cn)
    gr = -0.5 * (1.0 + beta) * (alpha * alpha - 2.0 * alpha / r) \
        * (1.0 - re) * (1.0 - rn)
    return (ge + gn + gr) * np.exp(-alpha * r)


def _moment_stack(alpha: float, beta: float):
    """Integrands for [norm, kinetic, coulomb, d norm, d kinetic].

    All five share the quadrature nodes.  With phi = P exp(-alpha r),
    P = (1 - r_e)(1 - r_n), the kinetic integrand is phi T phi =
    P G exp(-2 alpha r); its alpha derivative follows from
    d/d alpha [G exp(-2 alpha r)] = (dG/d alpha - 2 r G) exp(-2 alpha r).
    The coulomb derivative needs no slot: d/d alpha int phi^2 / r =
    -2 int phi^2.
    """

    def stack(re, rn, r):
        p = (1.0 - re) * (1.0 - rn)
        e2 = np.exp(-2.0 * alpha * r)
        phi2 = p * p * e2
        ce = (1.0 - rn) * (re * re - rn * rn + r * r) / (re * r)
        cn = (1.0 - re) * (rn * rn - re * re + r * r) / (rn * r)
        g = (-0.5 * (-2.0 * (1.0 - rn) / re + alpha * ce)
             - 0.5 * beta * (-2.0 * (1.0 - re) / rn + alpha * cn)
             - 0.5 * (1.0 + beta) * (alpha * alpha - 2.0 * alpha / r) * p)
        dg = (-0.5 * ce - 0.5 * beta * cn
              - 0.5 * (1.0 + beta) * (2.0 * alpha - 2.0 / r) * p)
        kin = p * g * e2
        return np.stack(np.broadcast_arrays(
            phi2, kin, phi2 / r, -2.0 * r * phi2, (dg - 2.0 * r * g) * p * e2))

    return stack


@dataclass(frozen=True)
class _Moments:
    """Ratio-normalised expectations and their alpha derivatives."""

    kinetic: float
    coulomb: float
    d_kinetic: float
    d_coulomb: float

    @property
    def lam(self) -> float:
        return self.d_kinetic / self.d_coulomb

    @property
    def epsilon(self) -> float:
        return self.kinetic - self.lam * self.coulomb


def _moments(alpha: float, beta: float, spec: QuadratureSpec) -> _Moments:
    res = integrate_triangle_stack(_moment_stack(alpha, beta), 5, spec)
    if not res.converged:
        raise ConvergenceError(
            f"triangle quadrature did not converge at alpha={alpha} "
            f"(order {res.order}, errors {res.errors})")
    norm, kin, cou, d_norm, d_kin = res.values
    kinetic = kin / norm
    coulomb = cou / norm
    d_kinetic = (d_kin * norm - kin * d_norm) / norm ** 2
    d_coulomb = (-2.0 * norm * norm - cou * d_norm) / norm ** 2
    return _Moments(kinetic, coulomb, d_kinetic, d_coulomb)


def expectations(state: TrialState, beta: float,
                 spec: QuadratureSpec | None = None) -> tuple[float, float]:
    """Normalised (<T>, <1/r>) of the trial state.

    Raises ConvergenceError if the underlying quadrature fails to reach
    its tolerance.
    """
    m = _moments(state.alpha, beta, spec or DEFAULT_SPEC_3D)
    return m.kinetic, m.coulomb


def parametric_curve(beta: float, alpha_grid,
                     spec: QuadratureSpec | None = None) -> list[VariationalPoint]:
    """The optimised-energy curve sampled on an increasing alpha grid.

    Grid points where lambda(alpha) < 0 (the trial correlation still
    lowers the kinetic energy, so no positive coupling is stationary
    there) or where V'(alpha) vanishes are dropped and logged.
    """
    grid = np.asarray(list(alpha_grid), dtype=float)
    if grid.size == 0 or np.any(np.diff(grid) <= 0) or np.any(grid < 0):
        raise ValueError("alpha_grid must be non-empty, increasing and >= 0")
    spec = spec or DEFAULT_SPEC_3D
    points: list[VariationalPoint] = []
    dropped: list[float] = []
    for alpha in grid:
        m = _moments(alpha, beta, spec)
        if abs(m.d_coulomb) < 1e-12 or m.lam < 0.0:
            dropped.append(float(alpha))
            continue
        points.append(VariationalPoint(float(alpha), m.lam, m.epsilon,
                                       m.kinetic, m.coulomb))
    if dropped:
        log.warning("dropped %d curve points with lambda(alpha) < 0 or "
                    "V'(alpha) = 0 at alpha = %s", len(dropped), dropped)
    return points


def variational_critical_lambda(beta: float,
                                spec: QuadratureSpec | None = None) -> float:
    """Coupling where the optimised variational energy crosses zero.

    Brackets the sign change of eps(alpha, lambda(alpha)) along the
    parametric curve by a coarse alpha scan and refines alpha by Brent's
    bracketing method; returns lambda at the crossing.
    """
    spec = spec or DEFAULT_SPEC_3D

    def eps_on_curve(alpha):
        return _moments(alpha, beta, spec).epsilon

    lo, step = 0.25, 0.25
    f_lo = eps_on_curve(lo)
    alpha, f = lo, f_lo
    bracket = None
    while alpha < ALPHA_GRID_MAX:
        alpha_next = alpha + step
        f_next = eps_on_curve(alpha_next)
        if f * f_next <= 0.0:
            bracket = (alpha, alpha_next)
            break
        alpha, f = alpha_next, f_next
    if bracket is None:
        raise BracketError(
            f"no zero of the parametric energy on alpha in "
            f"[{lo}, {ALPHA_GRID_MAX}] (step {step})")
    alpha_star = brentq(eps_on_curve, *bracket, xtol=ALPHA_ROOT_TOL)
    return _moments(alpha_star, beta, spec).lam


def minimize_energy(beta: float, lam: float,
                    spec: QuadratureSpec | None = None) -> VariationalPoint:
    """Minimise eps(alpha, lambda) = T(alpha) - lambda V(alpha) over alpha.

    Solves d eps / d alpha = T' - lambda V' = 0 by bracketing + Brent on
    the analytic derivative; falls back to the alpha = 0 boundary when the
    energy is already increasing there.  The search bracket grows
    geometrically from the free-atom scale lambda / (1 + beta).
    """
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    spec = spec or DEFAULT_SPEC_3D

    def slope(alpha):
        m = _moments(alpha, beta, spec)
        return m.d_kinetic - lam * m.d_coulomb

    lo = 0.0
    if slope(lo) >= 0.0:
        alpha_star = 0.0
    else:
        hi = max(1.0, 1.3 * lam / (1.0 + beta))
        cap = 4.0 * max(lam, 1.0) + 10.0
        while slope(hi) < 0.0:
            hi *= 1.6
            if hi > cap:
                raise BracketError(
                    f"energy slope stayed negative up to alpha={hi:.3g} "
                    f"for lambda={lam}")
        alpha_star = brentq(slope, lo, hi, xtol=ALPHA_ROOT_TOL)
    m = _moments(alpha_star, beta, spec)
    return VariationalPoint(alpha_star, lam, m.kinetic - lam * m.coulomb,
                            m.kinetic, m.coulomb)


def free_atom_limit_check(beta: float, lambda_values,
                          spec: QuadratureSpec | None = None) -> list[tuple[float, float]]:
    """Minimised eps / lambda^2 on a grid of couplings.

    As lambda grows the ratio must decrease toward the free-atom value
    -1 / (2 (1 + beta)).
    """
    lams = np.asarray(list(lambda_values), dtype=float)
    if lams.size == 0 or np.any(lams <= 0) or np.any(np.diff(lams) <= 0):
        raise ValueError("lambda_values must be positive and increasing")
    out = []
    for lam in lams:
        point = minimize_energy(beta, float(lam), spec)
        out.append((float(lam), point.epsilon / lam ** 2))
    return out
