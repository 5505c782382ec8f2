"""Numerically exact clamped-nucleus reference solver.

With the nucleus fixed at the box centre the reduced radial function
u(r) = r psi(r) of the ground state satisfies

    u'' + (2 lambda / r) u + 2 eps u = 0,   u(0) = u(1) = 0.

Substituting u = sum_k c_k r^(k+1) gives the two-term recursion

    c_(k+1) = -(2 lambda c_k + 2 eps c_(k-1)) / ((k + 2)(k + 1)),

with c_0 = 1, c_(-1) = 0, so u(1; eps, lambda) = sum_k c_k is cheap to
evaluate and the eigenvalue problem becomes a 1-D root search in eps.
The coefficients decay factorially, so double precision is adequate for
lambda up to ~50.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .domain import BracketError, ConvergenceError, EnergyEstimate, Method

_SCAN_STEP = 0.5
_BASE_TRUNCATION = 60
_MAX_TRUNCATION = 1 << 15

SPHERE_GROUND_ENERGY = math.pi ** 2 / 2


@dataclass(frozen=True)
class SeriesSolution:
    """A converged power-series eigenstate of the clamped model."""

    epsilon: float
    coefficients: np.ndarray = field(repr=False)
    truncation: int
    boundary_residual: float
    converged: bool


def series_coefficients(epsilon: float, lam: float, truncation: int) -> np.ndarray:
    """The c_0 .. c_K series coefficients of u = sum c_k r^(k+1)."""
    c = np.empty(truncation + 1)
    c[0] = 1.0
    prev = 0.0
    for k in range(truncation):
        c[k + 1] = -(2.0 * lam * c[k] + 2.0 * epsilon * prev) / ((k + 2) * (k + 1))
        prev = c[k]
    return c


def series_boundary_value(epsilon: float, lam: float, truncation: int) -> float:
    """u(1; eps, lambda) = sum of the series coefficients."""
    if truncation < 10:
        raise ValueError("truncation must be >= 10")
    ck, prev = 1.0, 0.0
    total = 1.0
    for k in range(truncation):
        nxt = -(2.0 * lam * ck + 2.0 * epsilon * prev) / ((k + 2) * (k + 1))
        total += nxt
        prev, ck = ck, nxt
    return total


def _choose_truncation(lam: float, eps_scale: float, tol: float) -> int:
    """Smallest K (doubling from 60) with u(1) stable to tol/10.

    Stability is probed at the extremes of the eps scan range, where the
    coefficients are largest.
    """
    probes = (eps_scale, SPHERE_GROUND_ENERGY)
    k = _BASE_TRUNCATION
    while k < _MAX_TRUNCATION:
        drift = max(abs(series_boundary_value(e, lam, k)
                        - series_boundary_value(e, lam, 2 * k))
                    for e in probes)
        if drift <= tol / 10.0:
            return k
        k *= 2
    raise ConvergenceError(f"series truncation did not stabilise for lambda={lam}")


def solve_ground_state(lam: float, tol: float = 1e-10) -> SeriesSolution:
    """Lowest eigenvalue of the clamped model by series shooting.

    Scans u(1; eps) upward from below the free-atom bound (where u(1) > 0
    because the solution is nodeless) in steps of 0.5; the first sign
    change brackets the ground state, which is then refined by Brent's
    bracketing method.
    """
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    eps_lo = -lam * lam - _SCAN_STEP
    eps_hi = SPHERE_GROUND_ENERGY + 1.0
    trunc = _choose_truncation(lam, eps_lo, tol)

    def u1(e):
        return series_boundary_value(e, lam, trunc)

    eps, f_lo = eps_lo, u1(eps_lo)
    bracket = None
    while eps < eps_hi:
        eps_next = eps + _SCAN_STEP
        f_next = u1(eps_next)
        if f_lo * f_next <= 0.0:
            bracket = (eps, eps_next)
            break
        eps, f_lo = eps_next, f_next
    if bracket is None:
        raise BracketError(
            f"no ground-state bracket for lambda={lam} in "
            f"[{eps_lo}, {eps_hi}] with step {_SCAN_STEP}")

    root = brentq(u1, *bracket, xtol=tol, rtol=4 * np.finfo(float).eps)
    residual = abs(u1(root))
    coeffs = series_coefficients(root, lam, trunc)
    # Tail check: the last retained coefficient must be negligible.
    converged = residual <= 10.0 * tol and abs(coeffs[-1]) <= tol / 10.0
    return SeriesSolution(root, coeffs, trunc, residual, converged)


def clamped_ground_energy(lam: float, tol: float = 1e-10) -> EnergyEstimate:
    """Ground-state energy of the clamped-nucleus model."""
    sol = solve_ground_state(lam, tol)
    return EnergyEstimate(sol.epsilon, Method.CLAMPED_SERIES,
                          sol.converged, sol.boundary_residual)


def clamped_critical_lambda(tol: float = 1e-9) -> float:
    """Coupling at which the clamped ground energy crosses zero.

    Root of u(1; 0, lambda) in lambda.  At eps = 0 the series sums to
    J1(2 sqrt(2 lambda)) / sqrt(2 lambda), so the result equals
    (first zero of J1)^2 / 8; tests verify this against an independent
    Bessel-zero computation.
    """
    if not tol > 0:
        raise ValueError("tol must be > 0")

    def u1(lam):
        trunc = _choose_truncation(lam, 0.0, tol)
        return series_boundary_value(0.0, lam, trunc)

    lam, step = 0.0, 0.25
    f_lo = u1(lam)
    while lam < 10.0:
        f_next = u1(lam + step)
        if f_lo * f_next < 0.0:
            return brentq(u1, lam, lam + step, xtol=tol,
                          rtol=4 * np.finfo(float).eps)
        lam, f_lo = lam + step, f_next
    raise BracketError("no zero crossing of u(1; 0, lambda) in [0, 10]")
