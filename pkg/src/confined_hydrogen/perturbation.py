"""First-order energies for the confined atom, moving and clamped nucleus.

All four variants share the structure eps(lambda) = kinetic - coulomb *
lambda, with the kinetic part known in closed form and the Coulomb
coefficient either a rational number (polynomial trial states) or a
quadrature result (particle-in-a-sphere "sinc" states).  The sinc-state
coefficients are recomputed by quadrature rather than hard-coded; the
literature values serve only as test expectations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .domain import EnergyEstimate, Method, ModelParams, QuadratureSpec
from .quadrature import integrate_legendre_2d, integrate_radial

# Single-particle ground-state energy in the unit sphere, pi^2 / 2.
SPHERE_GROUND_ENERGY = math.pi ** 2 / 2

# Closed-form constants of the polynomial trial states (1 - r) factors.
POLY_KINETIC = Fraction(5)
POLY_COULOMB_PAIR = Fraction(25, 14)
POLY_COULOMB_CLAMPED = Fraction(5, 2)


@dataclass(frozen=True)
class FirstOrderCoefficients:
    """Linear-energy coefficients: eps = kinetic_total - coulomb * lambda.

    For the moving-nucleus variants `kinetic` is the coefficient of
    (1 + beta); for the clamped variants it is the absolute kinetic term.
    """

    kinetic: float
    coulomb: float

    def __post_init__(self):
        if not (self.kinetic > 0 and self.coulomb > 0):
            raise ValueError("first-order coefficients must be positive")


def sinc_pair_density(re, rn):
    """Squared two-particle ground state of the interaction-free box.

    phi = 2 sin(pi r_e) sin(pi r_n) / (r_e r_n), normalised so that
    int phi^2 re^2 rn^2 dre drn = 1.
    """
    se = np.sin(np.pi * re) / re
    sn = np.sin(np.pi * rn) / rn
    return 4.0 * se * se * sn * sn


def sinc_pair_coulomb(spec: QuadratureSpec | None = None):
    """Coulomb coefficient <1/r> of the sinc pair state, with error data.

    Returned as (value, error, converged): the wedge integral divided by
    the (factorised) norm so that no absolute normalisation convention
    enters.
    """
    raw = integrate_legendre_2d(sinc_pair_density, spec)
    norm_1d = integrate_radial(lambda x: 2.0 * np.sin(np.pi * x) ** 2, 0.0, 1.0, spec)
    norm = norm_1d.value ** 2
    value = raw.value / norm
    err = raw.error / norm + 2.0 * abs(value) * norm_1d.error / norm_1d.value
    return value, err, raw.converged and norm_1d.converged


def sinc_clamped_coulomb(spec: QuadratureSpec | None = None):
    """Coulomb coefficient <1/r> of the clamped sinc state sqrt(2) sin(pi r)/r."""
    raw = integrate_radial(lambda r: 2.0 * np.sin(np.pi * r) ** 2 / r, 0.0, 1.0, spec)
    norm = integrate_radial(lambda r: 2.0 * np.sin(np.pi * r) ** 2, 0.0, 1.0, spec)
    value = raw.value / norm.value
    err = raw.error / norm.value + abs(value) * norm.error / norm.value
    return value, err, raw.converged and norm.converged


def moving_pt_sinc(params: ModelParams,
                   spec: QuadratureSpec | None = None) -> EnergyEstimate:
    """First-order energy of the moving-nucleus model, sinc pair state.

    eps = (pi^2 / 2)(1 + beta) - C lambda with C from quadrature.
    """
    coulomb, err, ok = sinc_pair_coulomb(spec)
    eps = SPHERE_GROUND_ENERGY * (1.0 + params.beta) - coulomb * params.lam
    return EnergyEstimate(eps, Method.MOVING_PT_SINC, ok, err * params.lam)


def moving_pt_poly(params: ModelParams) -> EnergyEstimate:
    """First-order energy of the moving-nucleus model, polynomial state.

    Exact closed form eps = 5 (1 + beta) - (25/14) lambda.
    """
    eps = 5.0 * (1.0 + params.beta) - (25.0 / 14.0) * params.lam
    return EnergyEstimate(eps, Method.MOVING_PT_POLY)


def clamped_pt_poly(lam: float) -> EnergyEstimate:
    """Clamped-nucleus polynomial trial state: eps = 5 - (5/2) lambda."""
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    eps = 5.0 - 2.5 * lam
    return EnergyEstimate(eps, Method.CLAMPED_PT_POLY)


def clamped_pt_sinc(lam: float,
                    spec: QuadratureSpec | None = None) -> EnergyEstimate:
    """Clamped-nucleus sinc state: eps = pi^2/2 - C_H lambda via quadrature."""
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    coulomb, err, ok = sinc_clamped_coulomb(spec)
    eps = SPHERE_GROUND_ENERGY - coulomb * lam
    return EnergyEstimate(eps, Method.CLAMPED_PT_SINC, ok, err * lam)


def first_order_coefficients(method: Method, beta: float = 0.0,
                             spec: QuadratureSpec | None = None) -> FirstOrderCoefficients:
    """The (kinetic, coulomb) pair for one of the four PT variants."""
    if method is Method.MOVING_PT_SINC:
        return FirstOrderCoefficients(SPHERE_GROUND_ENERGY, sinc_pair_coulomb(spec)[0])
    if method is Method.MOVING_PT_POLY:
        return FirstOrderCoefficients(float(POLY_KINETIC), float(POLY_COULOMB_PAIR))
    if method is Method.CLAMPED_PT_POLY:
        return FirstOrderCoefficients(float(POLY_KINETIC), float(POLY_COULOMB_CLAMPED))
    if method is Method.CLAMPED_PT_SINC:
        return FirstOrderCoefficients(SPHERE_GROUND_ENERGY, sinc_clamped_coulomb(spec)[0])
    raise ValueError(f"not a first-order perturbation method: {method}")


def pt_critical_lambda(method: Method, params: ModelParams,
                       spec: QuadratureSpec | None = None) -> float:
    """Root of the linear eps(lambda): kinetic_total / coulomb.

    The lam field of params is ignored.  Polynomial variants are evaluated
    in exact rational arithmetic and rounded once.
    """
    beta = params.beta
    if method is Method.MOVING_PT_POLY:
        return float(POLY_KINETIC * (1 + Fraction(beta)) / POLY_COULOMB_PAIR)
    if method is Method.CLAMPED_PT_POLY:
        return float(POLY_KINETIC / POLY_COULOMB_CLAMPED)
    if method is Method.MOVING_PT_SINC:
        return SPHERE_GROUND_ENERGY * (1.0 + beta) / sinc_pair_coulomb(spec)[0]
    if method is Method.CLAMPED_PT_SINC:
        return SPHERE_GROUND_ENERGY / sinc_clamped_coulomb(spec)[0]
    raise ValueError(f"not a first-order perturbation method: {method}")
