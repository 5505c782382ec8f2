"""Shared model parameters, result types and error classes.

Everything is dimensionless: lengths are measured in units of the box
radius R, masses in units of the electron mass m_e, and energies in units
of hbar^2 / (m_e R^2).  In these units the two-particle Hamiltonian is

    H = -(1/2) lap_e - (beta/2) lap_n - lambda / r,

where beta = m_e / m_n is the electron-to-nucleus mass ratio, lambda is
the confinement/coupling strength (proportional to the box radius), and
r = |r_e - r_n| is the electron-nucleus separation.  States vanish on the
box boundary r_e = 1 and r_n = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

# CODATA 2018 proton-electron mass ratio.
HYDROGEN_BETA = 1.0 / 1836.15267343


class ConvergenceError(RuntimeError):
    """A numerical routine failed to reach its requested tolerance."""


class BracketError(RuntimeError):
    """A root/minimum scan found no sign change on the searched interval."""


class Method(Enum):
    """Tags for the energy methods implemented by this package."""

    MOVING_PT_SINC = "moving-sinc"
    MOVING_PT_POLY = "moving-poly"
    CLAMPED_PT_POLY = "clamped-poly"
    CLAMPED_PT_SINC = "clamped-sinc"
    MOVING_VARIATIONAL = "moving-variational"
    CLAMPED_SERIES = "clamped-series"


@dataclass(frozen=True)
class ModelParams:
    """Dimensionless model parameters.

    beta = 0 encodes an infinitely heavy (clamped-limit) nucleus; beta is a
    free parameter so that e.g. beta = 1 models a positronium-like system.
    """

    beta: float
    lam: float

    def __post_init__(self):
        if not self.beta >= 0.0:
            raise ValueError(f"mass ratio beta must be >= 0, got {self.beta}")
        if not self.lam >= 0.0:
            raise ValueError(f"coupling lambda must be >= 0, got {self.lam}")

    def to_json(self) -> str:
        return json.dumps({"beta": self.beta, "lam": self.lam})

    @classmethod
    def from_json(cls, text: str) -> "ModelParams":
        data = json.loads(text)
        return cls(beta=data["beta"], lam=data["lam"])


@dataclass(frozen=True)
class QuadratureSpec:
    """Node counts, refinement budget and tolerance for the integrators.

    base_order Gauss-Legendre nodes are used per dimension; the order is
    doubled up to max_refinements times until the relative change of the
    integral drops below rel_tol.
    """

    base_order: int = 32
    max_refinements: int = 4
    rel_tol: float = 1e-10

    def __post_init__(self):
        if self.base_order < 2:
            raise ValueError("base_order must be >= 2")
        if self.max_refinements < 0:
            raise ValueError("max_refinements must be >= 0")
        if not self.rel_tol > 0.0:
            raise ValueError("rel_tol must be > 0")


@dataclass(frozen=True)
class EnergyEstimate:
    """A dimensionless ground-state energy with convergence metadata.

    residual is the dominant numerical error measure of the producing
    operation (quadrature error estimate, boundary residual, ...); it is
    0.0 for closed-form results.
    """

    epsilon: float
    method: Method
    converged: bool = True
    residual: float = 0.0


def default_hydrogen_params(lam: float) -> ModelParams:
    """Model parameters for hydrogen (beta = m_e/m_p) at coupling lam."""
    return ModelParams(beta=HYDROGEN_BETA, lam=lam)
