"""Ground-state energy of a hydrogen atom in an impenetrable spherical box.

The package treats two variants of the model in dimensionless units
(lengths in box radii, energies in hbar^2 / (m_e R^2)):

* moving nucleus: electron and nucleus are both dynamical, each confined
  to the unit ball, coupled by -lambda/r;
* clamped nucleus: the nucleus sits at the box centre.

Available methods: first-order perturbation theory with two choices of
unperturbed state, a one-parameter variational family in the triangle
coordinates (r_e, r_n, r), and a numerically exact power-series solver
for the clamped model.
"""

from .clamped_series import (SeriesSolution, clamped_critical_lambda,
                             clamped_ground_energy, series_boundary_value,
                             solve_ground_state)
from .domain import (BracketError, ConvergenceError, EnergyEstimate,
                     HYDROGEN_BETA, Method, ModelParams, QuadratureSpec,
                     default_hydrogen_params)
from .perturbation import (FirstOrderCoefficients, clamped_pt_poly,
                           clamped_pt_sinc, first_order_coefficients,
                           moving_pt_poly, moving_pt_sinc,
                           pt_critical_lambda)
from .quadrature import (IntegralResult, integrate_legendre_2d,
                         integrate_radial, integrate_triangle_domain)
from .variational import (TrialState, VariationalPoint, expectations,
                          free_atom_limit_check, kinetic_action,
                          minimize_energy, parametric_curve,
                          variational_critical_lambda)

__all__ = [
    "BracketError", "ConvergenceError", "EnergyEstimate",
    "FirstOrderCoefficients", "HYDROGEN_BETA", "IntegralResult", "Method",
    "ModelParams", "QuadratureSpec", "SeriesSolution", "TrialState",
    "VariationalPoint", "clamped_critical_lambda", "clamped_ground_energy",
    "clamped_pt_poly", "clamped_pt_sinc", "default_hydrogen_params",
    "expectations", "first_order_coefficients", "free_atom_limit_check",
    "integrate_legendre_2d", "integrate_radial", "integrate_triangle_domain",
    "kinetic_action", "minimize_energy", "moving_pt_poly", "moving_pt_sinc",
    "parametric_curve", "pt_critical_lambda", "series_boundary_value",
    "solve_ground_state", "variational_critical_lambda",
]

__version__ = "0.1.0"
