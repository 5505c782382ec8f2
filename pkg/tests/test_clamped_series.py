import math

import numpy as np
import pytest

from confined_hydrogen.clamped_series import (clamped_critical_lambda,
                                              clamped_ground_energy,
                                              series_boundary_value,
                                              solve_ground_state)
from confined_hydrogen.domain import Method
from confined_hydrogen.special import bessel_j1, first_zero_j1

PI2_HALF = math.pi ** 2 / 2

# Frozen regression value computed by this solver at tol 1e-10 and
# validated against the finite-difference eigensolver below.
EPS_AT_UNIT_COUPLING = 2.3739908661036924


class TestBoundaryValue:
    def test_free_particle(self):
        # lambda = 0, eps = pi^2/2: u = sin(pi r)/pi vanishes at the wall.
        assert abs(series_boundary_value(PI2_HALF, 0.0, 60)) < 1e-12

    def test_critical_coupling_at_zero_energy(self):
        assert abs(series_boundary_value(0.0, 1.835246330, 60)) < 1e-9

    def test_bessel_identity(self):
        # At eps = 0 the series sums to J1(2 sqrt(2 lam)) / sqrt(2 lam).
        for lam in np.linspace(0.25, 5.0, 20):
            x = 2.0 * math.sqrt(2.0 * lam)
            expected = bessel_j1(x) / math.sqrt(2.0 * lam)
            assert abs(series_boundary_value(0.0, lam, 120) - expected) < 1e-12

    def test_short_truncation_rejected(self):
        with pytest.raises(ValueError):
            series_boundary_value(1.0, 1.0, 5)


class TestGroundEnergy:
    def test_free_particle_in_sphere(self):
        est = clamped_ground_energy(0.0)
        assert est.method is Method.CLAMPED_SERIES
        assert est.converged
        assert abs(est.epsilon - PI2_HALF) < 1e-10

    def test_vanishes_at_critical_coupling(self):
        assert abs(clamped_ground_energy(1.835246330).epsilon) < 1e-8

    def test_unit_coupling_regression(self):
        est = clamped_ground_energy(1.0)
        assert est.converged
        assert abs(est.epsilon - EPS_AT_UNIT_COUPLING) < 1e-9
        # strictly below the first-order sinc bound
        assert est.epsilon < 2.497148808

    def test_unit_coupling_against_grid_eigensolver(self):
        # Independent oracle: Dirichlet finite differences on the reduced
        # radial equation, Richardson-extrapolated over two grids.
        def fd_ground(lam, n):
            h = 1.0 / n
            r = h * np.arange(1, n)
            main = 1.0 / h ** 2 - lam / r
            off = np.full(n - 2, -0.5 / h ** 2)
            vals = np.linalg.eigvalsh(np.diag(main) + np.diag(off, 1)
                                      + np.diag(off, -1))
            return vals[0]

        e1, e2 = fd_ground(1.0, 1000), fd_ground(1.0, 2000)
        richardson = (4.0 * e2 - e1) / 3.0
        assert abs(richardson - EPS_AT_UNIT_COUPLING) < 1e-6

    def test_exact_solution_at_coupling_two(self):
        # u = r (1 - r) exp(-r) solves the radial equation at lambda = 2
        # with eps = -1/2 and satisfies both boundary conditions.
        assert abs(clamped_ground_energy(2.0).epsilon + 0.5) < 1e-10

    def test_monotone_decreasing_in_coupling(self):
        grid = np.linspace(0.0, 3.0, 13)
        energies = [clamped_ground_energy(float(lam)).epsilon for lam in grid]
        assert all(a > b for a, b in zip(energies, energies[1:]))

    def test_truncation_continuity(self):
        sol = solve_ground_state(1.0, tol=1e-10)
        refined = series_boundary_value(sol.epsilon, 1.0, 4 * sol.truncation)
        assert abs(refined) < 1e-9

    def test_solution_metadata(self):
        sol = solve_ground_state(0.5, tol=1e-10)
        assert sol.converged
        assert sol.boundary_residual < 1e-9
        assert abs(sol.coefficients[-1]) < 1e-11
        assert sol.coefficients[0] == 1.0

    def test_negative_coupling_rejected(self):
        with pytest.raises(ValueError):
            clamped_ground_energy(-1.0)

    def test_large_coupling_free_atom_scaling(self):
        # The wall shift decays like exp(-2 lam) and saturates below the
        # solver tolerance around lam ~ 20, hence the noise floor.
        noise = 1e-11
        ratios = [clamped_ground_energy(lam).epsilon / lam ** 2
                  for lam in (5.0, 10.0, 20.0, 40.0)]
        assert all(a > b - noise for a, b in zip(ratios, ratios[1:]))
        assert all(r >= -0.5 - noise for r in ratios)
        assert abs(ratios[-1] / (-0.5) - 1.0) < 0.1


class TestCriticalLambda:
    def test_value_and_bessel_oracle(self):
        lc = clamped_critical_lambda(tol=1e-9)
        assert abs(lc - 1.835246330) < 1e-8
        assert abs(lc - first_zero_j1() ** 2 / 8.0) < 1e-9

    def test_ground_energy_vanishes_there(self):
        lc = clamped_critical_lambda(tol=1e-10)
        assert abs(clamped_ground_energy(lc).epsilon) < 1e-8

    def test_bad_tolerance_rejected(self):
        with pytest.raises(ValueError):
            clamped_critical_lambda(tol=0.0)
