"""Gauss-Legendre integration kernels for the confined two-particle problem.

Three geometries are needed:

* 1-D radial integrals on an interval (norms and clamped-model averages),
* 2-D integrals over the ordered wedges of the unit square with weights
  r_e r_n^2 (r_n <= r_e) and r_e^2 r_n (r_n >= r_e), which is the radial
  reduction of int f(r_e, r_n) / max(r_e, r_n) over two unit balls,
* 3-D integrals over the triangle-inequality domain
  0 <= r_e <= 1, 0 <= r_n <= 1, |r_e - r_n| <= r <= r_e + r_n
  with the volume factor r_e r_n r folded into the weights.

Constant angular prefactors (16 pi^2 for the 2-D recipe, 8 pi^2 for the
3-D one) are deliberately carried as 1: every physical quantity in this
package is an expectation-value ratio over the same recipe, so the
constants cancel.  Absolute normalisation is never required.

Integrands are evaluated on numpy arrays and must broadcast; Gauss nodes
are strictly interior, so integrable 1/r-type factors are always finite
at evaluation points.  Convergence is judged by successive order
doubling; failure to converge is reported through the result flag, never
raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .domain import QuadratureSpec

# Default tolerances: 1e-10 for 1-D/2-D kernels, 1e-9 for the 3-D kernel.
DEFAULT_SPEC = QuadratureSpec()
DEFAULT_SPEC_3D = QuadratureSpec(rel_tol=1e-9)

# Above this many nodes the 3-D grid is evaluated in slabs to bound memory.
_CHUNK_POINTS = 1 << 21

RadialIntegrand = Callable[[np.ndarray], np.ndarray]
PairIntegrand = Callable[[np.ndarray, np.ndarray], np.ndarray]
TriangleIntegrand = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class IntegralResult:
    """Value and error estimate of one integral.

    error is the change between the two finest refinement levels; when
    converged it satisfies error <= rel_tol * |value| up to the absolute
    floor used for cancellation-dominated (essentially zero) integrals.
    """

    value: float
    error: float
    converged: bool
    order: int

    def require(self) -> float:
        from .domain import ConvergenceError

        if not self.converged:
            raise ConvergenceError(
                f"quadrature did not converge (order {self.order}, "
                f"value {self.value!r}, error estimate {self.error:.3e})"
            )
        return self.value


@dataclass(frozen=True)
class StackResult:
    """Joint result for several integrands sharing one node set."""

    values: np.ndarray
    errors: np.ndarray
    converged: bool
    order: int


@lru_cache(maxsize=None)
def _unit_rule(order: int):
    """Gauss-Legendre nodes and weights mapped to (0, 1)."""
    t, u = np.polynomial.legendre.leggauss(order)
    return (t + 1.0) / 2.0, u / 2.0


def _radial_sums(h, lo, hi, order):
    x, w = _unit_rule(order)
    r = lo + (hi - lo) * x
    vals = np.asarray(h(r), dtype=float) * ((hi - lo) * w)
    return np.array([vals.sum()]), np.array([np.abs(vals).sum()])


def _wedge_sums(g, order):
    # Ordered wedge r_n <= r_e; the mirrored wedge carries the identical
    # numeric weight r_e r_n^2, so it is evaluated with swapped arguments.
    x, w = _unit_rule(order)
    re = x[:, None]
    rn = re * x[None, :]
    weight = (w[:, None] * (re * w[None, :])) * (re * rn * rn)
    vals = (np.asarray(g(re, rn), dtype=float)
            + np.asarray(g(rn, re), dtype=float)) * weight
    return np.array([vals.sum()]), np.array([np.abs(vals).sum()])


def _triangle_sums(fstack, m, order):
    """Accumulate m integrands over both ordered 3-D sub-regions.

    fstack(re, rn, r) returns an array whose leading axis has length m.
    The sub-region r_e <= r_n is the exact mirror of r_n <= r_e and is
    evaluated with swapped radial arguments on the same node set.
    """
    x, w = _unit_rule(order)
    totals = np.zeros(m)
    masses = np.zeros(m)
    chunk = max(1, _CHUNK_POINTS // (order * order))
    for i0 in range(0, order, chunk):
        i1 = min(order, i0 + chunk)
        re = x[i0:i1, None, None]
        rn = re * x[None, :, None]
        # Inner variable r spans [re - rn, re + rn]; half-width rn.
        r = re + rn * (2.0 * x[None, None, :] - 1.0)
        weight = (w[i0:i1, None, None] * (re * w[None, :, None])
                  * (2.0 * rn * w[None, None, :]))
        weight = weight * (re * rn * r)
        for a, b in ((re, rn), (rn, re)):
            vals = np.asarray(fstack(a, b, r), dtype=float)
            vals = np.broadcast_to(vals, (m,) + weight.shape)
            totals += np.einsum("mijk,ijk->m", vals, weight)
            masses += np.einsum("mijk,ijk->m", np.abs(vals), weight)
    return totals, masses


def _refine(sums_at_order, spec: QuadratureSpec):
    """Double the order until all components stabilise to rel_tol.

    The convergence test carries an absolute floor of 1e-14 times the
    integral of |f|, which is the best achievable accuracy when the value
    itself vanishes by cancellation (e.g. antisymmetric integrands).
    """
    order = spec.base_order
    prev, _ = sums_at_order(order)
    errors = np.full_like(prev, np.inf)
    values, mass = prev, None
    converged = False
    for _ in range(spec.max_refinements):
        order *= 2
        values, mass = sums_at_order(order)
        errors = np.abs(values - prev)
        floor = 1e-14 * mass
        if np.all(errors <= spec.rel_tol * np.abs(values) + floor):
            converged = True
            break
        prev = values
    return values, errors, converged, order


def integrate_radial(h: RadialIntegrand, lo: float, hi: float,
                     spec: QuadratureSpec | None = None) -> IntegralResult:
    """Integrate h(r) over (lo, hi).

    Parameters
    ----------
    h : callable
        Vectorised integrand; endpoint singularities must be integrable
        (nodes are interior, so h is never evaluated at lo or hi).
    lo, hi : float
        Integration limits, lo < hi.
    spec : QuadratureSpec, optional
        Order/refinement/tolerance policy; defaults to DEFAULT_SPEC.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi})")
    spec = spec or DEFAULT_SPEC
    values, errors, ok, order = _refine(
        lambda n: _radial_sums(h, lo, hi, n), spec)
    return IntegralResult(values[0], errors[0], ok, order)


def integrate_legendre_2d(g: PairIntegrand,
                          spec: QuadratureSpec | None = None) -> IntegralResult:
    """Two-ball average of g(r_e, r_n) / max(r_e, r_n), radial form.

    Computes the sum of the two ordered wedge integrals

        int_0^1 int_0^re   g re rn^2 drn dre      (rn <= re)
      + int_0^1 int_re^1   g re^2 rn drn dre      (rn >= re)

    with the constant angular prefactor carried as 1 (see module docs).
    For g = phi^2 of a pair state normalised so that
    int g re^2 rn^2 = 1 this is the Coulomb expectation <1/r>.
    """
    spec = spec or DEFAULT_SPEC
    values, errors, ok, order = _refine(lambda n: _wedge_sums(g, n), spec)
    return IntegralResult(values[0], errors[0], ok, order)


def integrate_triangle_domain(f: TriangleIntegrand,
                              spec: QuadratureSpec | None = None) -> IntegralResult:
    """Integrate f(r_e, r_n, r) r_e r_n r over the triangle domain.

    The domain |r_e - r_n| <= r <= r_e + r_n (with both radii in the unit
    interval) is split into its two ordered sub-regions; the volume factor
    r_e r_n r is part of the rule, so 1/r-type singularities of f are
    cancelled.  The constant angular prefactor is carried as 1.
    """
    spec = spec or DEFAULT_SPEC_3D

    def stack(re, rn, r):
        return np.asarray(f(re, rn, r), dtype=float)[None, ...]

    values, errors, ok, order = _refine(
        lambda n: _triangle_sums(stack, 1, n), spec)
    return IntegralResult(values[0], errors[0], ok, order)


def integrate_triangle_stack(fstack, m: int,
                             spec: QuadratureSpec | None = None) -> StackResult:
    """Integrate m integrands over the triangle domain on shared nodes.

    fstack(re, rn, r) must return an array with leading axis m.  All
    components must converge for the joint result to be flagged converged;
    this keeps ratio quantities (expectation values, their alpha
    derivatives) on a single consistent grid.
    """
    spec = spec or DEFAULT_SPEC_3D
    values, errors, ok, order = _refine(
        lambda n: _triangle_sums(fstack, m, n), spec)
    return StackResult(values, errors, ok, order)
