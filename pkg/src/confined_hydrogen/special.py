"""Self-contained special-function oracles.

These are deliberately independent of the quadrature and solver modules:
they provide second routes to numbers the solvers also produce, so tests
can compare two implementations that share no code.
"""

from __future__ import annotations

import math


def bessel_j0(x: float) -> float:
    """J0 by its power series (accurate for |x| up to ~8)."""
    q = -0.25 * x * x
    term = 1.0
    total = 1.0
    for m in range(1, 60):
        term *= q / (m * m)
        total += term
        if abs(term) < 1e-18 * abs(total) + 1e-300:
            break
    return total


def bessel_j1(x: float) -> float:
    """J1 by its power series (accurate for |x| up to ~8)."""
    q = -0.25 * x * x
    term = 0.5 * x
    total = term
    for m in range(1, 60):
        term *= q / (m * (m + 1))
        total += term
        if abs(term) < 1e-18 * abs(total) + 1e-300:
            break
    return total


def first_zero_j1(tol: float = 1e-13) -> float:
    """First positive zero of J1: bracket by bisection, refine by Newton.

    Uses J1'(x) = J0(x) - J1(x)/x.
    """
    lo, hi = 3.0, 4.5
    if bessel_j1(lo) <= 0 or bessel_j1(hi) >= 0:
        raise RuntimeError("first J1 zero not bracketed by (3, 4.5)")
    for _ in range(20):
        mid = 0.5 * (lo + hi)
        if bessel_j1(mid) > 0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(60):
        step = bessel_j1(x) / (bessel_j0(x) - bessel_j1(x) / x)
        x -= step
        if abs(step) < tol:
            break
    return x


def cin(z: float) -> float:
    """Entire cosine integral Cin(z) = int_0^z (1 - cos t)/t dt.

    Evaluated by its power series sum_{k>=1} (-1)^(k+1) z^(2k)/(2k (2k)!),
    which equals gamma + ln z - Ci(z).
    """
    z2 = z * z
    total = 0.0
    sign = 1.0
    # fact_term tracks z^(2k) / (2k)!; contribution is fact_term / (2k)
    fact_term = z2 / 2.0
    k = 1
    while k < 200:
        total += sign * fact_term / (2 * k)
        if fact_term / (2 * k) < 1e-18 * abs(total) + 1e-300:
            break
        fact_term *= z2 / ((2 * k + 1) * (2 * k + 2))
        sign = -sign
        k += 1
    return total
