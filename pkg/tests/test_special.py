import numpy as np
from scipy.special import j0, j1, jn_zeros, sici

from confined_hydrogen.special import (bessel_j0, bessel_j1, cin,
                                       first_zero_j1)

EULER_GAMMA = 0.5772156649015328606


def test_bessel_series_match_scipy():
    # Series accuracy degrades by cancellation for large arguments; the
    # oracle only needs the neighbourhood of the first J1 zero (~3.83).
    for x in (0.1, 1.0, 3.8, 7.5):
        assert abs(bessel_j0(x) - j0(x)) < 1e-13
        assert abs(bessel_j1(x) - j1(x)) < 1e-13


def test_first_j1_zero():
    z = first_zero_j1()
    assert abs(z - jn_zeros(1, 1)[0]) < 1e-12
    assert abs(bessel_j1(z)) < 1e-14


def test_cin_matches_cosine_integral():
    for z in (0.25, 1.0, 2 * np.pi, 10.0):
        _, ci = sici(z)
        assert abs(cin(z) - (EULER_GAMMA + np.log(z) - ci)) < 1e-12
