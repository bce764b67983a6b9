"""Recompute the frozen reference constants used across the suite with mpmath.

If mpmath ever disagreed with a frozen constant, every test built on that
constant would be suspect; this module keeps them honest.
"""

import mpmath
import pytest

import test_special as sp
import test_strip as st
import test_zeta as zt
from test_cli import ZERO_1, ZERO_2

mpmath.mp.dps = 30
PI = mpmath.pi


def xi(s):
    s = mpmath.mpmathify(s)
    return s * (s - 1) / 2 * mpmath.gamma(s / 2) * PI ** (-s / 2) * mpmath.zeta(s)


def close(a, b, tol=1e-14):
    return abs(complex(a) - complex(b)) <= tol * max(1.0, abs(complex(b)))


def test_gamma_constants():
    assert close(mpmath.gamma(mpmath.mpf(9) / 4), sp.GAMMA_9_4)
    assert close(mpmath.gammainc(mpmath.mpf(9) / 4, 0, PI), sp.LOWER_9_4_PI)
    assert close(mpmath.gammainc(mpmath.mpc(2.25, 6), 0, PI), sp.LOWER_9_4_6I_PI)


@pytest.mark.parametrize("key", sorted(sp.UPPER, key=str))
def test_upper_constants(key):
    z, n = key
    expected = mpmath.gammainc(mpmath.mpc(z) + 1, n * PI)
    assert abs(complex(expected) - sp.UPPER[key]) <= 1e-15 * abs(sp.UPPER[key])


def test_zeta_constants():
    assert close(mpmath.zeta(0.5), zt.ZETA_HALF)
    assert close(mpmath.zeta(mpmath.mpc(0.5, 12)), zt.ZETA_12)


def test_xi_constants():
    assert close(xi(mpmath.mpf(1) / 2), st.XI_HALF)
    assert close(xi(mpmath.mpc(0.5, 12)).real, st.XI_12)
    for (x0, t0), value in st.XI_OFF_LINE.items():
        assert close(xi(mpmath.mpc(mpmath.mpf(x0) + mpmath.mpf(1) / 2, t0)), value)


def test_psi_constants():
    psi = mpmath.nsum(lambda n: mpmath.exp(-PI * n * n), [1, mpmath.inf])
    dpsi = -mpmath.nsum(lambda n: PI * n * n * mpmath.exp(-PI * n * n), [1, mpmath.inf])
    assert close(psi, st.PSI_1)
    assert close(dpsi, st.PSI_PRIME_1)
    assert abs(mpmath.mpf(1) / 2 + psi + 4 * dpsi) < mpmath.mpf(10) ** -25


def test_partial_sum_constant():
    total = mpmath.mpf(24) / 5 * mpmath.fsum(PI * n * n * mpmath.exp(-PI * n * n) for n in range(1, 6))
    assert close(total, st.PARTIAL_SUM)


def test_zero_constants():
    assert close(mpmath.zetazero(1).imag, ZERO_1)
    assert close(mpmath.zetazero(2).imag, ZERO_2)


def test_crude_bound_table():
    values = [2 * PI ** 2 * n ** 4 * mpmath.exp(-PI * n * n) for n in range(1, 5)]
    expected = [0.853008555768885, 0.00110139806294226, 8.40286865892165e-10, 7.47391311619069e-19]
    for v, e in zip(values, expected):
        assert abs(v - e) <= 1e-13 * e


def test_tail_grid_point():
    def bound(T):
        T = mpmath.mpf(T)
        return 10 * T ** 2.5 * mpmath.exp(-PI * T / 2)

    grid = [mpmath.mpf(k) / 2 for k in range(4, 200)]
    first = next(T for T in grid if bound(T) < mpmath.mpf("1e-12"))
    assert first == 24.5
    assert abs(bound(30) - mpmath.mpf("1.69e-16")) < mpmath.mpf("1e-18")
