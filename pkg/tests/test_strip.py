import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from xiloop.config import EvalConfig
from xiloop.errors import DomainError
from xiloop.special import crude_bound
from xiloop.strip import (
    Method,
    StripPoint,
    XiSeriesTerm,
    psi,
    psi_identity_check,
    psi_prime,
    terms_needed,
    xi_critical_line,
    xi_real_form,
    xi_strip_point,
    xi_theta_form,
    _gamma_coefficient,
)
from xiloop.zeta import xi_classical

# mpmath, 30 digits
XI_HALF = 0.497120778188314109912773739685
XI_12 = 0.0088236507107726627875332054793
PSI_1 = 0.0432174056066540072876580607551
PSI_PRIME_1 = -0.135804351401663501821914515189
PARTIAL_SUM = 0.651860886727985
XI_OFF_LINE = {
    (0.3, 2.0): 0.453884919778390666651358677684 + 0.0126680439170781687370372301188j,
    (-0.4, -3.0): 0.404086583101846503161843576151 + 0.0227611997289533439609419905552j,
    (0.3, 5.0): 0.275482632136174394107828512115 + 0.0199783060291231907155533132509j,
}

TIGHT = EvalConfig(epsilon=1e-12)
GRID = [(x0, t0) for x0 in np.linspace(-0.5, 0.5, 5) for t0 in np.linspace(-10, 10, 5)]


def test_point_conversion():
    p = StripPoint.from_s(0.8, 2.0)
    assert p.x0 == pytest.approx(0.3)
    assert p.z0 == complex(p.x0, 2.0)
    assert p.s == pytest.approx(0.8 + 2j)


def test_point_domain():
    with pytest.raises(DomainError):
        StripPoint(0.6, 1.0)


def test_terms_needed_default():
    assert terms_needed(EvalConfig()) == 3
    assert terms_needed(EvalConfig(n_max=2)) == 2


class TestCriticalLine:
    def test_origin(self):
        r = xi_critical_line(0.0)
        assert r.method is Method.INCGAMMA
        assert r.value.real == pytest.approx(0.49712080, abs=5e-8)
        assert abs(r.value.real - XI_HALF) <= r.error_estimate

    def test_twelve(self):
        r = xi_critical_line(12.0)
        assert r.value.real == pytest.approx(0.008823639, abs=5e-8)
        assert abs(r.value.real - XI_12) <= r.error_estimate

    def test_even(self):
        assert xi_critical_line(-12.0).value == xi_critical_line(12.0).value

    def test_first_term_partial_sum(self):
        total = 2 * sum(15 * math.pi * n * n * math.exp(-math.pi * n * n) / 6.25 for n in range(1, 6))
        assert total == pytest.approx(PARTIAL_SUM, abs=1e-15)
        assert total == pytest.approx(0.65186088, abs=1e-7)
        theta_part = 2 * sum(t.theta_term.real for t in xi_critical_line(0.0, n_terms=5).term_diagnostics)
        assert theta_part == pytest.approx(total, rel=1e-14)

    def test_terms_are_real(self):
        for t in xi_critical_line(7.5).term_diagnostics:
            assert t.conj_term == t.upper_term.conjugate()
            assert t.total.imag == 0.0

    @pytest.mark.parametrize("t0", [0.0, 6.0, 12.0, 17.3])
    def test_reality_without_folding(self, t0):
        # the strip form computes the third summand independently
        r = xi_strip_point(StripPoint(0.0, t0))
        assert abs(r.value.imag) <= 1e-10

    def test_converged_flag_tracks_series(self):
        starved = EvalConfig(m_cap=5)
        assert not xi_critical_line(3.0, starved).converged
        assert xi_critical_line(3.0).converged

    def test_term_structure(self):
        r = xi_critical_line(2.0)
        assert r.n_used == 3
        assert [t.n for t in r.term_diagnostics] == [1, 2, 3]
        assert all(isinstance(t, XiSeriesTerm) for t in r.term_diagnostics)


class TestRealForm:
    def test_origin_matches_series(self):
        assert xi_real_form(0.0).value.real == pytest.approx(xi_critical_line(0.0).value.real, abs=1e-8)

    def test_twelve(self):
        assert xi_real_form(12.0).value.real == pytest.approx(0.008823639, abs=1e-6)
        assert xi_real_form(12.0).value.real == pytest.approx(XI_12, abs=1e-9)

    def test_coefficients_at_origin(self):
        t0 = 0.0
        assert (5 - 4 * t0 * t0) / (25 + 4 * t0 * t0) == 0.2
        assert 12 * t0 / (25 + 4 * t0 * t0) == 0.0


class TestStripPoint:
    def test_reduces_to_critical_line(self):
        a = xi_strip_point(StripPoint(0.0, 12.0)).value
        b = xi_critical_line(12.0).value
        assert abs(a - b) <= 1e-10

    def test_reflection(self):
        a = xi_strip_point(StripPoint(0.3, 5.0)).value
        b = xi_strip_point(StripPoint(-0.3, -5.0)).value
        assert abs(a - b) <= 1e-10

    @pytest.mark.parametrize("key", sorted(XI_OFF_LINE))
    def test_off_line_values(self, key):
        r = xi_strip_point(StripPoint(*key))
        assert abs(r.value - XI_OFF_LINE[key]) <= r.error_estimate
        assert abs(r.value - XI_OFF_LINE[key]) <= 1e-9

    def test_edge_of_strip_is_one_half(self):
        # oracle: symmetric average of the classical product at s = 1 +- h
        # cancels the first-order term; the analytic limit is 1/2
        h = 1e-6
        oracle = 0.5 * (xi_classical(1 + h) + xi_classical(1 - h)).real
        assert oracle == pytest.approx(0.5, abs=1e-9)
        value = xi_strip_point(StripPoint(0.5, 0.0), TIGHT).value
        assert abs(value - oracle) <= 1e-9
        assert abs(value - 0.5) <= 1e-11

    @pytest.mark.parametrize("x0, t0", GRID)
    def test_evenness(self, x0, t0):
        a = xi_strip_point(StripPoint(x0, t0)).value
        b = xi_strip_point(StripPoint(-x0, -t0)).value
        assert abs(a - b) <= 1e-10 * max(abs(a), 1e-300)

    @pytest.mark.parametrize("x0, t0", GRID)
    def test_conjugation(self, x0, t0):
        a = xi_strip_point(StripPoint(x0, t0)).value
        b = xi_strip_point(StripPoint(x0, -t0)).value
        assert abs(b - a.conjugate()) <= 1e-10 * max(abs(a), 1e-300)

    @pytest.mark.parametrize("x0, t0", GRID)
    def test_truncation_soundness(self, x0, t0):
        r = xi_strip_point(StripPoint(x0, t0))
        more = xi_strip_point(StripPoint(x0, t0), n_terms=r.n_used + 2)
        assert abs(r.value - more.value) < r.error_estimate

    @pytest.mark.parametrize("x0, t0", GRID)
    def test_tail_dominance(self, x0, t0):
        z0 = complex(x0, t0)
        r = xi_strip_point(StripPoint(x0, t0), n_terms=6)
        for term in r.term_diagnostics[1:]:
            coef = abs(_gamma_coefficient(term.n, z0)) + abs(_gamma_coefficient(term.n, -z0))
            assert abs(term.total) <= (coef + 2) * crude_bound(1.25, term.n)

    def test_error_estimate_covers_tail_bound(self):
        z0 = complex(0.2, 4.0)
        r = xi_strip_point(StripPoint(0.2, 4.0))
        n = r.n_used + 1
        coef = abs(_gamma_coefficient(n, z0)) + abs(_gamma_coefficient(n, -z0))
        assert r.error_estimate >= 2 * coef * crude_bound(1.25, n)


class TestThetaForm:
    def test_origin(self):
        r = xi_theta_form(StripPoint(0.0, 0.0))
        assert r.value.real == pytest.approx(0.49712077, abs=1e-7)
        assert abs(r.value - XI_HALF) <= 1e-11

    def test_twelve(self):
        r = xi_theta_form(StripPoint(0.0, 12.0))
        assert r.value.real == pytest.approx(0.008823639, abs=1e-6)
        assert abs(r.value - XI_12) <= r.error_estimate

    def test_symmetric(self):
        a = xi_theta_form(StripPoint(0.25, 3.0)).value
        b = xi_theta_form(StripPoint(-0.25, -3.0)).value
        assert abs(a - b) <= 1e-10

    @pytest.mark.parametrize("key", sorted(XI_OFF_LINE))
    def test_off_line_values(self, key):
        assert abs(xi_theta_form(StripPoint(*key)).value - XI_OFF_LINE[key]) <= 1e-10


class TestPsi:
    def test_identity(self):
        assert psi_identity_check() <= 1e-12

    def test_psi_one(self):
        assert psi(1.0) == pytest.approx(PSI_1, abs=1e-15)

    def test_psi_prime_one(self):
        assert psi_prime(1.0) == pytest.approx(PSI_PRIME_1, abs=1e-15)
        assert -psi_prime(1.0) == pytest.approx(0.65186088 / 4.8, abs=1e-6)

    @settings(max_examples=30, deadline=None)
    @given(st.floats(min_value=0.5, max_value=4.0))
    def test_derivative_consistency(self, y):
        h = 1e-5
        numeric = (psi(y + h) - psi(y - h)) / (2 * h)
        assert numeric == pytest.approx(psi_prime(y), rel=1e-7, abs=1e-12)


@pytest.mark.parametrize("t0", range(21))
def test_agreement_across_methods(t0):
    p = StripPoint(0.0, float(t0))
    values = {
        "incgamma": xi_critical_line(t0).value,
        "realform": xi_real_form(t0).value,
        "strip": xi_strip_point(p).value,
        "theta": xi_theta_form(p).value,
        "classical": xi_classical(complex(0.5, t0)),
    }
    names = list(values)
    pairs = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
    dev = max(abs(values[a] - values[b]) for a, b in pairs)
    dev_without_real = max(abs(values[a] - values[b]) for a, b in pairs if "realform" not in (a, b))
    assert dev <= 1e-6
    assert dev_without_real <= 1e-7


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=-0.5, max_value=0.5), st.floats(min_value=-15, max_value=15))
def test_strip_matches_classical(x0, t0):
    s = complex(x0 + 0.5, t0)
    if abs(s - 1) < 1e-3 or s.real <= 0.0:
        return
    r = xi_strip_point(StripPoint(x0, t0))
    assert abs(r.value - xi_classical(s)) <= max(r.error_estimate, 1e-12 * (1 + abs(r.value)))
