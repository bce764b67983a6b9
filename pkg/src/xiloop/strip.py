"""xi inside the critical strip from incomplete-gamma series.

Points are given in the z-plane, z = s - 1/2, so the critical line is the
imaginary axis and the strip is |Re z| <= 1/2. With alpha_n = pi n^2 and
c(z) = alpha_n^{-z/2} (1/2 - z) / (pi^{1/4} sqrt(n) (5/2 + z)),

    xi(z) = 2 sum_n [ 15 alpha_n e^{-alpha_n} / (25/4 - z^2)
                      - c(z) Gamma(9/4 + z/2, alpha_n)
                      - c(-z) Gamma(9/4 - z/2, alpha_n) ].
"""

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional

from .complex_core import cpow
from .config import EvalConfig
from .errors import DomainError
from .quadrature import adaptive_simpson
from .special import IncGammaParams, crude_bound, upper_inc_gamma

_PI_QUARTER_ROOT = math.pi ** 0.25
_UNIT_ROUNDOFF = 2.0 ** -53
# lambda-integrals of the real form run over [alpha, alpha + REAL_FORM_WINDOW]
REAL_FORM_WINDOW = 45.0
_TAIL_TERMS = 20


class Method(str, enum.Enum):
    INCGAMMA = "incgamma"
    REALFORM = "realform"
    STRIP = "strip"
    THETA = "theta"
    CLASSICAL = "classical"
    CONTOUR = "contour"


@dataclass(frozen=True)
class StripPoint:
    """A z-plane point z0 = x0 + i t0 with |x0| <= 1/2."""

    x0: float
    t0: float

    def __post_init__(self):
        if not abs(self.x0) <= 0.5:
            raise DomainError(f"|x0| must not exceed 1/2, got x0={self.x0!r}")
        if not math.isfinite(self.t0):
            raise DomainError("t0 must be finite")

    @classmethod
    def from_s(cls, sigma: float, t: float) -> "StripPoint":
        return cls(sigma - 0.5, t)

    @property
    def z0(self) -> complex:
        return complex(self.x0, self.t0)

    @property
    def s(self) -> complex:
        return complex(self.x0 + 0.5, self.t0)


@dataclass(frozen=True)
class XiSeriesTerm:
    """The three summands of the n-th bracket (before the overall factor 2)."""

    n: int
    theta_term: complex
    upper_term: complex
    conj_term: complex

    @property
    def total(self) -> complex:
        return self.theta_term + self.upper_term + self.conj_term


@dataclass
class XiResult:
    value: complex
    method: Method
    n_used: int
    term_diagnostics: List[XiSeriesTerm] = field(default_factory=list)
    error_estimate: float = 0.0
    converged: bool = True


def terms_needed(cfg: EvalConfig) -> int:
    """Number of n-terms kept: stop at the first n whose crude bound is below epsilon/10."""
    n = 1
    while n < cfg.n_max and crude_bound(1.25, n + 1) >= cfg.epsilon / 10.0:
        n += 1
    return n


def _theta_summand(n: int, z0: complex) -> complex:
    alpha = math.pi * n * n
    return 15.0 * alpha * math.exp(-alpha) / (6.25 - z0 * z0)


def _gamma_coefficient(n: int, z: complex) -> complex:
    alpha = math.pi * n * n
    return cpow(alpha, -0.5 * z) * (0.5 - z) / (_PI_QUARTER_ROOT * math.sqrt(n) * (2.5 + z))


def _series_tail(n_used: int, z0: complex) -> float:
    """Crude-bound estimate of the neglected brackets n > n_used."""
    total = 0.0
    for n in range(n_used + 1, n_used + 1 + _TAIL_TERMS):
        coef = abs(_gamma_coefficient(n, z0)) + abs(_gamma_coefficient(n, -z0))
        total += abs(_theta_summand(n, z0)) + coef * crude_bound(1.25, n)
    return 2.0 * total


def _sum_brackets(terms: List[XiSeriesTerm]) -> complex:
    re = math.fsum(t.total.real for t in terms)
    im = math.fsum(t.total.imag for t in terms)
    return 2.0 * complex(re, im)


def _rounding(terms: List[XiSeriesTerm]) -> float:
    scale = sum(abs(t.theta_term) + abs(t.upper_term) + abs(t.conj_term) for t in terms)
    return 16.0 * _UNIT_ROUNDOFF * scale


def _upper(n: int, z: complex, cfg: EvalConfig):
    params = IncGammaParams(1.25 + 0.5 * z, math.pi * n * n, cfg.epsilon, cfg.m_cap)
    return upper_inc_gamma(params)


def xi_critical_line(t0: float, cfg: EvalConfig = EvalConfig(), n_terms: Optional[int] = None) -> XiResult:
    """xi on the critical line s = 1/2 + i t0.

    The third summand of each bracket is taken as the exact conjugate of
    the second, so the result is real by construction.
    """
    z0 = complex(0.0, t0)
    n_used = n_terms or terms_needed(cfg)
    terms, err, converged = [], 0.0, True
    for n in range(1, n_used + 1):
        inc = _upper(n, z0, cfg)
        converged &= inc.converged
        coef = _gamma_coefficient(n, z0)
        upper_term = -coef * inc.value
        theta = complex(_theta_summand(n, z0).real, 0.0)
        terms.append(XiSeriesTerm(n, theta, upper_term, upper_term.conjugate()))
        err += 2.0 * abs(coef) * inc.remainder_bound
    value = _sum_brackets(terms)
    err = 2.0 * err + _series_tail(n_used, z0) + _rounding(terms) + abs(value.imag)
    return XiResult(complex(value.real, 0.0), Method.INCGAMMA, n_used, terms, err, converged)


def xi_strip_point(p: StripPoint, cfg: EvalConfig = EvalConfig(), n_terms: Optional[int] = None) -> XiResult:
    """xi at a general strip point; complex-valued off the critical line."""
    z0 = p.z0
    n_used = n_terms or terms_needed(cfg)
    terms, err, converged = [], 0.0, True
    for n in range(1, n_used + 1):
        plus = _upper(n, z0, cfg)
        minus = _upper(n, -z0, cfg)
        converged &= plus.converged and minus.converged
        c_plus = _gamma_coefficient(n, z0)
        c_minus = _gamma_coefficient(n, -z0)
        terms.append(
            XiSeriesTerm(n, _theta_summand(n, z0), -c_plus * plus.value, -c_minus * minus.value)
        )
        err += abs(c_plus) * plus.remainder_bound + abs(c_minus) * minus.remainder_bound
    value = _sum_brackets(terms)
    err = 2.0 * err + _series_tail(n_used, z0) + _rounding(terms)
    return XiResult(value, Method.STRIP, n_used, terms, err, converged)


def xi_real_form(t0: float, cfg: EvalConfig = EvalConfig(), n_terms: Optional[int] = None) -> XiResult:
    """xi on the critical line from the manifestly real trigonometric form.

    Each bracket is 15 alpha e^{-alpha}/(25/4 + t0^2) minus
    2/(pi^{1/4} sqrt n) times the integral over [alpha, inf) of
    e^{-l} l^{5/4} (A cos(t0 b / 2) + B sin(t0 b / 2)), b = ln(l / alpha).
    """
    denom = 25.0 + 4.0 * t0 * t0
    a_coef = (5.0 - 4.0 * t0 * t0) / denom
    b_coef = 12.0 * t0 / denom
    n_used = n_terms or terms_needed(cfg)
    terms, err = [], 0.0
    for n in range(1, n_used + 1):
        alpha = math.pi * n * n

        def integrand(lam: float, alpha=alpha) -> float:
            phase = 0.5 * t0 * math.log(lam / alpha)
            return math.exp(-lam) * lam ** 1.25 * (a_coef * math.cos(phase) + b_coef * math.sin(phase))

        integral, quad_err = adaptive_simpson(
            integrand, alpha, alpha + REAL_FORM_WINDOW, cfg.epsilon / 4.0
        )
        end = alpha + REAL_FORM_WINDOW
        cut = math.exp(-end) * end ** 1.25 * (abs(a_coef) + abs(b_coef)) * 1.1
        half = -integral.real / (_PI_QUARTER_ROOT * math.sqrt(n))
        theta = 60.0 * alpha * math.exp(-alpha) / denom
        terms.append(XiSeriesTerm(n, complex(theta), complex(half), complex(half)))
        err += 2.0 * (quad_err + cut) / (_PI_QUARTER_ROOT * math.sqrt(n))
    value = _sum_brackets(terms)
    err = 2.0 * err + _series_tail(n_used, complex(0.0, t0)) + _rounding(terms)
    return XiResult(complex(value.real, 0.0), Method.REALFORM, n_used, terms, err, True)


def _theta_cutoff() -> int:
    # last n with pi n^2 e^{-pi n^2} >= 1e-18
    n = 1
    while math.pi * (n + 1) ** 2 * math.exp(-math.pi * (n + 1) ** 2) >= 1e-18:
        n += 1
    return n


def _theta_upper_limit() -> float:
    y = 1.0
    while math.pi * math.exp(-math.pi * y) * y ** 0.75 >= 1e-18:
        y += 0.5
    return y


def psi(y: float, n_terms: Optional[int] = None) -> float:
    """Psi(y) = sum_{n>=1} e^{-pi n^2 y}."""
    count = n_terms or _theta_cutoff() + 2
    return math.fsum(math.exp(-math.pi * n * n * y) for n in range(1, count + 1))


def psi_prime(y: float, n_terms: Optional[int] = None) -> float:
    """Derivative of psi in y: -sum pi n^2 e^{-pi n^2 y}."""
    count = n_terms or _theta_cutoff() + 2
    return -math.fsum(math.pi * n * n * math.exp(-math.pi * n * n * y) for n in range(1, count + 1))


def psi_identity_check() -> float:
    """|1/2 + Psi(1) + 4 Psi'(1)|, zero by Jacobi's theta transformation."""
    value = math.fsum([0.5, psi(1.0, 10), 4.0 * psi_prime(1.0, 10)])
    return abs(value)


def xi_theta_form(p: StripPoint, cfg: EvalConfig = EvalConfig()) -> XiResult:
    """xi(z0) = -4 Psi'(1) + (1/2 - z0) J(+) + (1/2 + z0) J(-) where
    J(+-) is the integral over [1, inf) of Psi'(y) y^{1/4 +- z0/2}."""
    z0 = p.z0
    n_theta = _theta_cutoff()
    upper = _theta_upper_limit()
    cache = {}

    def dpsi(y: float) -> float:
        if y not in cache:
            cache[y] = psi_prime(y, n_theta)
        return cache[y]

    def integral(sign: float):
        expo = 0.25 + sign * 0.5 * z0
        return adaptive_simpson(
            lambda y: dpsi(y) * cpow(y, expo), 1.0, upper, cfg.epsilon / 4.0
        )

    j_plus, err_plus = integral(1.0)
    j_minus, err_minus = integral(-1.0)
    w_plus, w_minus = 0.5 - z0, 0.5 + z0
    value = -4.0 * psi_prime(1.0, n_theta) + w_plus * j_plus + w_minus * j_minus
    # |Psi'(y)| y^{3/4} <= 1.01 pi e^{-pi y} y^{3/4} past the cutoff
    cut = 1.01 * math.exp(-math.pi * upper) * upper ** 0.75
    err = abs(w_plus) * (err_plus + cut) + abs(w_minus) * (err_minus + cut)
    err += 16.0 * _UNIT_ROUNDOFF * (abs(w_plus * j_plus) + abs(w_minus * j_minus) + 1.0)
    return XiResult(value, Method.THETA, n_theta, [], err, True)
