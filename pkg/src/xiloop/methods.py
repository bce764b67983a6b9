"""Dispatch an evaluation of xi(s) to any of the available methods."""

import math

from .config import EvalConfig
from .contour import window_for, xi_via_contour
from .errors import DomainError
from .strip import (
    Method,
    StripPoint,
    XiResult,
    xi_critical_line,
    xi_real_form,
    xi_strip_point,
    xi_theta_form,
)
from .zeta import xi_classical

# the classical product is accurate to a few ulps of its factors
_CLASSICAL_REL_ERR = 1e-12

CRITICAL_LINE_ONLY = (Method.INCGAMMA, Method.REALFORM)


def evaluate(method: Method, sigma: float, t: float, cfg: EvalConfig = EvalConfig()) -> XiResult:
    """xi(sigma + i t) by the named method (s-plane coordinates)."""
    method = Method(method)
    if method is Method.CLASSICAL:
        if not 0.0 < sigma <= 2.0:
            raise DomainError(f"classical method needs 0 < sigma <= 2, got {sigma:g}")
        value = xi_classical(complex(sigma, t), cfg.zeta)
        return XiResult(value, method, 0, [], _CLASSICAL_REL_ERR * (1.0 + abs(value)))

    if not 0.0 <= sigma <= 1.0:
        raise DomainError(f"strip methods need 0 <= sigma <= 1, got {sigma:g}")
    point = StripPoint.from_s(sigma, t)
    if method in CRITICAL_LINE_ONLY and point.x0 != 0.0:
        raise DomainError(f"{method.value} evaluates the critical line only (sigma = 0.5)")

    if method is Method.INCGAMMA:
        return xi_critical_line(t, cfg)
    if method is Method.REALFORM:
        return xi_real_form(t, cfg)
    if method is Method.STRIP:
        return xi_strip_point(point, cfg)
    if method is Method.THETA:
        return xi_theta_form(point, cfg)
    window = window_for(point.z0, cfg)
    value = xi_via_contour(point.z0, window, cfg.zeta, cfg.epsilon)
    return XiResult(value, method, 0, [], cfg.epsilon)


def applicable_methods(sigma: float):
    methods = []
    if sigma == 0.5:
        methods += [Method.INCGAMMA, Method.REALFORM]
    if 0.0 <= sigma <= 1.0:
        methods += [Method.STRIP, Method.THETA, Method.CONTOUR]
    if 0.0 < sigma <= 2.0:
        methods.append(Method.CLASSICAL)
    return methods


def max_pairwise_deviation(values) -> float:
    values = [v for v in values if not (math.isnan(v.real) or math.isnan(v.imag))]
    worst = 0.0
    for i, a in enumerate(values):
        for b in values[i + 1:]:
            worst = max(worst, abs(a - b))
    return worst
