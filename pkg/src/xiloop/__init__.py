"""Evaluate Riemann's xi function inside the critical strip.

The primary path sums an incomplete-gamma series; independent checks come
from the classical Gamma/zeta product, a theta-function integral and a
direct Cauchy-integral quadrature along Re(s) = 2.
"""

from .config import EvalConfig, ZetaConfig
from .errors import ConvergenceError, DomainError
from .special import (
    IncGammaParams,
    IncGammaResult,
    crude_bound,
    j_max_estimate,
    log_gamma,
    lower_inc_gamma,
    upper_inc_gamma,
)
from .strip import (
    Method,
    StripPoint,
    XiResult,
    XiSeriesTerm,
    psi_identity_check,
    xi_critical_line,
    xi_real_form,
    xi_strip_point,
    xi_theta_form,
)
from .zeta import xi_classical, zeta_dirichlet, zeta_strip_oracle
from .contour import QuadratureWindow, strip_continuation, tail_bound_T, xi_boundary, xi_via_contour

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "EvalConfig",
    "IncGammaParams",
    "IncGammaResult",
    "Method",
    "QuadratureWindow",
    "StripPoint",
    "XiResult",
    "XiSeriesTerm",
    "ZetaConfig",
    "crude_bound",
    "j_max_estimate",
    "log_gamma",
    "lower_inc_gamma",
    "psi_identity_check",
    "strip_continuation",
    "tail_bound_T",
    "upper_inc_gamma",
    "xi_boundary",
    "xi_classical",
    "xi_critical_line",
    "xi_real_form",
    "xi_strip_point",
    "xi_theta_form",
    "xi_via_contour",
    "zeta_dirichlet",
    "zeta_strip_oracle",
]
