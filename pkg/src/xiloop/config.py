"""Precision and truncation knobs."""

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError

EPSILON_FLOOR = 1e-13


@dataclass(frozen=True)
class ZetaConfig:
    """Truncation lengths for the reference zeta evaluations.

    ``n_terms`` is the Dirichlet-series length used on Re(s) >= 2 and
    ``eta_terms`` the length of the accelerated alternating series used
    inside the strip.
    """

    n_terms: int = 20000
    eta_terms: int = 64

    def __post_init__(self):
        if self.n_terms < 1:
            raise DomainError("n_terms must be >= 1")
        if self.eta_terms < 8:
            raise DomainError("eta_terms must be >= 8")


@dataclass(frozen=True)
class EvalConfig:
    epsilon: float = 1e-9
    n_max: int = 8
    m_cap: int = 400
    quad_T: Optional[float] = None
    quad_step: float = 0.01
    zeta: ZetaConfig = ZetaConfig()

    def __post_init__(self):
        if not self.epsilon >= EPSILON_FLOOR:
            raise DomainError("epsilon must be >= 1e-13 (double-precision floor)")
        if self.n_max < 1:
            raise DomainError("n_max must be >= 1")
        if self.m_cap < 1:
            raise DomainError("m_cap must be >= 1")
        if not self.quad_step > 0:
            raise DomainError("quad_step must be positive")
        if self.quad_T is not None and not self.quad_T > 0:
            raise DomainError("quad_T must be positive")
