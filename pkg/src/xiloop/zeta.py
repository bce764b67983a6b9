"""Reference values of zeta and xi from the classical product formula.

Nothing in here touches the incomplete-gamma machinery, so these values
can serve as an independent oracle for the strip series.
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .complex_core import cexp, cpow
from .config import ZetaConfig
from .errors import DomainError
from .special import log_gamma

_LOG_PI = math.log(math.pi)
_DEFAULT = ZetaConfig()
_CHUNK = 64


def _euler_maclaurin_tail(s: np.ndarray, n: int) -> np.ndarray:
    # sum_{m>n} m^{-s} ~ n^{1-s}/(s-1) - n^{-s}/2 + s n^{-s-1}/12 - s(s+1)(s+2) n^{-s-3}/720
    n_s = np.exp(-s * math.log(n))
    return (
        n * n_s / (s - 1.0)
        - 0.5 * n_s
        + s * n_s / (12.0 * n)
        - s * (s + 1.0) * (s + 2.0) * n_s / (720.0 * n ** 3)
    )


def dirichlet_line(sigma: float, ts: Sequence[float], cfg: ZetaConfig = _DEFAULT) -> np.ndarray:
    """zeta(sigma + i t) for many t at once, for sigma >= 2."""
    if sigma < 2.0:
        raise DomainError("the Dirichlet series path requires Re(s) >= 2")
    ts = np.asarray(ts, dtype=float).ravel()
    n = cfg.n_terms
    log_n = np.log(np.arange(1, n + 1, dtype=float))
    weights = np.exp(-sigma * log_n)
    out = np.empty(ts.size, dtype=complex)
    for start in range(0, ts.size, _CHUNK):
        block = ts[start:start + _CHUNK]
        phases = np.exp(-1j * np.outer(block, log_n))
        out[start:start + _CHUNK] = phases @ weights
    s = sigma + 1j * ts
    return out + _euler_maclaurin_tail(s, n)


def zeta_dirichlet(s: complex, cfg: ZetaConfig = _DEFAULT) -> complex:
    """zeta(s) by direct summation plus an Euler-Maclaurin tail; Re(s) >= 2 only."""
    s = complex(s)
    if s.real < 2.0:
        raise DomainError(f"zeta_dirichlet requires Re(s) >= 2, got {s!r}")
    return complex(dirichlet_line(s.real, [s.imag], cfg)[0])


@lru_cache(maxsize=8)
def _eta_weights(n: int) -> tuple:
    # Borwein's weights: c_k = (d_n - d_k) / d_n with
    # d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    d = []
    acc = 0
    for i in range(n + 1):
        acc += Fraction(
            math.factorial(n + i - 1) * 4 ** i,
            math.factorial(n - i) * math.factorial(2 * i),
        )
        d.append(n * acc)
    dn = d[n]
    return tuple(float((dn - d[k]) / dn) for k in range(n))


def zeta_strip_oracle(s: complex, cfg: ZetaConfig = _DEFAULT) -> complex:
    """zeta(s) for 0 < Re(s) <= 2 from an accelerated alternating eta series.

    zeta(s) = eta(s) / (1 - 2^{1-s}), with eta summed using Borwein's
    binomial weights over ``cfg.eta_terms`` terms.
    """
    s = complex(s)
    if not 0.0 < s.real <= 2.0:
        raise DomainError(f"zeta_strip_oracle requires 0 < Re(s) <= 2, got {s!r}")
    if s == 1:
        raise DomainError("zeta has a pole at s = 1")
    denom = 1.0 - cpow(2.0, 1.0 - s)
    if abs(denom) < 1e-12:
        raise DomainError(f"eta-to-zeta factor vanishes at {s!r}")
    weights = _eta_weights(cfg.eta_terms)
    re_parts, im_parts = [], []
    for k, c in enumerate(weights):
        term = c * cpow(k + 1.0, -s)
        if k % 2:
            term = -term
        re_parts.append(term.real)
        im_parts.append(term.imag)
    eta = complex(math.fsum(re_parts), math.fsum(im_parts))
    return eta / denom


def _zeta(s: complex, cfg: ZetaConfig) -> complex:
    if s.real >= 2.0:
        return zeta_dirichlet(s, cfg)
    return zeta_strip_oracle(s, cfg)


def gamma_pi_factor(s: complex) -> complex:
    """Gamma(s/2) pi^{-s/2}, evaluated in log space."""
    return cexp(log_gamma(0.5 * s) - 0.5 * s * _LOG_PI)


def xi_classical(s: complex, cfg: ZetaConfig = _DEFAULT) -> complex:
    """xi(s) = s(s-1)/2 Gamma(s/2) pi^{-s/2} zeta(s).

    zeta comes from the Dirichlet series for Re(s) >= 2 and from the eta
    oracle for 0 < Re(s) < 2. The removable points s = 0, 1 are rejected;
    approach them by a limit.
    """
    s = complex(s)
    if s == 1 or s == 0:
        raise DomainError("xi_classical is evaluated only away from s = 0 and s = 1")
    if not s.real > 0.0:
        raise DomainError(f"xi_classical requires Re(s) > 0, got {s!r}")
    return 0.5 * s * (s - 1.0) * gamma_pi_factor(s) * _zeta(s, cfg)
