"""Analytic continuation into the strip by direct Cauchy-integral quadrature.

For an even entire function f that is real on the real axis, the loop
integral over the rectangle |Re z| <= a, |Im z| <= T reduces, as T grows, to

    f(z0) = 1/(2 pi) int [ f(a+it)/(a+it-z0) + f(a-it)/(a-it+z0) ] dt

along the single line Re z = a. For xi (a = 3/2, i.e. s = 2 + it) the
boundary values come from the classical product formula with a Dirichlet
series for zeta, which is independent of the strip series.
"""

import cmath
import math
import threading
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .complex_core import cexp
from .config import EvalConfig, ZetaConfig
from .errors import DomainError
from .quadrature import composite_simpson
from .special import log_gamma
from .zeta import dirichlet_line

XI_HALF_WIDTH = 1.5
# |xi(2+it)| < K |t|^{5/2} e^{-DECAY_RATE |t|}, certified for 1 <= t <= 60 in the tests
DECAY_K = 10.0
DECAY_RATE = math.pi / 4.0
TAIL_EPSILON = 1e-9
_LOG_PI = math.log(math.pi)


@dataclass(frozen=True)
class QuadratureWindow:
    """Truncated line |t| <= T sampled at ``step``, at Re z = a."""

    T: float
    step: float = 0.01
    a: float = XI_HALF_WIDTH

    def __post_init__(self):
        if not (self.T > 0 and self.step > 0 and self.a > 0):
            raise DomainError("T, step and a must be positive")
        if self.step > self.T / 50.0:
            raise DomainError("step must not exceed T/50")

    def grid(self) -> Tuple[np.ndarray, float]:
        intervals = 2 * math.ceil(self.T / self.step - 1e-9)
        ts = np.linspace(-self.T, self.T, intervals + 1)
        return ts, 2.0 * self.T / intervals


def _line_integral(f_plus: np.ndarray, f_minus: np.ndarray, ts: np.ndarray, h: float,
                   z0: complex, a: float) -> complex:
    integrand = f_plus / (a + 1j * ts - z0) + f_minus / (a - 1j * ts + z0)
    return composite_simpson(integrand, h) / (2.0 * math.pi)


def _closing_segments(f: Callable[[complex], complex], z0: complex, w: QuadratureWindow) -> complex:
    # top edge runs from +a to -a, bottom edge from -a to +a
    n = 2 * max(8, math.ceil(w.a / w.step))
    xs = np.linspace(-w.a, w.a, n + 1)
    h = 2.0 * w.a / n
    top = np.array([f(complex(x, w.T)) / (complex(x, w.T) - z0) for x in xs])
    bottom = np.array([f(complex(x, -w.T)) / (complex(x, -w.T) - z0) for x in xs])
    return (composite_simpson(bottom, h) - composite_simpson(top, h)) / (2j * math.pi)


def strip_continuation(
    f_boundary: Callable[[float], complex],
    z0: complex,
    w: QuadratureWindow,
    closure: Optional[Callable[[complex], complex]] = None,
) -> complex:
    """Value at ``z0`` of an even, real-on-axis entire function from its
    restriction ``f_boundary(t) = f(a + it)``.

    Composite Simpson over |t| <= T. If ``closure`` (the function itself on
    the whole plane) is given, the horizontal edges at Im z = +-T are
    integrated too, which makes the truncated rectangle exact; without it
    they are assumed negligible, as they are for functions decaying along
    vertical lines.
    """
    z0 = complex(z0)
    if not abs(z0.real) < w.a:
        raise DomainError(f"z0 must lie strictly inside |Re z| < {w.a}")
    ts, h = w.grid()
    f_plus = np.array([complex(f_boundary(float(t))) for t in ts])
    f_minus = f_plus[::-1]  # f(a - it) at the mirrored grid point
    value = _line_integral(f_plus, f_minus, ts, h, z0, w.a)
    if closure is not None:
        value += _closing_segments(closure, z0, w)
    return value


class _BoundaryCache:
    """Read-through cache of xi(2 + it) for t >= 0, keyed by (n_terms, t)."""

    def __init__(self):
        self._values: Dict[Tuple[int, float], complex] = {}
        self._lock = threading.Lock()

    def lookup(self, ts: np.ndarray, cfg: ZetaConfig) -> np.ndarray:
        keys = [(cfg.n_terms, float(t)) for t in np.abs(ts)]
        missing = sorted({k[1] for k in keys if k not in self._values})
        if missing:
            fresh = _xi_on_line(np.array(missing), cfg)
            with self._lock:
                for t, v in zip(missing, fresh):
                    self._values.setdefault((cfg.n_terms, t), complex(v))
        values = np.array([self._values[k] for k in keys])
        return np.where(ts < 0, values.conj(), values)

    def clear(self):
        with self._lock:
            self._values.clear()


_CACHE = _BoundaryCache()


def _xi_on_line(ts: np.ndarray, cfg: ZetaConfig) -> np.ndarray:
    zetas = dirichlet_line(2.0, ts, cfg)
    out = np.empty(ts.size, dtype=complex)
    for i, (t, zeta) in enumerate(zip(ts, zetas)):
        s = complex(2.0, t)
        factor = cexp(log_gamma(0.5 * s) - 0.5 * s * _LOG_PI)
        out[i] = 0.5 * s * (s - 1.0) * factor * zeta
    return out


def xi_boundary(t: float, cfg: ZetaConfig = ZetaConfig()) -> complex:
    """xi(2 + it) from the Gamma/zeta product (Dirichlet series for zeta)."""
    return complex(_CACHE.lookup(np.array([float(t)]), cfg)[0])


def decay_bound(t: float, K: float = DECAY_K, rate: float = DECAY_RATE) -> float:
    return K * abs(t) ** 2.5 * math.exp(-rate * abs(t))


def tail_bound_T(epsilon: float, K: float = DECAY_K, rate: float = DECAY_RATE) -> float:
    """Smallest T on a 0.5-grid with K T^{5/2} e^{-rate T} < epsilon."""
    if not epsilon > 0:
        raise DomainError("epsilon must be positive")
    T = 0.5
    # the bound rises until T = 2.5/rate; only accept T on the falling side
    while T < 2.5 / rate or not decay_bound(T, K, rate) < epsilon:
        T += 0.5
    return T


def contour_T(z0: complex, epsilon: float = TAIL_EPSILON, a: float = XI_HALF_WIDTH) -> float:
    """Half-height that keeps the neglected line tails of xi below ``epsilon``.

    The two tails together contribute at most
    (1/pi) int_T^inf K t^{5/2} e^{-rate t} dt / (a - |Re z0|), and the
    integral is below K T^{5/2} e^{-rate T} / (rate - 2.5/T).
    """
    gap = a - abs(complex(z0).real)
    if gap <= 0:
        raise DomainError("z0 must lie strictly inside the strip")
    T = tail_bound_T(epsilon * math.pi * gap * (DECAY_RATE / 2.0))
    return max(T, abs(complex(z0).imag) + 10.0)


def xi_via_contour(z0: complex, w: Optional[QuadratureWindow] = None,
                   cfg: ZetaConfig = ZetaConfig(), epsilon: float = TAIL_EPSILON) -> complex:
    """xi at z-plane point ``z0`` (|Re z0| <= 1/2) from samples of xi(2 + it)."""
    z0 = complex(z0)
    if not abs(z0.real) <= 0.5:
        raise DomainError(f"|Re z0| must not exceed 1/2, got {z0!r}")
    if w is None:
        w = QuadratureWindow(contour_T(z0, epsilon))
    ts, h = w.grid()
    f_plus = _CACHE.lookup(ts, cfg)
    return _line_integral(f_plus, f_plus.conj(), ts, h, z0, w.a)


def window_for(z0: complex, cfg: EvalConfig) -> QuadratureWindow:
    T = cfg.quad_T if cfg.quad_T is not None else contour_T(z0, cfg.epsilon)
    return QuadratureWindow(T, cfg.quad_step)
