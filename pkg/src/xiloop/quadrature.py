"""Simpson quadrature, fixed-step and adaptive, for complex integrands."""

import math
from typing import Callable, Sequence, Tuple

import numpy as np

from .errors import ConvergenceError


def composite_simpson(values: Sequence[complex], step: float) -> complex:
    """Composite Simpson rule over equally spaced samples.

    ``values`` must hold an odd number (>= 3) of samples.
    """
    y = np.asarray(values)
    if y.size < 3 or y.size % 2 == 0:
        raise ValueError("composite Simpson needs an odd number of samples >= 3")
    total = y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum()
    return complex(total) * step / 3.0


def adaptive_simpson(
    f: Callable[[float], complex],
    a: float,
    b: float,
    tol: float,
    *,
    panels: int = 16,
    max_depth: int = 40,
) -> Tuple[complex, float]:
    """Integrate ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    The interval is first cut into ``panels`` pieces so that oscillatory
    integrands are not accepted on a lucky coarse estimate. Returns the
    Richardson-corrected value and the summed error estimate.
    Raises ConvergenceError when a subinterval hits ``max_depth``.
    """
    if b <= a:
        return 0j, 0.0
    edges = np.linspace(a, b, panels + 1)
    stack = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        lo, hi = float(lo), float(hi)
        mid = 0.5 * (lo + hi)
        flo, fmid, fhi = f(lo), f(mid), f(hi)
        whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)
        stack.append((lo, hi, flo, fmid, fhi, whole, tol / panels, 0))

    parts = []
    err_total = 0.0
    while stack:
        lo, hi, flo, fmid, fhi, whole, local_tol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - whole
        err = abs(delta) / 15.0
        if err <= local_tol:
            parts.append(left + right + delta / 15.0)
            err_total += err
            continue
        if depth >= max_depth:
            raise ConvergenceError(f"adaptive Simpson did not converge near x={mid:g}")
        half = 0.5 * local_tol
        stack.append((lo, mid, flo, flm, fmid, left, half, depth + 1))
        stack.append((mid, hi, fmid, frm, fhi, right, half, depth + 1))

    re = math.fsum(p.real for p in parts)
    im = math.fsum(complex(p).imag for p in parts)
    return complex(re, im), err_total
