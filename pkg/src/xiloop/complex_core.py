"""Complex arithmetic with pinned branch conventions.

Values are plain Python ``complex`` numbers (two binary64 fields). Every
power of a real base goes through :func:`cpow`, and every logarithm through
:func:`clog`, so there is exactly one place where a branch is chosen.
"""

import cmath
import math

from .errors import DomainError


def _checked(z: complex) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise OverflowError(f"non-finite complex result {z!r}")
    return z


def add(a: complex, b: complex) -> complex:
    return _checked(complex(a) + complex(b))


def sub(a: complex, b: complex) -> complex:
    return _checked(complex(a) - complex(b))


def mul(a: complex, b: complex) -> complex:
    return _checked(complex(a) * complex(b))


def div(a: complex, b: complex) -> complex:
    """Quotient ``a / b``.

    CPython's complex division scales by the larger component of ``b``
    (Smith's method), so it does not overflow prematurely for large or
    tiny denominators.
    """
    b = complex(b)
    if b == 0:
        raise DomainError("complex division by zero")
    return _checked(complex(a) / b)


def conj(z: complex) -> complex:
    return complex(z).conjugate()


def cexp(z: complex) -> complex:
    try:
        return _checked(cmath.exp(z))
    except OverflowError as exc:
        raise OverflowError(f"cexp overflow at {z!r}") from exc


def clog(z: complex) -> complex:
    """Principal logarithm with imaginary part in (-pi, pi]."""
    z = complex(z)
    if z == 0:
        raise DomainError("clog(0) is undefined")
    w = cmath.log(z)
    if z.imag == 0.0 and z.real < 0.0:
        # -0.0 imaginary part would otherwise select -pi
        w = complex(w.real, math.pi)
    return _checked(w)


def cpow(base: float, z: complex) -> complex:
    """``base ** z`` for a positive real base, as ``exp(z * ln(base))``."""
    if not base > 0:
        raise DomainError(f"cpow requires a positive real base, got {base!r}")
    return cexp(complex(z) * math.log(base))
