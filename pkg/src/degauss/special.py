"""Scalar special-function kernels used throughout the package.

All combinatorics live in the log domain; linear values are only formed
at the end.  The two entropy-profile functions g are one kernel related
by the substitution nu = 2*x + 1 (thermal occupation vs symplectic
eigenvalue parameterization).
"""

import math
from dataclasses import dataclass

from . import _kernels

__all__ = [
    "SeriesResult",
    "ConvergenceError",
    "log_gamma",
    "log_binomial",
    "gauss_2f1",
    "thermal_entropy",
    "symplectic_entropy",
    "log_of_base",
]


class ConvergenceError(RuntimeError):
    """A series or iteration failed to converge within its cap."""


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    converged: bool


def log_of_base(base) -> float:
    """ln(base) for base given as 2, "2", "e" or a float > 1."""
    if base in ("e", math.e):
        return 1.0
    b = float(base)
    if b <= 1.0:
        raise ValueError(f"log base must exceed 1, got {base!r}")
    return math.log(b)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def log_binomial(x: float, y: float) -> float:
    """ln of the generalized binomial coefficient C(x, y), 0 <= y <= x.

    Real arguments are allowed (Gamma-function extension of the
    factorials), which is what makes fractional operation counts work.
    """
    if y < 0 or y > x:
        raise ValueError(f"log_binomial requires 0 <= y <= x, got ({x}, {y})")
    return log_gamma(x + 1.0) - log_gamma(y + 1.0) - log_gamma(x - y + 1.0)


def gauss_2f1(a: float, b: float, c: float, z: float,
              max_terms: int = 10_000_000) -> SeriesResult:
    """Gauss hypergeometric 2F1(a, b; c; z) by direct series summation.

    Restricted to a, b, c > 0 and z in [0, 1), where every term is
    nonnegative and the series converges.
    """
    if a <= 0 or b <= 0 or c <= 0:
        raise ValueError(f"gauss_2f1 requires a, b, c > 0, got ({a}, {b}, {c})")
    if not 0.0 <= z < 1.0:
        raise ValueError(f"gauss_2f1 requires z in [0, 1), got {z}")
    if z == 0.0:
        return SeriesResult(1.0, 1, True)
    value, terms, converged = _kernels.hyp2f1_series(a, b, c, z,
                                                     max_terms=max_terms)
    return SeriesResult(value, terms, converged)


def thermal_entropy(x: float, base=2) -> float:
    """(x+1) log(x+1) - x log(x), the entropy profile of a thermal mode.

    Equals the entanglement entropy of a two-mode squeezed vacuum with
    total mean photon number 2x.  Continuous at x = 0 (value 0).
    """
    if x < 0:
        raise ValueError(f"thermal_entropy requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    nats = (x + 1.0) * math.log(x + 1.0) - x * math.log(x)
    return nats / log_of_base(base)


def symplectic_entropy(nu: float, base=2) -> float:
    """Gaussian-state entropy contribution g(nu) of one symplectic eigenvalue.

    Identical to thermal_entropy((nu-1)/2).  Values of nu within 1e-9
    below 1 are clamped to 1 (pure mode); anything lower signals an
    unphysical covariance matrix.
    """
    if nu < 1.0 - 1e-9:
        raise ValueError(f"symplectic eigenvalue below 1: {nu}")
    if nu <= 1.0:
        return 0.0
    return thermal_entropy((nu - 1.0) / 2.0, base)
