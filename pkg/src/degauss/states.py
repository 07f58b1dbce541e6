"""Schmidt-form construction of the TMSV and its photon-added/subtracted
descendants.

Every state in the family is diagonal in a shifted Fock basis: the m-th
Schmidt term pairs |m + offset_a> with |m + offset_b>, carrying squared
Schmidt coefficient weights[m].  Weights are built from the ratio
w[n+1]/w[n] (rational in n) with a single log-domain anchor at n = 0, so
no per-term Gamma evaluations and no factorial overflow.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .special import ConvergenceError, gauss_2f1, log_binomial

__all__ = [
    "SchmidtDiagonalState",
    "build_tmsv",
    "build_added",
    "build_subtracted",
    "one_mode_weight",
    "pascal_recursion_residual",
    "DEFAULT_EPSILON",
]

DEFAULT_EPSILON = 1e-10

_MAX_WEIGHT_TERMS = 2_000_000


@dataclass(frozen=True)
class SchmidtDiagonalState:
    """A two-mode pure state in Schmidt form.

    weights are NOT renormalized after truncation; tail_bound carries the
    guaranteed unsummed mass so that normalization-identity bugs cannot
    hide behind a renormalization step.
    """

    lam: float
    op_kind: str              # "tmsv" | "add" | "sub"
    k: float
    l: float
    offset_a: float
    offset_b: float
    weights: np.ndarray = field(repr=False)
    tail_bound: float
    base: object = 2
    continuous: bool = False

    @property
    def n_terms(self) -> int:
        return len(self.weights)


def _check_lambda(lam):
    if not 0.0 <= lam < 1.0:
        raise ValueError(f"squeezing parameter lambda must be in [0, 1), got {lam}")


def _accumulate(w0, ratio, epsilon):
    """Grow the weight list until cumulative mass reaches 1 - epsilon."""
    weights = [w0]
    total = w0
    n = 0
    while total < 1.0 - epsilon:
        if n >= _MAX_WEIGHT_TERMS:
            raise ConvergenceError(
                f"weight sequence did not reach mass 1-{epsilon} "
                f"within {_MAX_WEIGHT_TERMS} terms")
        wn = weights[-1] * ratio(n)
        weights.append(wn)
        total += wn
        n += 1
    tail = max(1.0 - total, 1e-14)
    return np.array(weights), tail


def build_tmsv(lam, epsilon=DEFAULT_EPSILON, base=2) -> SchmidtDiagonalState:
    """Two-mode squeezed vacuum: geometric weights (1-lam^2) lam^(2n)."""
    _check_lambda(lam)
    lam2 = lam * lam
    if lam2 == 0.0:
        weights = np.array([1.0])
        tail = 0.0
    else:
        # geometric tail after N+1 terms is exactly lam2^(N+1)
        n_terms = max(1, math.ceil(math.log(epsilon) / math.log(lam2)))
        weights = (1.0 - lam2) * lam2 ** np.arange(n_terms)
        tail = lam2 ** n_terms
    return SchmidtDiagonalState(lam, "tmsv", 0.0, 0.0, 0.0, 0.0,
                                weights, tail, base)


def _normalizer(a, b, c, z):
    res = gauss_2f1(a, b, c, z)
    if not res.converged:
        raise ConvergenceError(
            f"2F1({a},{b};{c};{z}) did not converge (lambda too close to 1)")
    return res.value


def build_added(lam, k, l, epsilon=DEFAULT_EPSILON, base=2,
                continuous=False) -> SchmidtDiagonalState:
    """State after k photon additions on mode A and l on mode B.

    Weights lam^(2n) C(n+k,k) C(n+l,l) / 2F1(k+1, l+1; 1; lam^2); the
    m-th term occupies |m+k, m+l>.
    """
    _check_lambda(lam)
    if k < 0 or l < 0:
        raise ValueError(f"operation counts must be >= 0, got ({k}, {l})")
    k, l = float(k), float(l)
    lam2 = lam * lam
    w0 = 1.0 / _normalizer(k + 1.0, l + 1.0, 1.0, lam2)

    def ratio(n):
        return lam2 * (n + 1.0 + k) * (n + 1.0 + l) / ((n + 1.0) * (n + 1.0))

    weights, tail = _accumulate(w0, ratio, epsilon)
    kind = "tmsv" if k == 0 and l == 0 else "add"
    return SchmidtDiagonalState(lam, kind, k, l, k, l, weights, tail,
                                base, continuous)


def build_subtracted(lam, k, l, epsilon=DEFAULT_EPSILON, base=2,
                     continuous=False) -> SchmidtDiagonalState:
    """State after k photon subtractions on mode A and l on mode B.

    For k >= l the m-th term occupies |m, m + k - l> with weight
    lam^(2m) C(m+k,k) C(m+k,l) / (C(k,l) 2F1(k+1, k+1; 1+k-l; lam^2));
    for k < l the same formula applies with k and l interchanged and the
    offsets mirrored.
    """
    _check_lambda(lam)
    if k < 0 or l < 0:
        raise ValueError(f"operation counts must be >= 0, got ({k}, {l})")
    k, l = float(k), float(l)
    hi, lo = (k, l) if k >= l else (l, k)
    lam2 = lam * lam
    w0 = 1.0 / _normalizer(hi + 1.0, hi + 1.0, 1.0 + hi - lo, lam2)

    def ratio(m):
        return lam2 * (m + 1.0 + hi) ** 2 / ((m + 1.0) * (m + 1.0 + hi - lo))

    weights, tail = _accumulate(w0, ratio, epsilon)
    if k >= l:
        offset_a, offset_b = 0.0, k - l
    else:
        offset_a, offset_b = l - k, 0.0
    kind = "tmsv" if k == 0 and l == 0 else "sub"
    return SchmidtDiagonalState(lam, kind, k, l, offset_a, offset_b,
                                weights, tail, base, continuous)


def one_mode_weight(lam, k, n) -> float:
    """Schmidt weight (1-lam^2)^(k+1) lam^(2n) C(n+k, n) of the one-mode
    photon-added state; zero for n < 0 by convention."""
    if n < 0:
        return 0.0
    _check_lambda(lam)
    lam2 = lam * lam
    if lam2 == 0.0:
        return 1.0 if n == 0 else 0.0
    log_w = (k + 1.0) * math.log1p(-lam2) + log_binomial(n + k, n)
    if n > 0:
        log_w += n * math.log(lam2)
    return math.exp(log_w)


def pascal_recursion_residual(lam, k, n) -> float:
    """Residual of the Pascal recursion satisfied by the one-mode weights:

        p_n^(k+1) - lam^2 p_{n-1}^(k+1) - (1-lam^2) p_n^(k)

    which is identically zero; exposed for property testing."""
    lam2 = lam * lam
    return (one_mode_weight(lam, k + 1, n)
            - lam2 * one_mode_weight(lam, k + 1, n - 1)
            - (1.0 - lam2) * one_mode_weight(lam, k, n))
