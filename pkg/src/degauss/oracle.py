"""Brute-force dense truncated-Fock engine.

Validation path for every closed form in the package: build states by
explicit ladder-operator application and a numerically exponentiated
two-mode squeezer, then extract Schmidt spectra (cyclic Jacobi on the
Gram matrix) and covariance matrices from raw quadrature moments.
Intentionally independent of the ratio-recursion/hypergeometric route it
checks.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .gaussian import CovarianceNormalForm
from .special import ConvergenceError

__all__ = [
    "DenseTwoModeState",
    "CutoffLeakageError",
    "dense_from_schmidt",
    "apply_ladder",
    "apply_squeezer",
    "squeezed_vacuum",
    "vacuum",
    "schmidt_spectrum",
    "covariance_from_moments",
    "fidelity",
    "DEFAULT_CUTOFF",
]

DEFAULT_CUTOFF = 100

_LEAK_TOL = 1e-12
_LEAK_BAND = 5


class CutoffLeakageError(RuntimeError):
    """Amplitude mass reached the truncation boundary of the Fock grid."""


@dataclass(frozen=True)
class DenseTwoModeState:
    """Amplitudes amps[m, n] of |m, n> on a square truncated Fock grid.

    All states in scope have real amplitudes; results of ladder
    applications are returned unnormalized (the lost norm is the
    success-probability proxy of the heralded operation).
    """

    amps: np.ndarray = field(repr=False)

    @property
    def cutoff(self) -> int:
        return self.amps.shape[0]

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.amps ** 2)))

    def leakage_mass(self, band: int = _LEAK_BAND) -> float:
        """Probability mass in the top `band` rows and columns."""
        p = self.amps ** 2
        total = p.sum()
        if total == 0.0:
            return 0.0
        edge = p[-band:, :].sum() + p[:-band, -band:].sum()
        return float(edge / total)

    def check_leakage(self, band: int = _LEAK_BAND):
        mass = self.leakage_mass(band)
        if mass > _LEAK_TOL:
            raise CutoffLeakageError(
                f"mass {mass:.3e} within {band} levels of cutoff "
                f"{self.cutoff}")
        return self

    def normalized(self) -> "DenseTwoModeState":
        n = self.norm
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector "
                             "(annihilation emptied the state)")
        return DenseTwoModeState(self.amps / n)


def vacuum(cutoff: int = DEFAULT_CUTOFF) -> DenseTwoModeState:
    amps = np.zeros((cutoff, cutoff))
    amps[0, 0] = 1.0
    return DenseTwoModeState(amps)


def dense_from_schmidt(state, cutoff: int = DEFAULT_CUTOFF) -> DenseTwoModeState:
    """Embed a Schmidt-diagonal state on the dense grid: amplitude
    sqrt(w_m) at (m + offset_a, m + offset_b)."""
    oa, ob = state.offset_a, state.offset_b
    if abs(oa - round(oa)) > 1e-9 or abs(ob - round(ob)) > 1e-9:
        raise ValueError("dense embedding requires integer Fock offsets "
                         f"(got {oa}, {ob}); continuous-mode states have "
                         "no Fock representation")
    oa, ob = int(round(oa)), int(round(ob))
    n_terms = state.n_terms
    if n_terms + max(oa, ob) > cutoff:
        raise CutoffLeakageError(
            f"state needs {n_terms + max(oa, ob)} levels, cutoff {cutoff}")
    amps = np.zeros((cutoff, cutoff))
    m = np.arange(n_terms)
    amps[m + oa, m + ob] = np.sqrt(state.weights)
    return DenseTwoModeState(amps)


def _create_a(c):
    out = np.zeros_like(c)
    rows = np.sqrt(np.arange(1, c.shape[0], dtype=float))
    out[1:, :] = rows[:, None] * c[:-1, :]
    return out


def _annihilate_a(c):
    out = np.zeros_like(c)
    rows = np.sqrt(np.arange(1, c.shape[0], dtype=float))
    out[:-1, :] = rows[:, None] * c[1:, :]
    return out


def apply_ladder(state: DenseTwoModeState, mode: str,
                 kind: str) -> DenseTwoModeState:
    """Apply a creation or annihilation operator to one mode.

    The result is not normalized; a creation that pushes mass onto the
    top Fock level raises CutoffLeakageError.
    """
    c = state.amps
    if mode not in ("A", "B"):
        raise ValueError(f"mode must be 'A' or 'B', got {mode!r}")
    if mode == "B":
        c = c.T
    if kind == "create":
        lost = float(np.sum(c[-1, :] ** 2))
        if lost > _LEAK_TOL:
            raise CutoffLeakageError(
                f"create would push mass {lost:.3e} past the cutoff")
        out = _create_a(c)
    elif kind == "annihilate":
        out = _annihilate_a(c)
    else:
        raise ValueError(f"kind must be 'create' or 'annihilate', got {kind!r}")
    if mode == "B":
        out = out.T
    return DenseTwoModeState(out)


def _squeeze_generator(c, zeta):
    """zeta (a^dag b^dag - a b) acting on the amplitude grid."""
    n = c.shape[0]
    out = np.zeros_like(c)
    f = np.sqrt(np.arange(n, dtype=float))
    # a^dag b^dag: raise both indices
    out[1:, 1:] += np.outer(f[1:], f[1:]) * c[:-1, :-1]
    # a b: lower both indices
    out[:-1, :-1] -= np.outer(f[1:], f[1:]) * c[1:, 1:]
    return zeta * out


def _taylor_step(c, zeta):
    v = c.copy()
    term = c
    for j in range(1, 300):
        term = _squeeze_generator(term, zeta) / j
        v += term
        if float(np.sqrt(np.sum(term ** 2))) < 1e-18:
            return v
    raise ConvergenceError("squeezer Taylor step did not converge")


def apply_squeezer(state: DenseTwoModeState, lam_target: float,
                   tol: float = 1e-12) -> DenseTwoModeState:
    """Evolve by the two-mode squeezer exp[zeta (a^dag b^dag - a b)] with
    zeta = artanh(lam_target), so that vacuum input acquires the
    geometric TMSV amplitudes with weight parameter lam_target.

    The exponential is applied as subdivided Taylor steps, refined until
    two successive subdivisions agree to `tol`; output is unit-normalized.
    """
    if not 0.0 <= lam_target <= 0.8:
        raise ValueError(f"lam_target must be in [0, 0.8], got {lam_target}")
    if lam_target == 0.0:
        return state.normalized()
    zeta = math.atanh(lam_target)
    steps = max(1, math.ceil(zeta / 0.25))
    prev = None
    for _ in range(12):
        v = state.amps
        for _ in range(steps):
            v = _taylor_step(v, zeta / steps)
        v = v / np.sqrt(np.sum(v ** 2))
        if prev is not None and float(np.max(np.abs(v - prev))) <= tol:
            return DenseTwoModeState(v).check_leakage()
        prev = v
        steps *= 2
    raise ConvergenceError("squeezer step refinement did not converge")


def squeezed_vacuum(lam: float,
                    cutoff: int = DEFAULT_CUTOFF) -> DenseTwoModeState:
    """Dense TMSV by squeezing the vacuum; doubles the cutoff once if the
    leakage monitor trips."""
    try:
        return apply_squeezer(vacuum(cutoff), lam)
    except CutoffLeakageError:
        return apply_squeezer(vacuum(2 * cutoff), lam)


def schmidt_spectrum(state: DenseTwoModeState) -> np.ndarray:
    """Squared Schmidt coefficients: eigenvalues of the Gram matrix
    amps @ amps.T by cyclic Jacobi, sorted descending."""
    gram = state.amps @ state.amps.T
    eigs, _sweeps, converged = _kernels.jacobi_eigenvalues(gram)
    if not converged:
        raise ConvergenceError("Jacobi iteration did not reach tolerance")
    eigs = np.clip(eigs, 0.0, None)
    return np.sort(eigs)[::-1]


def covariance_from_moments(state: DenseTwoModeState):
    """Full 4x4 covariance matrix from raw quadrature moments, plus its
    (alpha, beta, gamma) normal form.

    Raises if the matrix does not match the expected block pattern
    (signals a state outside the family under study).
    """
    c = state.amps.astype(complex)
    xa = _create_a(c.real).astype(complex) + _annihilate_a(c.real)
    pa = 1j * (_create_a(c.real) - _annihilate_a(c.real))
    xb = (_create_a(c.real.T).astype(complex) + _annihilate_a(c.real.T)).T
    pb = (1j * (_create_a(c.real.T) - _annihilate_a(c.real.T))).T
    vecs = [xa, pa, xb, pb]
    means = np.array([np.real(np.sum(c.conj() * v)) for v in vecs])
    cov = np.empty((4, 4))
    for i in range(4):
        for j in range(4):
            cov[i, j] = np.real(np.sum(vecs[i].conj() * vecs[j])) \
                - means[i] * means[j]
    alpha = 0.5 * (cov[0, 0] + cov[1, 1])
    beta = 0.5 * (cov[2, 2] + cov[3, 3])
    gamma = 0.5 * (cov[0, 2] - cov[1, 3])
    pattern = CovarianceNormalForm(alpha, beta, gamma).as_matrix()
    deviation = float(np.max(np.abs(cov - pattern)))
    if deviation > 1e-10:
        raise ValueError(
            f"covariance deviates from the normal-form pattern by "
            f"{deviation:.3e}")
    return CovarianceNormalForm(alpha, beta, gamma), cov


def fidelity(a: DenseTwoModeState, b: DenseTwoModeState) -> float:
    """|<a|b>| for unit-normalized real-amplitude states."""
    if a.amps.shape != b.amps.shape:
        raise ValueError(f"cutoff mismatch: {a.amps.shape} vs {b.amps.shape}")
    return float(abs(np.sum(a.amps * b.amps)))
