"""Second-moment analysis of the Schmidt-state family: covariance normal
form (alpha, beta, gamma), symplectic eigenvalues, and relative-entropy
non-Gaussianity.

Quadrature convention: x = a^dag + a, p = i(a^dag - a), so the vacuum
covariance matrix is the identity and symplectic eigenvalues of physical
states satisfy nu >= 1.
"""

import math
from dataclasses import dataclass

import numpy as np

from .entanglement import _index_mean_closed
from .special import symplectic_entropy
from .states import SchmidtDiagonalState

__all__ = [
    "CovarianceNormalForm",
    "SymplecticSpectrum",
    "UnphysicalCovarianceError",
    "covariance_direct",
    "covariance_closed_diag",
    "symplectic_eigenvalues",
    "symplectic_moduli_from_matrix",
    "non_gaussianity",
]

_NU_TOL = 1e-9


class UnphysicalCovarianceError(ValueError):
    """Covariance parameters violate the nu >= 1 physicality bound."""


@dataclass(frozen=True)
class CovarianceNormalForm:
    """The (alpha, beta, gamma) triple of the block normal form
    [[alpha I, gamma sigma_z], [gamma sigma_z, beta I]]."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        if self.alpha < 1.0 - _NU_TOL or self.beta < 1.0 - _NU_TOL:
            raise UnphysicalCovarianceError(
                f"diagonal below vacuum level: ({self.alpha}, {self.beta})")
        if self.gamma < 0:
            raise UnphysicalCovarianceError(f"negative gamma: {self.gamma}")

    def as_matrix(self) -> np.ndarray:
        sz = np.diag([1.0, -1.0])
        eye = np.eye(2)
        return np.block([[self.alpha * eye, self.gamma * sz],
                         [self.gamma * sz, self.beta * eye]])


@dataclass(frozen=True)
class SymplecticSpectrum:
    nu_plus: float
    nu_minus: float


def covariance_direct(state: SchmidtDiagonalState) -> CovarianceNormalForm:
    """(alpha, beta, gamma) from direct sums over the Schmidt weights.

    alpha = 1 + 2<n_a>, beta = 1 + 2<n_b>, and gamma couples consecutive
    Schmidt terms:
        gamma = 2 sum_m sqrt((m+oa+1)(m+ob+1) w_m w_{m+1}).
    There is no closed form for gamma, so direct summation is the only
    route.
    """
    w = state.weights
    m = np.arange(len(w), dtype=float)
    na = float(np.sum(w * (m + state.offset_a)))
    nb = float(np.sum(w * (m + state.offset_b)))
    cross = (m[:-1] + state.offset_a + 1.0) * (m[:-1] + state.offset_b + 1.0) \
        * w[:-1] * w[1:]
    gamma = 2.0 * float(np.sum(np.sqrt(cross)))
    return CovarianceNormalForm(1.0 + 2.0 * na, 1.0 + 2.0 * nb, gamma)


def covariance_closed_diag(lam, k, l, op_kind):
    """(alpha, beta) from the closed hypergeometric index sums."""
    s = _index_mean_closed(lam, float(k), float(l), op_kind)
    if op_kind in ("add", "tmsv"):
        return 1.0 + 2.0 * k + 2.0 * s, 1.0 + 2.0 * l + 2.0 * s
    return 1.0 - 2.0 * k + 2.0 * s, 1.0 - 2.0 * l + 2.0 * s


def symplectic_eigenvalues(c: CovarianceNormalForm) -> SymplecticSpectrum:
    """Symplectic eigenvalues of the normal form:

        nu_pm = sqrt(((alpha+beta)/2)^2 - gamma^2) +- (alpha-beta)/2

    This satisfies both trace identities
        nu+ nu- = alpha beta - gamma^2,
        nu+^2 + nu-^2 = alpha^2 + beta^2 - 2 gamma^2,
    and yields nu = 1 for every pure Gaussian member of the family.
    """
    arg = ((c.alpha + c.beta) / 2.0) ** 2 - c.gamma ** 2
    if arg < 0:
        raise UnphysicalCovarianceError(
            f"negative discriminant for {c}: {arg}")
    root = math.sqrt(arg)
    half_diff = (c.alpha - c.beta) / 2.0
    nu_p = root + abs(half_diff)
    nu_m = root - abs(half_diff)
    if nu_m < 1.0 - _NU_TOL:
        raise UnphysicalCovarianceError(f"nu_minus = {nu_m} < 1 for {c}")
    nu_m = max(nu_m, 1.0)
    nu_p = max(nu_p, 1.0)
    return SymplecticSpectrum(nu_p, nu_m)


def symplectic_moduli_from_matrix(cov: np.ndarray) -> SymplecticSpectrum:
    """Convention-free route: moduli of the eigenvalues of i Omega C.

    Used to cross-validate the normal-form formula; not on the hot path.
    """
    omega = np.zeros((4, 4))
    for j in (0, 2):
        omega[j, j + 1] = 1.0
        omega[j + 1, j] = -1.0
    moduli = np.sort(np.abs(np.linalg.eigvals(omega @ cov)))
    # eigenvalues come in +-i nu pairs
    return SymplecticSpectrum(float(moduli[3]), float(moduli[0]))


def non_gaussianity(state: SchmidtDiagonalState) -> float:
    """Relative entropy between the state and the Gaussian state with the
    same first and second moments.

    The states here are pure, so this reduces to the entropy of the
    Gaussian reference: g(nu+) + g(nu-) in the state's log base.
    """
    spectrum = symplectic_eigenvalues(covariance_direct(state))
    return symplectic_entropy(spectrum.nu_plus, state.base) \
        + symplectic_entropy(spectrum.nu_minus, state.base)
