"""Photon-added and photon-subtracted two-mode squeezed vacuum states:
exact Schmidt-form construction, entanglement entropy, energy efficiency,
covariance normal form, symplectic spectrum and relative-entropy
non-Gaussianity, backed by a brute-force truncated-Fock oracle."""

from ._kernels import BACKEND
from .entanglement import (EntanglementReport, energy_efficiency,
                           entanglement_report, mean_photon_closed,
                           mean_photon_number, schmidt_entropy,
                           tmsv_entropy_closed)
from .gaussian import (CovarianceNormalForm, SymplecticSpectrum,
                       UnphysicalCovarianceError, covariance_closed_diag,
                       covariance_direct, non_gaussianity,
                       symplectic_eigenvalues)
from .special import (ConvergenceError, SeriesResult, gauss_2f1,
                      log_binomial, log_gamma, symplectic_entropy,
                      thermal_entropy)
from .states import (SchmidtDiagonalState, build_added, build_subtracted,
                     build_tmsv, pascal_recursion_residual)

__version__ = "0.1.0"
