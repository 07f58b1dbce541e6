"""Pure-Python/numpy kernel backend.

Same call signatures as the compiled backend in _core.pyx.  The Jacobi
sweep uses vectorized row/column rotations so it stays usable at the
default Fock cutoff (100) even without the extension.
"""

import numpy as np

BACKEND = "pure"


def hyp2f1_series(a, b, c, z, rtol=1e-16, max_terms=10_000_000):
    """Sum the Gauss hypergeometric series by term recurrence.

    Returns (value, terms_used, converged).  Stops once the relative term
    size has been below `rtol` twice in a row; a single small term can
    occur before the hump for large a, b.
    """
    total = 1.0
    term = 1.0
    small = 0
    m = 0
    while m < max_terms:
        term *= (a + m) * (b + m) * z / ((c + m) * (m + 1.0))
        total += term
        m += 1
        if abs(term) < rtol * abs(total):
            small += 1
            if small == 2:
                return total, m + 1, True
        else:
            small = 0
    return total, m + 1, False


def jacobi_eigenvalues(mat, tol=1e-14, max_sweeps=100):
    """Eigenvalues of a small dense symmetric matrix by cyclic Jacobi.

    Returns (eigenvalues, sweeps, converged) with convergence meaning the
    off-diagonal Frobenius norm fell to `tol` or below.
    """
    a = np.array(mat, dtype=np.float64, copy=True)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy(), 0, True
    for sweep in range(max_sweeps):
        off = np.sqrt(2.0 * np.sum(np.tril(a, -1) ** 2))
        if off <= tol:
            return a.diagonal().copy(), sweep, True
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) if theta != 0 else 1.0
                t /= abs(theta) + np.sqrt(theta * theta + 1.0)
                cs = 1.0 / np.sqrt(t * t + 1.0)
                sn = t * cs
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = cs * col_p - sn * col_q
                a[:, q] = sn * col_p + cs * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = cs * row_p - sn * row_q
                a[q, :] = sn * row_p + cs * row_q
    off = np.sqrt(2.0 * np.sum(np.tril(a, -1) ** 2))
    return a.diagonal().copy(), max_sweeps, bool(off <= tol)
