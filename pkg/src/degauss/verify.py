"""Self-check battery behind the `verify` CLI subcommand.

Each check recomputes one of the package's cross-identities (closed form
vs oracle, symmetry, monotonicity, ...) and reports pass/fail.  The fast
level caps the oracle cutoff at 60 and the operation counts at 2.
"""

import time

import numpy as np

from . import entanglement as ent
from . import gaussian as gl
from . import oracle as fo
from . import states as st

__all__ = ["run_checks", "CHECK_NAMES"]


def _check_normalization(fast):
    lams = [0.1, 0.5, 0.9] if fast else [round(0.1 * i, 1) for i in range(1, 10)]
    kmax = 2 if fast else 10
    worst = 0.0
    for lam in lams:
        for k in range(kmax + 1):
            for l in range(kmax + 1):
                for build in (st.build_added, st.build_subtracted):
                    s = build(lam, k, l)
                    worst = max(worst, abs(float(np.sum(s.weights)) - 1.0))
    return worst <= 2e-10, f"max |sum w - 1| = {worst:.2e}"


def _check_symmetric_equality(fast):
    kmax = 2 if fast else 8
    worst = 0.0
    for lam in (0.22, 0.4, 0.7):
        for k in range(kmax + 1):
            ea = ent.schmidt_entropy(st.build_added(lam, k, k))
            es = ent.schmidt_entropy(st.build_subtracted(lam, k, k))
            worst = max(worst, abs(ea - es))
    return worst <= 1e-12, f"max |E_add - E_sub| at k=l: {worst:.2e}"


def _check_monotonicity(fast):
    kmax = 3 if fast else 9
    lams = [0.1, 0.5, 0.9] if fast else [round(0.1 * i, 1) for i in range(1, 10)]
    for lam in lams:
        prev = ent.schmidt_entropy(st.build_added(lam, 0, 0))
        for k in range(1, kmax + 1):
            cur = ent.schmidt_entropy(st.build_added(lam, k, 0))
            if cur <= prev:
                return False, f"E not increasing at lam={lam}, k={k}"
            prev = cur
    worst = 0.0
    for lam in (0.22, 0.4, 0.7):
        for k in range(kmax + 1):
            for n in range(30):
                worst = max(worst, abs(st.pascal_recursion_residual(lam, k, n)))
    return worst <= 1e-14, f"Pascal residual max {worst:.2e}"


def _check_oracle(fast):
    cutoff = 60 if fast else 100
    kmax = 2 if fast else 3
    worst = 0.0
    for lam in (0.22, 0.4):
        tmsv = fo.squeezed_vacuum(lam, cutoff)
        for k in range(kmax + 1):
            for l in range(kmax + 1):
                for op, kind, build in (("create", "add", st.build_added),
                                        ("annihilate", "sub",
                                         st.build_subtracted)):
                    dense = tmsv
                    for _ in range(k):
                        dense = fo.apply_ladder(dense, "A", op)
                    for _ in range(l):
                        dense = fo.apply_ladder(dense, "B", op)
                    dense = dense.normalized()
                    ref = build(lam, k, l, epsilon=1e-13)
                    spec = fo.schmidt_spectrum(dense)[:ref.n_terms]
                    ref_sorted = np.sort(ref.weights)[::-1]
                    worst = max(worst, float(np.max(np.abs(
                        spec - ref_sorted))))
                    cov_o, _cov4 = fo.covariance_from_moments(dense)
                    cov_c = gl.covariance_direct(ref)
                    worst = max(worst, abs(cov_o.alpha - cov_c.alpha),
                                abs(cov_o.beta - cov_c.beta),
                                abs(cov_o.gamma - cov_c.gamma))
    # annihilate(B) on TMSV equals lam * create(A) on TMSV as vectors
    for lam in (0.22, 0.4):
        tmsv = fo.squeezed_vacuum(lam, cutoff)
        lhs = fo.apply_ladder(tmsv, "B", "annihilate").amps
        rhs = lam * fo.apply_ladder(tmsv, "A", "create").amps
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst <= 1e-9, f"max oracle deviation {worst:.2e}"


def _check_schemes(fast):
    cutoff = 60 if fast else 100
    kmax = 2 if fast else 3
    lam = 0.4
    worst = 1.0
    for k in range(1, kmax + 1):
        tmsv = fo.squeezed_vacuum(lam, cutoff)
        s1 = tmsv
        for _ in range(k):
            s1 = fo.apply_ladder(s1, "A", "create")
        s1 = s1.normalized()
        s2 = tmsv
        for _ in range(k):
            s2 = fo.apply_ladder(s2, "B", "annihilate")
        s2 = s2.normalized()
        s3 = fo.vacuum(cutoff)
        for _ in range(k):
            s3 = fo.apply_ladder(s3, "A", "create")
        s3 = fo.apply_squeezer(s3.normalized(), lam)
        worst = min(worst, fo.fidelity(s1, s2), fo.fidelity(s1, s3),
                    fo.fidelity(s2, s3))
    return worst >= 1.0 - 1e-10, f"min scheme fidelity {worst:.12f}"


def _check_symplectic(fast):
    kmax = 2 if fast else 8
    worst = 0.0
    for lam in (0.22, 0.4):
        for k in range(kmax + 1):
            for l in range(kmax + 1):
                for build in (st.build_added, st.build_subtracted):
                    c = gl.covariance_direct(build(lam, k, l))
                    s = gl.symplectic_eigenvalues(c)
                    det = c.alpha * c.beta - c.gamma ** 2
                    tr2 = c.alpha ** 2 + c.beta ** 2 - 2.0 * c.gamma ** 2
                    worst = max(
                        worst,
                        abs(s.nu_plus * s.nu_minus - det) / det,
                        abs(s.nu_plus ** 2 + s.nu_minus ** 2 - tr2) / tr2)
                    ref = gl.symplectic_moduli_from_matrix(c.as_matrix())
                    worst = max(worst, abs(s.nu_plus - ref.nu_plus),
                                abs(s.nu_minus - ref.nu_minus))
    # tight truncation: the nu = 1 check is about the formulas, and the
    # second moments inherit an O(n_max * epsilon) truncation error
    for lam in [round(0.1 * i, 1) for i in range(1, 8)]:
        s = gl.symplectic_eigenvalues(
            gl.covariance_direct(st.build_tmsv(lam, epsilon=1e-14)))
        worst = max(worst, abs(s.nu_plus - 1.0), abs(s.nu_minus - 1.0))
    return worst <= 1e-9, f"max symplectic deviation {worst:.2e}"


def _check_anomaly(fast):
    def dips(lam):
        e = [ent.schmidt_entropy(st.build_subtracted(lam, k, 4))
             for k in range(4, 11)]
        return any(e[i + 1] < e[i] for i in range(len(e) - 1))

    if not dips(0.22):
        return False, "no entanglement dip at lam=0.22, l=4"
    if dips(0.4):
        return False, "unexpected entanglement dip at lam=0.4, l=4"
    return True, "subtraction dip present at lam=0.22 only"


CHECK_NAMES = ["normalization", "symmetric-equality", "monotonicity",
               "oracle-equivalence", "fig2-schemes", "symplectic-identity",
               "anomaly"]

_CHECKS = {
    "normalization": _check_normalization,
    "symmetric-equality": _check_symmetric_equality,
    "monotonicity": _check_monotonicity,
    "oracle-equivalence": _check_oracle,
    "fig2-schemes": _check_schemes,
    "symplectic-identity": _check_symplectic,
    "anomaly": _check_anomaly,
}


def run_checks(level="fast", out=print):
    """Run the battery; returns True iff every check passed."""
    fast = level == "fast"
    all_ok = True
    for name in CHECK_NAMES:
        t0 = time.perf_counter()
        ok, detail = _CHECKS[name](fast)
        dt = time.perf_counter() - t0
        all_ok = all_ok and ok
        out(f"[{'PASS' if ok else 'FAIL'}] {name:<22} {detail}  ({dt:.2f}s)")
    return all_ok
