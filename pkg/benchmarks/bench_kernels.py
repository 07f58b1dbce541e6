"""Compare the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from degauss._kernels import _pure

try:
    from degauss._kernels import _core
except ImportError:
    _core = None


def _time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_hyp2f1(mod):
    def run():
        for a in range(1, 11):
            for b in range(1, 11):
                for z in (0.0484, 0.16, 0.49, 0.81):
                    mod.hyp2f1_series(float(a), float(b), 1.0, z)
    return _time(run)


def bench_jacobi(mod, n=120):
    lam = 0.7
    w = np.sqrt((1 - lam ** 2) * lam ** (2 * np.arange(n)))
    c = np.diag(w)
    rng = np.random.default_rng(0)
    q, _ = np.linalg.qr(rng.normal(size=(n, n)))
    gram = (q @ c) @ (q @ c).T

    def run():
        mod.jacobi_eigenvalues(gram)
    return _time(run, repeats=3)


def main():
    rows = [("hyp2f1 grid (400 series)", bench_hyp2f1),
            ("jacobi 120x120 Gram", bench_jacobi)]
    print(f"{'kernel':<28} {'pure (s)':>10} {'compiled (s)':>13} "
          f"{'speedup':>8}")
    for name, bench in rows:
        tp = bench(_pure)
        if _core is None:
            print(f"{name:<28} {tp:>10.4f} {'n/a':>13} {'n/a':>8}")
            continue
        tc = bench(_core)
        print(f"{name:<28} {tp:>10.4f} {tc:>13.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
