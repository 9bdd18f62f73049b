"""Benchmark the compiled evaluation kernels against the numpy fallback.

Times the three hot kernels on realistic workloads (the piecewise
representation of a depth-3 family member, a long truncated series) plus an
end-to-end family sweep.  Run after `python setup.py build_ext --inplace`:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from seiffert._kernels import fallback

try:
    from seiffert._kernels import _cheb as compiled
except ImportError:
    compiled = None

from seiffert.transform import family_member


def timeit(fn, *args, repeat=7):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    member = family_member("tanh", 3)
    rep = member.hat_rep
    breaks = np.ascontiguousarray(rep.breaks)
    coefs = np.ascontiguousarray(rep.coefs)
    degs = np.ascontiguousarray(rep.degrees, dtype=np.int64)
    x = np.ascontiguousarray(np.random.default_rng(0).uniform(1e-8, 1 - 1e-8, 1_000_000))

    coef1 = np.ascontiguousarray(rep.coefs[0, : rep.degrees[0]])
    t = np.ascontiguousarray(np.linspace(-1, 1, 1_000_000))

    poly = np.ascontiguousarray(np.arange(1.0, 130.0) ** -2)
    zx = np.ascontiguousarray(np.linspace(1e-8, 1 - 1e-8, 1_000_000))

    rows = [
        ("clenshaw (1e6 pts, deg %d)" % len(coef1), (coef1, t), "clenshaw"),
        ("piecewise (1e6 pts, %d panels)" % (len(breaks) - 1), (breaks, coefs, degs, x), "piecewise_clenshaw"),
        ("polyval (1e6 pts, 130 coeffs)", (poly, zx), "polyval_ascending"),
    ]

    print(f"{'kernel':40s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label, args, name in rows:
        t_py = timeit(getattr(fallback, name), *args)
        if compiled is None:
            print(f"{label:40s} {t_py*1e3:9.2f}ms {'n/a':>10s}")
            continue
        t_c = timeit(getattr(compiled, name), *args)
        out_py = getattr(fallback, name)(*args)
        out_c = getattr(compiled, name)(*args)
        assert np.max(np.abs(out_py - out_c)) < 1e-12
        print(f"{label:40s} {t_py*1e3:9.2f}ms {t_c*1e3:9.2f}ms {t_py/t_c:7.1f}x")

    # end-to-end: a corpus-sized sweep through the selected backend
    z = np.linspace(1e-8, 1 - 1e-8, 10_000)
    t_sweep = timeit(lambda: member.hat(z))
    from seiffert._kernels import BACKEND

    print(f"\nfamily hat sweep (1e4 pts) via {BACKEND} backend: {t_sweep*1e3:.3f}ms")


if __name__ == "__main__":
    main()
