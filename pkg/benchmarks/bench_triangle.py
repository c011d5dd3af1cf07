"""Time the S_n statistic enumeration with the numba kernel and the numpy fallback.

    python3 benchmarks/bench_triangle.py [--n-max 10] [--repeat 3]
"""

import argparse
import time

import numpy as np

from permgrammar import _kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable or disabled; timing numpy only")
    else:
        _kernels.stat_counts(3, use_numba=True)  # compile outside the timed region
    print(f"{'n':>3} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for n in range(args.n_min, args.n_max + 1):
        t_np, ref = best_of(lambda: _kernels.stat_counts(n, use_numba=False), args.repeat)
        if _kernels.HAVE_NUMBA:
            t_nb, got = best_of(lambda: _kernels.stat_counts(n, use_numba=True), args.repeat)
            assert np.array_equal(got, ref), f"backends disagree at n={n}"
            print(f"{n:>3} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>8.1f}")
        else:
            print(f"{n:>3} {'-':>10} {t_np:>10.4f} {'-':>8}")


if __name__ == "__main__":
    main()
