#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times each kernel at the two sizes that matter in practice (81-sample
analysis grid, 1500-pixel sensor reads), then times the full analysis
pipeline once per backend in a subprocess so the import-time selection is
exercised for real.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import subprocess
import sys
import time

import numpy as np

from lumispec import _kernels_np

try:
    from lumispec import _kernels_cy
except ImportError:
    _kernels_cy = None


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(5):
        start = time.perf_counter()
        for _ in range(repeats):
            fn()
        best = min(best, (time.perf_counter() - start) / repeats)
    return best


def cases():
    rng = np.random.default_rng(1)
    grid81 = 380.0 + 5.0 * np.arange(81)
    grid1500 = np.linspace(391.0, 723.0, 1500)
    values81 = rng.uniform(0.0, 1.0, 81)
    counts1500 = rng.uniform(500.0, 3800.0, 1500)
    weights81 = rng.uniform(0.0, 1.8, 81)
    resp_coeffs = np.array([-1.783e32, 4.289e26, -3.919e20,
                            1.575e14, -2.170e7, 0.2012])
    wl_m = grid1500 * 1e-9
    yield ("interp 81->1500", lambda k: k.interp_linear_zero(
        grid81, values81, grid1500))
    yield ("interp 1500->81", lambda k: k.interp_linear_zero(
        grid1500, counts1500, grid81))
    yield ("weighted_sum 81", lambda k: k.weighted_sum(
        values81, weights81, 5.0))
    yield ("planck 81", lambda k: k.planck_law(
        grid81 * 1e-9, 3456.0, 3.7418e-16, 1.4388e-2))
    yield ("polyval 1500", lambda k: k.polyval(resp_coeffs, wl_m))
    yield ("dark_subtract 1500", lambda k: k.dark_subtract(
        counts1500, 3800.0))


def bench_kernels(repeats):
    print(f"{'kernel':<22}{'numpy':>12}{'compiled':>12}{'speedup':>10}")
    for name, fn in cases():
        t_np = timeit(lambda: fn(_kernels_np), repeats)
        if _kernels_cy is None:
            print(f"{name:<22}{t_np * 1e6:>10.2f}us{'n/a':>12}{'':>10}")
            continue
        t_cy = timeit(lambda: fn(_kernels_cy), repeats)
        print(f"{name:<22}{t_np * 1e6:>10.2f}us{t_cy * 1e6:>10.2f}us"
              f"{t_np / t_cy:>9.1f}x")


PIPELINE_SNIPPET = """
import logging, time
logging.disable(logging.WARNING)
from lumispec.ciedata import bundled_datasets
from lumispec.cri import general_cri
from lumispec.reference import planck_spd
from lumispec.spectral import CANONICAL_GRID
import lumispec.kernels
ds = bundled_datasets()
spd = planck_spd(4200.0, CANONICAL_GRID)
general_cri(spd, ds.cmf, ds.tcs, ds.daylight)  # warm up
n = 50
start = time.perf_counter()
for _ in range(n):
    general_cri(spd, ds.cmf, ds.tcs, ds.daylight)
per_run = (time.perf_counter() - start) / n
print(f"{lumispec.kernels.active_backend()}: {per_run * 1e3:.3f} ms per analysis")
"""


def bench_pipeline():
    print("\nfull analysis (50 runs each):")
    backends = ["numpy"] + (["compiled"] if _kernels_cy is not None else [])
    for backend in backends:
        out = subprocess.run(
            [sys.executable, "-c", PIPELINE_SNIPPET],
            env={"PATH": "/usr/bin:/bin", "LUMISPEC_KERNELS": backend},
            capture_output=True, text=True)
        sys.stdout.write("  " + (out.stdout or out.stderr))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=2000)
    args = parser.parse_args()
    if _kernels_cy is None:
        print("note: compiled kernels unavailable, timing numpy only\n")
    bench_kernels(args.repeats)
    bench_pipeline()


if __name__ == "__main__":
    main()
