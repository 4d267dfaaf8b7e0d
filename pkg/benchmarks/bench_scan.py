#!/usr/bin/env python3
"""Benchmark the numba scan kernel against the pure-Python/numpy fallback.

Scans signing classes of a complete base graph with both builds of the
same source and reports throughput. The fallback is slow by design, so
its share of the space is capped.

Usage: python benchmarks/bench_scan.py [--n 7] [--fallback-limit 1024]
"""

import argparse
import time

import numpy as np

from signed_spectra import accel
from signed_spectra.conjectures import BoundKind
from signed_spectra.graphs import complete_graph
from signed_spectra.search import SearchJob, SearchMode, _scan_setup


def bench(scan, setup, masks, tol=1e-9):
    n = len(setup.deg)
    cap = len(masks) * n
    out = (np.zeros(cap, np.int64), np.zeros(cap, np.int64),
           np.zeros(cap, np.float64), np.zeros(cap, np.float64))
    t0 = time.perf_counter()
    count, best, bad = scan(masks, setup.ei, setup.ej, setup.deg, setup.var_pos,
                            setup.kbounds, setup.kcheck, tol, *out)
    dt = time.perf_counter() - t0
    assert bad == -1
    return dt, count, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=7, help="complete base graph order")
    ap.add_argument("--fallback-limit", type=int, default=1024,
                    help="max masks for the pure-Python build")
    args = ap.parse_args()

    job = SearchJob(base=complete_graph(args.n), kind=BoundKind.WANG_HOU,
                    mode=SearchMode.EXHAUSTIVE_CLASSES)
    setup = _scan_setup(job)
    masks = np.arange(setup.space, dtype=np.int64)
    print(f"K{args.n}: {setup.space} switching classes, "
          f"{len(setup.var_pos)} free sign bits")

    rows = []
    if accel.numba_available:
        bench(accel.scan_masks_nb, setup, masks[:64])  # warm up the JIT
        dt, count, best = bench(accel.scan_masks_nb, setup, masks)
        rows.append(("numba @njit", len(masks), dt, count, best))
    else:
        print("numba unavailable; benchmarking fallback only")

    sub = masks[: args.fallback_limit]
    dt, count, best = bench(accel.scan_masks_py, setup, sub)
    rows.append(("numpy fallback", len(sub), dt, count, best))

    print(f"{'build':<16} {'masks':>9} {'time':>9} {'masks/s':>12}")
    for name, nm, dt, count, best in rows:
        print(f"{name:<16} {nm:>9} {dt:>8.3f}s {nm / dt:>12.0f}")
    if len(rows) == 2:
        speedup = (rows[0][1] / rows[0][2]) / (rows[1][1] / rows[1][2])
        print(f"speedup: {speedup:.0f}x")


if __name__ == "__main__":
    main()
