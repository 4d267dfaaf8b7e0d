"""Hot numeric kernels: cyclic Jacobi eigensolver and the signing-scan loop.

Both kernels exist in two builds from the same source: a numba @njit build
and a pure-numpy/Python fallback. The fallback is selected by setting the
environment variable SIGNED_SPECTRA_NO_NUMBA=1 (or if numba is missing).
`benchmarks/bench_scan.py` compares the two builds.
"""

from __future__ import annotations

import os

import numpy as np

SWEEP_CAP = 100
OFFDIAG_RTOL = 1e-12


def _jacobi_source(a):
    # Cyclic-by-row Jacobi on a full symmetric matrix, in place.
    # Eigenvalues end up on the diagonal (unsorted). Returns False if the
    # off-diagonal Frobenius norm is still above OFFDIAG_RTOL * ||a||_F
    # after SWEEP_CAP sweeps.
    n = a.shape[0]
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j] * a[i, j]
    thresh = OFFDIAG_RTOL * np.sqrt(fro)
    for _sweep in range(SWEEP_CAP):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        if np.sqrt(2.0 * off) <= thresh:
            return True
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = c * aip - s * aiq
                        a[p, i] = a[i, p]
                        a[i, q] = s * aip + c * aiq
                        a[q, i] = a[i, q]
                a[p, p] = a[p, p] - t * apq
                a[q, q] = a[q, q] + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    off = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            off += a[i, j] * a[i, j]
    return np.sqrt(2.0 * off) <= thresh


def _make_scan(jacobi):
    def scan_masks(masks, ei, ej, deg, var_pos, kbounds, kcheck, tol,
                   out_mask, out_k, out_sum, out_margin):
        # For each mask: build the signed Laplacian (bit b of the mask
        # negates edge var_pos[b]), solve for eigenvalues, and test the
        # top-k sums against kbounds for every checked k.
        # Returns (violation count, best margin seen, first non-converged
        # mask or -1).
        n = deg.shape[0]
        m = ei.shape[0]
        nvar = var_pos.shape[0]
        L = np.empty((n, n))
        w = np.empty(n)
        count = 0
        best = -np.inf
        bad = -1
        for idx in range(masks.shape[0]):
            mask = masks[idx]
            for i in range(n):
                for j in range(n):
                    L[i, j] = 0.0
                L[i, i] = deg[i]
            for t in range(m):
                L[ei[t], ej[t]] = -1.0
                L[ej[t], ei[t]] = -1.0
            for b in range(nvar):
                if (mask >> b) & 1:
                    t = var_pos[b]
                    L[ei[t], ej[t]] = 1.0
                    L[ej[t], ei[t]] = 1.0
            if not jacobi(L):
                if bad < 0:
                    bad = mask
                continue
            for i in range(n):
                w[i] = L[i, i]
            for i in range(1, n):  # insertion sort, descending
                key = w[i]
                j = i - 1
                while j >= 0 and w[j] < key:
                    w[j + 1] = w[j]
                    j -= 1
                w[j + 1] = key
            acc = 0.0
            for k in range(n):
                acc += w[k]
                if kcheck[k]:
                    mg = acc - kbounds[k]
                    if mg > best:
                        best = mg
                    if mg > tol:
                        out_mask[count] = mask
                        out_k[count] = k + 1
                        out_sum[count] = acc
                        out_margin[count] = mg
                        count += 1
        return count, best, bad

    return scan_masks


jacobi_inplace_py = _jacobi_source
scan_masks_py = _make_scan(_jacobi_source)

jacobi_inplace_nb = None
scan_masks_nb = None
numba_available = False
try:
    from numba import njit

    jacobi_inplace_nb = njit(cache=True)(_jacobi_source)
    scan_masks_nb = njit(_make_scan(jacobi_inplace_nb))
    numba_available = True
except ImportError:
    pass


def _env_disabled() -> bool:
    return os.environ.get("SIGNED_SPECTRA_NO_NUMBA", "").lower() in ("1", "true", "yes")


jit_enabled = numba_available and not _env_disabled()
jacobi_inplace = jacobi_inplace_nb if jit_enabled else jacobi_inplace_py
scan_masks = scan_masks_nb if jit_enabled else scan_masks_py
