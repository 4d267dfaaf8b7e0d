"""Signed Laplacian construction and its full real spectrum."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import accel
from .graphs import SignedGraph


class ConvergenceError(RuntimeError):
    """The Jacobi iteration did not reach its threshold within the sweep cap."""


def laplacian(g: SignedGraph) -> np.ndarray:
    """Dense signed Laplacian D - A: diagonal holds unsigned degrees,
    off-diagonal (i, j) is -sign(ij) for edges and 0 for non-edges."""
    n = g.n
    L = np.zeros((n, n))
    deg = g.base.degree_sequence()
    for v in range(n):
        L[v, v] = deg[v]
    for t, (i, j) in enumerate(g.base.edges):
        L[i, j] = L[j, i] = -g.sign(t)
    return L


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted non-increasing, with prefix sums of the k largest."""

    values: np.ndarray
    prefix: np.ndarray  # length n+1, prefix[k] = sum of the k largest

    @property
    def n(self) -> int:
        return len(self.values)

    def top_k_sum(self, k: int) -> float:
        if not 1 <= k <= self.n:
            raise ValueError(f"k must be in [1, {self.n}], got {k}")
        return float(self.prefix[k])


def eigenvalues(M) -> Spectrum:
    """All eigenvalues of a real symmetric matrix via cyclic Jacobi rotations.

    Iterates until the off-diagonal Frobenius norm drops below 1e-12 times
    the Frobenius norm of M, capped at 100 sweeps; raises ConvergenceError
    if the cap is hit first.
    """
    A = np.array(M, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"matrix must be square, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not symmetric")
    if not accel.jacobi_inplace(A):
        raise ConvergenceError(
            f"Jacobi did not converge within {accel.SWEEP_CAP} sweeps"
        )
    w = np.sort(np.diagonal(A).copy())[::-1]
    prefix = np.concatenate(([0.0], np.cumsum(w)))
    return Spectrum(values=w, prefix=prefix)


def top_k_sum(s: Spectrum, k: int) -> float:
    return s.top_k_sum(k)


def spectrum_of(g: SignedGraph) -> Spectrum:
    return eigenvalues(laplacian(g))
