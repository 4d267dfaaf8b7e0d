"""Built-in counterexample fixtures used by the repro subcommand.

Two published signed complete graphs whose Laplacian eigenvalue sums
exceed the signed-graph bound: a signed K7 at k = 4 and a signed K8 at
k = 5. The signings are defined by their integer Laplacian matrices;
reference eigenvalues are quoted to 4-5 significant digits, so agreement
is checked at 1e-3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import SignedGraph, from_laplacian_matrix

REFERENCE_TOL = 1e-3


@dataclass(frozen=True)
class Counterexample:
    name: str
    laplacian: np.ndarray          # integer matrix defining the signing
    eigenvalues: tuple[float, ...]  # reference values, non-increasing
    k: int                          # violating k
    top_sum: float                  # reference sum of the k largest
    bound: int                      # signed-graph bound at that k

    def graph(self) -> SignedGraph:
        return from_laplacian_matrix(self.laplacian)


K7_COUNTEREXAMPLE = Counterexample(
    name="K7",
    laplacian=np.array([
        [6, 1, 1, -1, 1, -1, 1],
        [1, 6, 1, 1, -1, 1, 1],
        [1, 1, 6, 1, 1, -1, -1],
        [-1, 1, 1, 6, 1, 1, -1],
        [1, -1, 1, 1, 6, 1, 1],
        [-1, 1, -1, 1, 1, 6, 1],
        [1, 1, -1, -1, 1, 1, 6],
    ], dtype=np.int64),
    eigenvalues=(8.7015, 8.2360, 8.2360, 7.0, 3.7639, 3.7639, 2.2984),
    k=4,
    top_sum=32.1735,
    bound=32,
)

K8_COUNTEREXAMPLE = Counterexample(
    name="K8",
    laplacian=np.array([
        [7, 1, 1, 1, -1, 1, 1, 1],
        [1, 7, 1, 1, 1, -1, -1, 1],
        [1, 1, 7, 1, 1, -1, 1, -1],
        [1, 1, 1, 7, 1, 1, -1, -1],
        [-1, 1, 1, 1, 7, 1, 1, 1],
        [1, -1, -1, 1, 1, 7, 1, 1],
        [1, -1, 1, -1, 1, 1, 7, 1],
        [1, 1, -1, -1, 1, 1, 1, 7],
    ], dtype=np.int64),
    eigenvalues=(10.6056, 10.0, 8.0, 8.0, 8.0, 4.0, 4.0, 3.3944),
    k=5,
    top_sum=44.6056,
    bound=44,
)

COUNTEREXAMPLES = {1: K7_COUNTEREXAMPLE, 2: K8_COUNTEREXAMPLE}
