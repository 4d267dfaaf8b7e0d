"""Simple and signed graph types with a fixed canonical edge order.

Edges are stored as pairs (i, j) with i < j, sorted lexicographically.
The position of an edge in that list is its canonical index t, and a
signing is a bit vector over t: bit set means the edge is negative.
The all-positive signing is therefore the integer 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np


class GraphParseError(ValueError):
    """Malformed graph text input; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class LaplacianValidationError(ValueError):
    """An integer matrix that is not the Laplacian of any signed simple graph."""


@dataclass(frozen=True)
class SimpleGraph:
    """An unsigned simple graph on vertices 0..n-1 with a canonical edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        object.__setattr__(self, "edges", tuple((int(i), int(j)) for i, j in self.edges))
        prev = None
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge ({i}, {j}) is not 0 <= i < j < {self.n}")
            if prev is not None and (i, j) <= prev:
                raise ValueError(f"edges not strictly increasing at ({i}, {j})")
            prev = (i, j)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def label(self) -> str:
        """Short human label: K{n} for complete graphs, G{n}m{m} otherwise."""
        if self.m == self.n * (self.n - 1) // 2:
            return f"K{self.n}"
        return f"G{self.n}m{self.m}"

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: t for t, e in enumerate(self.edges)}

    def degree_sequence(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def adjacency_lists(self) -> list[list[int]]:
        """Neighbors per vertex, each list ascending."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for lst in adj:
            lst.sort()
        return adj


def complete_graph(n: int) -> SimpleGraph:
    """K_n with its n(n-1)/2 edges in canonical order."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    return SimpleGraph(n, tuple(combinations(range(n), 2)))


@dataclass(frozen=True)
class SignedGraph:
    """A base graph plus a sign bit vector: bit t set means edge t is negative."""

    base: SimpleGraph
    signs: int = 0

    def __post_init__(self):
        if not 0 <= self.signs < (1 << self.base.m):
            raise ValueError(
                f"sign bit vector {self.signs:#x} out of range for m={self.base.m}"
            )

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    def sign(self, t: int) -> int:
        """Sign (+1 or -1) of the edge with canonical index t."""
        if not 0 <= t < self.m:
            raise IndexError(f"edge index {t} out of range")
        return -1 if (self.signs >> t) & 1 else 1

    def edge_signs(self) -> np.ndarray:
        """Signs of all edges in canonical order as an int8 array of +-1."""
        out = np.ones(self.m, dtype=np.int8)
        for t in range(self.m):
            if (self.signs >> t) & 1:
                out[t] = -1
        return out

    def signs_hex(self) -> str:
        width = max(1, (self.m + 3) // 4)
        return f"{self.signs:0{width}x}"


def all_positive(base: SimpleGraph) -> SignedGraph:
    return SignedGraph(base, 0)


def parse_edge_list(text: str) -> SignedGraph:
    """Parse the "n m" / "i j s" edge-list format into a SignedGraph.

    Input edges may appear in any order and orientation; they are
    normalized to i < j and sorted into canonical order.
    """
    lines = text.splitlines()
    rows: list[tuple[int, str]] = [
        (no, ln.strip()) for no, ln in enumerate(lines, start=1) if ln.strip()
    ]
    if not rows:
        raise GraphParseError(1, "empty input")
    head_no, head = rows[0]
    parts = head.split()
    if len(parts) != 2:
        raise GraphParseError(head_no, f"header must be 'n m', got {head!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(head_no, f"header must be two integers, got {head!r}") from None
    if n < 1:
        raise GraphParseError(head_no, f"vertex count must be positive, got {n}")
    if m < 0 or m > n * (n - 1) // 2:
        raise GraphParseError(head_no, f"edge count {m} impossible for n={n}")
    if len(rows) - 1 != m:
        raise GraphParseError(head_no, f"expected {m} edge lines, found {len(rows) - 1}")

    seen: dict[tuple[int, int], int] = {}
    signed_edges: list[tuple[tuple[int, int], int]] = []
    for no, ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise GraphParseError(no, f"edge line must be 'i j s', got {ln!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(no, f"vertex indices must be integers, got {ln!r}") from None
        if parts[2] in ("+1", "1"):
            s = 1
        elif parts[2] == "-1":
            s = -1
        else:
            raise GraphParseError(no, f"sign must be +1 or -1, got {parts[2]!r}")
        if i == j:
            raise GraphParseError(no, f"self-loop at vertex {i}")
        if i > j:
            i, j = j, i
        if not 0 <= i < j < n:
            raise GraphParseError(no, f"vertex index out of range for n={n}")
        if (i, j) in seen:
            raise GraphParseError(no, f"duplicate edge ({i}, {j}), first on line {seen[(i, j)]}")
        seen[(i, j)] = no
        signed_edges.append(((i, j), s))

    signed_edges.sort(key=lambda es: es[0])
    base = SimpleGraph(n, tuple(e for e, _ in signed_edges))
    signs = 0
    for t, (_, s) in enumerate(signed_edges):
        if s < 0:
            signs |= 1 << t
    return SignedGraph(base, signs)


def serialize(g: SignedGraph) -> str:
    """Emit the edge-list format accepted by parse_edge_list (LF endings)."""
    out = [f"{g.n} {g.m}"]
    for t, (i, j) in enumerate(g.base.edges):
        out.append(f"{i} {j} {'+1' if g.sign(t) > 0 else '-1'}")
    return "\n".join(out) + "\n"


def from_laplacian_matrix(M) -> SignedGraph:
    """Recover the signed graph whose Laplacian D - A equals the integer matrix M.

    Off-diagonal entry -1 means a positive edge, +1 a negative edge, 0 a
    non-edge; each diagonal entry must equal the degree of its vertex.
    """
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise LaplacianValidationError(f"matrix must be square, got shape {A.shape}")
    if not np.issubdtype(A.dtype, np.integer):
        B = np.rint(A)
        if not np.array_equal(A, B):
            raise LaplacianValidationError("matrix entries must be integers")
        A = B.astype(np.int64)
    n = A.shape[0]
    if n < 1:
        raise LaplacianValidationError("matrix must have positive dimension")
    if not np.array_equal(A, A.T):
        raise LaplacianValidationError("matrix is not symmetric")

    edges: list[tuple[int, int]] = []
    signs = 0
    for i in range(n):
        for j in range(i + 1, n):
            v = int(A[i, j])
            if v == 0:
                continue
            if v not in (-1, 1):
                raise LaplacianValidationError(
                    f"off-diagonal entry at ({i}, {j}) is {v}, must be -1, 0 or +1"
                )
            if v == 1:  # entry +1 = -sigma, so the edge is negative
                signs |= 1 << len(edges)
            edges.append((i, j))
    deg = [0] * n
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    for v in range(n):
        if int(A[v, v]) != deg[v]:
            raise LaplacianValidationError(
                f"diagonal entry at vertex {v} is {int(A[v, v])}, degree is {deg[v]}"
            )
    return SignedGraph(SimpleGraph(n, tuple(edges)), signs)


def parse_laplacian_text(text: str) -> np.ndarray:
    """Parse the matrix text format: first line "n", then n rows of n integers."""
    rows = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not rows:
        raise GraphParseError(1, "empty input")
    head_no, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise GraphParseError(head_no, f"header must be a single integer n, got {head!r}") from None
    if n < 1:
        raise GraphParseError(head_no, f"dimension must be positive, got {n}")
    if len(rows) - 1 != n:
        raise GraphParseError(head_no, f"expected {n} matrix rows, found {len(rows) - 1}")
    M = np.zeros((n, n), dtype=np.int64)
    for r, (no, ln) in enumerate(rows[1:]):
        parts = ln.split()
        if len(parts) != n:
            raise GraphParseError(no, f"expected {n} entries, found {len(parts)}")
        try:
            M[r] = [int(p) for p in parts]
        except ValueError:
            raise GraphParseError(no, f"matrix entries must be integers, got {ln!r}") from None
    return M


def format_laplacian_text(M) -> str:
    A = np.asarray(M)
    n = A.shape[0]
    lines = [str(n)]
    for r in range(n):
        lines.append(" ".join(str(int(A[r, c])) for c in range(n)))
    return "\n".join(lines) + "\n"
