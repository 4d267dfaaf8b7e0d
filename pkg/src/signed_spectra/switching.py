"""Switching equivalence of signings.

Switching at a vertex set negates every edge crossing the cut; it is a
similarity of the Laplacian by a +-1 diagonal matrix, so the spectrum is
invariant. Fixing a spanning tree (BFS from vertex 0 in canonical edge
order) gives exactly one representative per switching class: the signing
with every tree edge positive. A connected base with m edges and n
vertices therefore has 2^(m-n+1) classes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graphs import SignedGraph, SimpleGraph
from .spectra import spectrum_of


class DisconnectedGraphError(ValueError):
    """Canonicalization and class enumeration require a connected base graph."""


def vertex_mask(vertices, n: int) -> int:
    """Bit vector over vertices from an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def switch(g: SignedGraph, vmask: int) -> SignedGraph:
    """Negate every edge with exactly one endpoint in the vertex set vmask."""
    n = g.n
    if not 0 <= vmask < (1 << n):
        raise ValueError(f"vertex mask {vmask:#x} does not fit n={n}")
    flips = 0
    for t, (i, j) in enumerate(g.base.edges):
        if ((vmask >> i) ^ (vmask >> j)) & 1:
            flips |= 1 << t
    return SignedGraph(g.base, g.signs ^ flips)


@dataclass(frozen=True)
class SpanningTree:
    """BFS tree from vertex 0; the fixed gauge for canonical representatives."""

    order: tuple[int, ...]              # BFS visit order, order[0] == 0
    parent_edge: tuple[int, ...]        # canonical edge index to parent, -1 at root
    parent: tuple[int, ...]             # parent vertex, -1 at root
    tree_edges: frozenset[int]
    nontree_edges: tuple[int, ...]      # ascending canonical indices


def spanning_tree(base: SimpleGraph) -> SpanningTree:
    n = base.n
    idx = base.edge_index()
    adj = base.adjacency_lists()
    parent = [-1] * n
    parent_edge = [-1] * n
    seen = [False] * n
    seen[0] = True
    order = [0]
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                parent_edge[v] = idx[(min(u, v), max(u, v))]
                order.append(v)
                queue.append(v)
    if len(order) != n:
        raise DisconnectedGraphError(
            f"base graph is disconnected ({len(order)} of {n} vertices reachable)"
        )
    tree = frozenset(parent_edge[v] for v in order[1:])
    nontree = tuple(t for t in range(base.m) if t not in tree)
    return SpanningTree(
        order=tuple(order),
        parent_edge=tuple(parent_edge),
        parent=tuple(parent),
        tree_edges=tree,
        nontree_edges=nontree,
    )


def canonical_representative(g: SignedGraph, st: SpanningTree | None = None) -> SignedGraph:
    """The unique switching-equivalent signing with all tree edges positive."""
    if st is None:
        st = spanning_tree(g.base)
    side = [0] * g.n
    for v in st.order[1:]:
        # Flip v's side iff the tree edge to its parent is currently negative.
        neg = (g.signs >> st.parent_edge[v]) & 1
        side[v] = side[st.parent[v]] ^ neg
    c = switch(g, vertex_mask((v for v in range(g.n) if side[v]), g.n))
    for t in st.tree_edges:
        assert not (c.signs >> t) & 1, "tree edge still negative after canonicalization"
    return c


def num_classes(base: SimpleGraph) -> int:
    spanning_tree(base)  # raises on disconnected input
    return 1 << (base.m - base.n + 1)


def class_signing(base: SimpleGraph, st: SpanningTree, class_mask: int) -> SignedGraph:
    """Representative whose non-tree sign bits are the bits of class_mask."""
    signs = 0
    for b, t in enumerate(st.nontree_edges):
        if (class_mask >> b) & 1:
            signs |= 1 << t
    return SignedGraph(base, signs)


def class_index(g: SignedGraph, st: SpanningTree) -> int:
    """Inverse of class_signing for a canonical (tree-positive) signing."""
    mask = 0
    for b, t in enumerate(st.nontree_edges):
        if (g.signs >> t) & 1:
            mask |= 1 << b
    return mask


def enumerate_classes(base: SimpleGraph) -> Iterator[SignedGraph]:
    """One canonical representative per switching class, ascending bitmask order."""
    st = spanning_tree(base)
    for mask in range(1 << len(st.nontree_edges)):
        yield class_signing(base, st, mask)


def spectrum_is_switching_invariant(g: SignedGraph, vmask: int, tol: float = 1e-9) -> bool:
    """Test utility: per-eigenvalue agreement between g and switch(g, vmask)."""
    a = spectrum_of(g).values
    b = spectrum_of(switch(g, vmask)).values
    return bool(np.max(np.abs(a - b)) <= tol)
