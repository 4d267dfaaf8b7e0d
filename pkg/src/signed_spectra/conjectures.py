"""Eigenvalue-sum upper bounds and violation evidence.

Two bound kinds over the sum of the k largest Laplacian eigenvalues:
Brouwer's bound m + C(k+1, 2) for unsigned graphs, and the signed-graph
variant m + C(k+1, 2) + 1. Bounds are exact integers; only the
eigenvalue sum is floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graphs import SignedGraph, SimpleGraph
from .spectra import Spectrum, spectrum_of

DEFAULT_TOL = 1e-9


class BoundKind(Enum):
    BROUWER = "brouwer"
    WANG_HOU = "wang-hou"


def bound(kind: BoundKind, m: int, k: int) -> int:
    """Exact integer bound on the sum of the k largest Laplacian eigenvalues."""
    if m < 0:
        raise ValueError(f"edge count must be non-negative, got {m}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    b = m + k * (k + 1) // 2
    return b + 1 if kind is BoundKind.WANG_HOU else b


@dataclass(frozen=True)
class BoundRow:
    """Evaluation of one k: partial eigenvalue sum against the integer bound."""

    k: int
    sum: float
    bound: int
    margin: float


@dataclass(frozen=True)
class ViolationRecord:
    """Evidence that a signing exceeds the bound at one k (margin > tol)."""

    signing: SignedGraph | None
    kind: BoundKind
    k: int
    sum: float
    bound: int
    margin: float

    def to_json_dict(self) -> dict:
        if self.signing is None:
            raise ValueError("record has no signing attached")
        return {
            "base": self.signing.base.label,
            "signs_hex": self.signing.signs_hex(),
            "kind": self.kind.value,
            "k": self.k,
            "sum": self.sum,
            "bound": self.bound,
            "margin": self.margin,
        }

    @staticmethod
    def from_json_dict(d: dict, base: SimpleGraph) -> "ViolationRecord":
        return ViolationRecord(
            signing=SignedGraph(base, int(d["signs_hex"], 16)),
            kind=BoundKind(d["kind"]),
            k=int(d["k"]),
            sum=float(d["sum"]),
            bound=int(d["bound"]),
            margin=float(d["margin"]),
        )


def evaluate_all_k(s: Spectrum, m: int, kind: BoundKind) -> list[BoundRow]:
    """One row per k in [1, n], in ascending k order."""
    rows = []
    for k in range(1, s.n + 1):
        b = bound(kind, m, k)
        sk = s.top_k_sum(k)
        rows.append(BoundRow(k=k, sum=sk, bound=b, margin=sk - b))
    return rows


def check_all_k(
    s: Spectrum,
    m: int,
    kind: BoundKind,
    tol: float = DEFAULT_TOL,
    signing: SignedGraph | None = None,
) -> list[ViolationRecord]:
    """Violation records for every k whose partial sum exceeds the bound by
    more than tol; empty list means the bound holds everywhere."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    rows = evaluate_all_k(s, m, kind)
    # k = n cannot violate: the full sum is the trace 2m and the bound at
    # k = n exceeds 2m by at least n for any simple graph.
    assert rows[-1].margin <= tol, f"k=n margin {rows[-1].margin} should be <= {tol}"
    return [
        ViolationRecord(signing=signing, kind=kind, k=r.k, sum=r.sum,
                        bound=r.bound, margin=r.margin)
        for r in rows
        if r.margin > tol
    ]


def ties_all_k(s: Spectrum, m: int, kind: BoundKind, tol: float = DEFAULT_TOL) -> list[BoundRow]:
    """Rows within +-tol of the bound: near-equalities worth exact follow-up,
    reported in diagnostics and never counted as violations."""
    return [r for r in evaluate_all_k(s, m, kind) if abs(r.margin) <= tol]


def check_graph(g: SignedGraph, kind: BoundKind, tol: float = DEFAULT_TOL) -> list[ViolationRecord]:
    """Laplacian -> spectrum -> per-k bound check, records carrying the signing."""
    return check_all_k(spectrum_of(g), g.m, kind, tol=tol, signing=g)
