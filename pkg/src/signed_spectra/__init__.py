"""Laplacian spectra of signed graphs: bound checking and counterexample search."""

from .conjectures import (
    DEFAULT_TOL,
    BoundKind,
    ViolationRecord,
    bound,
    check_all_k,
    check_graph,
    evaluate_all_k,
    ties_all_k,
)
from .graphs import (
    GraphParseError,
    LaplacianValidationError,
    SignedGraph,
    SimpleGraph,
    all_positive,
    complete_graph,
    from_laplacian_matrix,
    parse_edge_list,
    parse_laplacian_text,
    serialize,
)
from .search import (
    CheckpointError,
    SearchAborted,
    SearchJob,
    SearchMode,
    SearchReport,
    partition,
    run,
)
from .spectra import ConvergenceError, Spectrum, eigenvalues, laplacian, spectrum_of, top_k_sum
from .switching import (
    DisconnectedGraphError,
    canonical_representative,
    enumerate_classes,
    num_classes,
    spanning_tree,
    spectrum_is_switching_invariant,
    switch,
    vertex_mask,
)

__version__ = "0.1.0"
