"""List unique-maximum and conflict-free coloring of (geometric) hypergraphs."""

from .errors import (
    AlgorithmInfeasible,
    ColorerViolation,
    DegenerateInput,
    GreedyStuck,
    GuardExceeded,
    ImprobableFailure,
    InputError,
    InvariantBreach,
    ListExhausted,
    ListTooSmall,
)
from .hypergraph import (
    ColorListFamily,
    DelaunayGraph,
    Hypergraph,
    Induced,
    IntervalHypergraph,
    Verdict,
    degree,
    delaunay_graph,
    induce,
    s_of,
    verify_cf,
    verify_from_lists,
    verify_proper,
    verify_um,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "AlgorithmInfeasible",
    "ColorerViolation",
    "DegenerateInput",
    "GreedyStuck",
    "GuardExceeded",
    "ImprobableFailure",
    "InputError",
    "InvariantBreach",
    "ListExhausted",
    "ListTooSmall",
    "ColorListFamily",
    "DelaunayGraph",
    "Hypergraph",
    "Induced",
    "IntervalHypergraph",
    "Verdict",
    "degree",
    "delaunay_graph",
    "induce",
    "s_of",
    "verify_cf",
    "verify_from_lists",
    "verify_proper",
    "verify_um",
    "BACKEND",
]
