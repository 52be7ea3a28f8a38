"""Simple graphs and forbidden-induced-subgraph recognition."""

from .certificates import (
    Cotree,
    EliminationOrdering,
    HoleCertificate,
    InducedCertificate,
    PathCertificate,
    SplitPartition,
    verify_certificate,
)
from .graph import Graph, complement, parse_edgelist, read_edgelist, tensor
from .perfect import PerfectVerdict, perfect_verdict, search_odd_holes
from .recognition import (
    Verdict,
    contains_y,
    find_2k2,
    find_y,
    is_bipartite,
    is_c4_free,
    is_chordal,
    is_cograph,
    is_split,
    lex_bfs,
)
from .reduction import ReductionTrace, reduce_for_holes
from .search import find_hole, find_induced_path, find_odd_antihole, find_odd_hole, iter_induced_paths

__all__ = [
    "Cotree", "EliminationOrdering", "Graph", "HoleCertificate", "InducedCertificate",
    "PathCertificate", "PerfectVerdict", "ReductionTrace", "SplitPartition", "Verdict",
    "complement", "contains_y", "find_2k2", "find_hole", "find_induced_path",
    "find_odd_antihole", "find_odd_hole", "find_y", "iter_induced_paths", "is_bipartite", "is_c4_free",
    "is_chordal", "is_cograph", "is_split", "lex_bfs", "parse_edgelist", "perfect_verdict",
    "read_edgelist", "reduce_for_holes", "search_odd_holes", "tensor", "verify_certificate",
]
