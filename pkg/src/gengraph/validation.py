"""Input coercion shared by the scikit-learn adapters.

Samples are groups or graphs: a group spec string (``"dihedral:5"``), a
:class:`GroupSpec`, a :class:`Graph`, or a square 0/1 adjacency matrix.
"""

from __future__ import annotations

import numpy as np

from .families.spec import GroupSpec
from .graphs.graph import Graph

__all__ = ["as_sample_list", "check_adjacency", "check_spec", "sample_to_graph"]


def check_spec(value) -> GroupSpec:
    if isinstance(value, GroupSpec):
        return value
    if isinstance(value, str):
        return GroupSpec.parse(value)
    raise TypeError(f"expected a group spec string, got {type(value).__name__}")


def check_adjacency(a) -> Graph:
    """A :class:`Graph` from a symmetric 0/1 matrix with zero diagonal."""
    arr = np.asarray(a)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {arr.shape}")
    if arr.dtype.kind not in "biuf":
        raise ValueError("adjacency matrix must be numeric or boolean")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("adjacency entries must be 0 or 1")
    arr = arr.astype(bool)
    if (arr != arr.T).any():
        raise ValueError("adjacency matrix must be symmetric")
    if arr.diagonal().any():
        raise ValueError("adjacency matrix must have a zero diagonal")
    n = arr.shape[0]
    edges = [(int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(arr, 1)))]
    return Graph.from_edges(n, edges)


def as_sample_list(X) -> list:
    """Split ``X`` into samples.

    A 2-D string array with one column is flattened, so that both
    ``["cyclic:6", ...]`` and ``[["cyclic:6"], ...]`` work; a 3-D numeric
    array is a stack of adjacency matrices.
    """
    if isinstance(X, (str, GroupSpec, Graph)):
        raise ValueError("X must be a sequence of samples, not a single sample")
    if isinstance(X, np.ndarray):
        if X.dtype.kind in "UO" and X.ndim == 2:
            if X.shape[1] != 1:
                raise ValueError(f"expected one column of group specs, got {X.shape[1]}")
            return list(X[:, 0])
        if X.ndim == 3 or X.dtype.kind in "UO":
            return list(X)
        raise ValueError(f"cannot interpret array of shape {X.shape} as samples")
    samples = list(X)
    out = []
    for s in samples:
        if isinstance(s, (list, tuple)) and len(s) == 1 and isinstance(s[0], (str, GroupSpec)):
            out.append(s[0])
        else:
            out.append(s)
    if not out:
        raise ValueError("X has no samples")
    return out


def sample_to_graph(sample) -> tuple[Graph, GroupSpec | None]:
    """The graph a sample stands for (a group sample gives its generating
    graph); second item is the parsed spec, or ``None`` for raw graphs."""
    from .gamma import build_gamma

    if isinstance(sample, Graph):
        return sample, None
    if isinstance(sample, (str, GroupSpec)):
        spec = check_spec(sample)
        if spec.is_graph:
            return spec.build_graph(), spec
        G = spec.build_group()
        return build_gamma(G, source=str(spec)), spec
    return check_adjacency(sample), None
