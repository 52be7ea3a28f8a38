"""Certificates for induced-subgraph claims and their independent checker.

:func:`verify_certificate` recomputes everything from the adjacency rows
alone; it never looks at how a certificate was found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Graph

__all__ = [
    "HoleCertificate",
    "PathCertificate",
    "InducedCertificate",
    "SplitPartition",
    "EliminationOrdering",
    "Cotree",
    "verify_certificate",
    "is_induced_cycle",
    "is_induced_path",
]


@dataclass(frozen=True)
class HoleCertificate:
    """Ordered vertices of an induced cycle (``kind="hole"``) or of an
    induced subgraph whose complement is one (``kind="antihole"``)."""

    vertices: tuple
    kind: str = "hole"

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if self.kind not in ("hole", "antihole"):
            raise ValueError(f"unknown hole kind {self.kind!r}")

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class PathCertificate:
    """Ordered vertices of an induced path."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    def __len__(self):
        return len(self.vertices)


# The fixed small patterns a certificate can name, as edge lists on the
# certificate's vertex order.
PATTERNS = {
    "P4": ((0, 1), (1, 2), (2, 3)),
    "C4": ((0, 1), (1, 2), (2, 3), (3, 0)),
    "C5": ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0)),
    "2K2": ((0, 1), (2, 3)),
    "Y": ((0, 1), (0, 2), (1, 2), (2, 3)),
    "K3": ((0, 1), (1, 2), (0, 2)),
}


@dataclass(frozen=True)
class InducedCertificate:
    """Vertices inducing exactly the pattern ``kind`` in the given order."""

    kind: str
    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if self.kind not in PATTERNS:
            raise ValueError(f"unknown pattern {self.kind!r}")


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple
    independent: tuple


@dataclass(frozen=True)
class EliminationOrdering:
    """A perfect elimination ordering: each vertex's later neighbours form a clique."""

    order: tuple


@dataclass(frozen=True)
class Cotree:
    """Cograph decomposition: ``op`` is ``"leaf"``, ``"union"`` or ``"join"``."""

    op: str
    vertex: int | None = None
    children: tuple = ()

    def leaves(self) -> list[int]:
        if self.op == "leaf":
            return [self.vertex]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def to_json(self):
        if self.op == "leaf":
            return self.vertex
        return {self.op: [c.to_json() for c in self.children]}


Certificate = Union[HoleCertificate, PathCertificate, InducedCertificate, SplitPartition,
                    EliminationOrdering, Cotree]


def is_induced_path(g: Graph, vertices) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if g.adjacent(vs[i], vs[j]) != (j == i + 1):
                return False
    return True


def is_induced_cycle(g: Graph, vertices) -> bool:
    vs = list(vertices)
    m = len(vs)
    if m < 3 or len(set(vs)) != m or any(not 0 <= v < g.n for v in vs):
        return False
    for i in range(m):
        for j in range(i + 1, m):
            consecutive = j == i + 1 or (i == 0 and j == m - 1)
            if g.adjacent(vs[i], vs[j]) != consecutive:
                return False
    return True


def _verify_pattern(g: Graph, kind: str, vertices) -> bool:
    vs = list(vertices)
    k = 1 + max(max(e) for e in PATTERNS[kind])
    if len(vs) != k or len(set(vs)) != k or any(not 0 <= v < g.n for v in vs):
        return False
    want = {frozenset(e) for e in PATTERNS[kind]}
    for i in range(k):
        for j in range(i + 1, k):
            if g.adjacent(vs[i], vs[j]) != (frozenset((i, j)) in want):
                return False
    return True


def _verify_cotree(g: Graph, tree: Cotree) -> bool:
    leaves = tree.leaves()
    if sorted(leaves) != list(range(g.n)):
        return False

    def ok(node):
        if node.op == "leaf":
            return True
        if node.op not in ("union", "join") or len(node.children) < 2:
            return False
        parts = [set(c.leaves()) for c in node.children]
        want = node.op == "join"
        for a in range(len(parts)):
            for b in range(a + 1, len(parts)):
                for u in parts[a]:
                    for v in parts[b]:
                        if g.adjacent(u, v) != want:
                            return False
        return all(ok(c) for c in node.children)

    return ok(tree)


def _verify_peo(g: Graph, order) -> bool:
    order = list(order)
    if sorted(order) != list(range(g.n)):
        return False
    later = 0
    for v in reversed(order):
        nbrs = g.rows[v] & later
        for u in _bits(nbrs):
            if (nbrs & ~(1 << u)) & ~g.rows[u]:
                return False
        later |= 1 << v
    return True


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _verify_split(g: Graph, part: SplitPartition) -> bool:
    a, b = list(part.clique), list(part.independent)
    if sorted(a + b) != list(range(g.n)):
        return False
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if not g.adjacent(a[i], a[j]):
                return False
    for i in range(len(b)):
        for j in range(i + 1, len(b)):
            if g.adjacent(b[i], b[j]):
                return False
    return True


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    """Check ``cert`` against ``g`` by direct adjacency lookups."""
    if isinstance(cert, HoleCertificate):
        target = g if cert.kind == "hole" else g.complement()
        return len(cert.vertices) >= 4 and is_induced_cycle(target, cert.vertices)
    if isinstance(cert, PathCertificate):
        return len(cert.vertices) >= 1 and is_induced_path(g, cert.vertices)
    if isinstance(cert, InducedCertificate):
        return _verify_pattern(g, cert.kind, cert.vertices)
    if isinstance(cert, SplitPartition):
        return _verify_split(g, cert)
    if isinstance(cert, EliminationOrdering):
        return _verify_peo(g, cert.order)
    if isinstance(cert, Cotree):
        return _verify_cotree(g, cert)
    raise TypeError(f"unsupported certificate type {type(cert).__name__}")
