"""Perfectness by bounded odd-hole and odd-antihole search.

A graph is perfect iff it has no odd hole and no odd antihole.  The search
here is exhaustive up to a cycle length bound ``L``; a verdict only claims
perfection outright when ``L`` covers every vertex of the searched graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificates import HoleCertificate
from .graph import Graph
from .reduction import ReductionTrace, reduce_for_holes
from .search import find_hole

__all__ = ["PerfectVerdict", "perfect_verdict", "search_odd_holes",
           "PERFECT_VERIFIED", "PERFECT_UP_TO", "NOT_PERFECT"]

PERFECT_VERIFIED = "PerfectVerified"
PERFECT_UP_TO = "PerfectUpTo"
NOT_PERFECT = "NotPerfect"


@dataclass(frozen=True)
class PerfectVerdict:
    """Outcome of a bounded search.

    ``search_limit`` is the longest cycle length examined and
    ``searched_vertices`` the size of the graph actually searched (after
    any reduction).  ``witness`` uses the caller's original vertex indices.
    """

    status: str
    search_limit: int
    searched_vertices: int
    witness: HoleCertificate | None = None
    full: bool = False

    @property
    def is_perfect(self) -> bool | None:
        if self.status == NOT_PERFECT:
            return False
        if self.status == PERFECT_VERIFIED:
            return True
        return None

    def __str__(self):
        if self.status == PERFECT_UP_TO:
            return f"{PERFECT_UP_TO}({self.search_limit})"
        return self.status


def _odd_lengths(limit):
    return range(5, limit + 1, 2)


def search_odd_holes(g: Graph, limit: int) -> HoleCertificate | None:
    """Shortest odd hole or antihole of length ``5..limit``.

    Holes are tried before antiholes of the same length, and antiholes start
    at 7 since a 5-antihole is itself a 5-hole.
    """
    comp = None
    for m in _odd_lengths(min(limit, g.n)):
        cert = find_hole(g, m)
        if cert is not None:
            return cert
        if m >= 7:
            if comp is None:
                comp = g.complement()
            cert = find_hole(comp, m)
            if cert is not None:
                return HoleCertificate(cert.vertices, "antihole")
    return None


def _check_limit(hole_limit):
    if hole_limit is None:
        return
    if isinstance(hole_limit, bool) or not isinstance(hole_limit, int):
        raise TypeError("hole_limit must be an odd integer or None")
    if hole_limit < 5 or hole_limit % 2 == 0:
        raise ValueError(f"hole_limit must be odd and at least 5, got {hole_limit}")


def perfect_verdict(g: Graph, hole_limit: int | None = None, prune: bool = True,
                    drop: list[int] | None = None) -> tuple[PerfectVerdict, ReductionTrace | None]:
    """Search ``g`` (reduced unless ``prune=False``) for odd holes/antiholes.

    ``hole_limit=None`` means a full search.  ``drop`` forwards extra
    removable vertices to the reduction.
    """
    _check_limit(hole_limit)
    trace = None
    target = g
    if prune:
        target, trace = reduce_for_holes(g, drop=drop)
    size = target.n
    if hole_limit is None:
        limit = max(5, size if size % 2 else size - 1)
    else:
        limit = hole_limit
    cert = search_odd_holes(target, limit)
    full = hole_limit is None or hole_limit >= size
    if cert is not None:
        if trace is not None:
            cert = HoleCertificate(tuple(trace.kept[v] for v in cert.vertices), cert.kind)
        status = NOT_PERFECT
    else:
        status = PERFECT_VERIFIED if full else PERFECT_UP_TO
    return PerfectVerdict(status, limit, size, cert, full), trace
