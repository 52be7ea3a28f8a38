"""Depth-first searches for induced paths and chordless cycles.

All searches are canonical: vertices are tried in increasing index order,
so the first certificate found is the lexicographically least one (for
cycles: least among rotations/reflections normalized to start at their
minimum vertex with the second vertex smaller than the last).  Results are
therefore independent of scheduling and reproducible across runs.
"""

from __future__ import annotations

from .certificates import HoleCertificate, PathCertificate
from .graph import Graph, iter_bits

__all__ = ["find_induced_path", "find_hole", "find_odd_hole", "find_odd_antihole",
           "iter_induced_paths"]


def find_induced_path(g: Graph, t: int) -> PathCertificate | None:
    """Lexicographically least induced path on ``t`` vertices, or ``None``."""
    if t < 1:
        raise ValueError("t must be at least 1")
    for path in iter_induced_paths(g, t):
        return PathCertificate(path)
    return None


def iter_induced_paths(g: Graph, t: int):
    """Every induced ``P_t`` as a vertex sequence, in lexicographic order.

    Each undirected path appears twice (once per direction) when ``t >= 2``.
    """
    rows = g.rows
    n = g.n
    if t == 1:
        for v in range(n):
            yield (v,)
        return
    path = []

    def extend(last, forbidden):
        # forbidden: closed neighbourhoods of every path vertex except ``last``
        if len(path) == t:
            yield tuple(path)
            return
        # whether w's subtree is empty depends only on rows[w] (a false twin of
        # w is already forbidden once w is on the path), so dead ends are
        # remembered by neighbourhood
        dead = set()
        nxt = forbidden | rows[last] | (1 << last)
        for w in iter_bits(rows[last] & ~forbidden):
            if rows[w] in dead:
                continue
            path.append(w)
            found = False
            for p in extend(w, nxt):
                found = True
                yield p
            path.pop()
            if not found:
                dead.add(rows[w])

    for v0 in range(n):
        path.append(v0)
        yield from extend(v0, 1 << v0)
        path.pop()


def find_hole(g: Graph, length: int, candidates: int | None = None) -> HoleCertificate | None:
    """Canonical chordless cycle on exactly ``length >= 4`` vertices.

    ``candidates`` optionally restricts the search to a vertex bitmask.
    """
    if length < 4:
        raise ValueError("holes have at least 4 vertices")
    rows = g.rows
    allowed_all = g.full_mask if candidates is None else candidates
    m = length
    path = [0] * m

    def dfs(k, last, inner, v0_closed, above):
        # path[0..k-1] fixed; choose path[k]
        if k == m - 1:
            # closing vertex: adjacent to last and v0, above path[1], no chord
            cand = rows[last] & rows[path[0]] & ~inner & above
            cand &= ~((2 << path[1]) - 1)
            for w in iter_bits(cand):
                path[k] = w
                return True
            return False
        new_inner = inner | rows[last] | (1 << last) if k >= 2 else inner
        cand = rows[last] & ~v0_closed & ~inner & above
        dead = set()  # false twins of a failed w fail too, see iter_induced_paths
        for w in iter_bits(cand):
            if rows[w] in dead:
                continue
            path[k] = w
            if dfs(k + 1, w, new_inner, v0_closed, above):
                return True
            dead.add(rows[w])
        return False

    for v0 in iter_bits(allowed_all):
        above = allowed_all & ~((2 << v0) - 1)
        v0_closed = rows[v0] | (1 << v0)
        path[0] = v0
        for v1 in iter_bits(rows[v0] & above):
            path[1] = v1
            if dfs(2, v1, 0, v0_closed, above):
                return HoleCertificate(tuple(path), "hole")
    return None


def find_odd_hole(g: Graph, max_length: int, min_length: int = 5) -> HoleCertificate | None:
    """Shortest, then lexicographically least, odd hole of length in
    ``[min_length, max_length]``."""
    start = max(min_length, 5)
    if start % 2 == 0:
        start += 1
    for m in range(start, min(max_length, g.n) + 1, 2):
        cert = find_hole(g, m)
        if cert is not None:
            return cert
    return None


def find_odd_antihole(g: Graph, max_length: int, min_length: int = 5) -> HoleCertificate | None:
    """Odd hole of the complement, reported with ``kind="antihole"``."""
    cert = find_odd_hole(g.complement(), max_length, min_length)
    if cert is None:
        return None
    return HoleCertificate(cert.vertices, "antihole")
