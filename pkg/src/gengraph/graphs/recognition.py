"""Recognition of cographs, chordal, split and C4-free graphs.

Each recognizer returns a :class:`Verdict` ``(value, certificate)``.  The
certificate proves the answer either way: a cotree or an induced P4, a
perfect elimination ordering or a chordless cycle, a split partition or a
forbidden induced subgraph.
"""

from __future__ import annotations

from collections import deque
from typing import Any, NamedTuple

from ..exceptions import GenGraphError
from .certificates import (
    Cotree,
    EliminationOrdering,
    HoleCertificate,
    InducedCertificate,
    SplitPartition,
)
from .graph import Graph, iter_bits
from .search import find_hole, find_induced_path

__all__ = [
    "Verdict",
    "is_cograph",
    "lex_bfs",
    "is_chordal",
    "is_split",
    "is_c4_free",
    "find_y",
    "contains_y",
    "find_2k2",
    "is_bipartite",
]


class Verdict(NamedTuple):
    value: bool
    certificate: Any

    def __bool__(self):
        return self.value


# -- cographs ----------------------------------------------------------------------

def is_cograph(g: Graph) -> Verdict:
    """Cotree by alternating component / co-component splits, else an induced P4."""
    if g.n == 0:
        return Verdict(True, None)
    comp = g.complement()
    # explicit stack: threshold-like cotrees are as deep as the graph is large
    root_children: list = []
    stack = [(g.full_mask, root_children)]
    while stack:
        mask, out = stack.pop()
        if mask & (mask - 1) == 0:
            out.append(Cotree("leaf", mask.bit_length() - 1))
            continue
        parts = g.components(mask)
        op = "union"
        if len(parts) == 1:
            parts = comp.components(mask)
            op = "join"
            if len(parts) == 1:
                cert = find_induced_path(g, 4)
                if cert is None:
                    raise GenGraphError("prime module without an induced P4")
                return Verdict(False, cert)
        children: list = []
        out.append((op, children))
        for p in reversed(parts):
            stack.append((p, children))
    return Verdict(True, _freeze(root_children[0]))


def _freeze(node) -> Cotree:
    """Turn the nested ``(op, children)`` build lists into immutable cotree nodes.

    Children are already ordered by least vertex: components come out in
    that order and the stack pops them back in it.
    """
    if isinstance(node, Cotree):
        return node
    order, todo = [], [node]
    while todo:
        item = todo.pop()
        order.append(item)
        todo.extend(c for c in item[1] if not isinstance(c, Cotree))
    built = {}
    for op, children in reversed(order):
        kids = tuple(c if isinstance(c, Cotree) else built[id(c[1])] for c in children)
        built[id(children)] = Cotree(op, None, kids)
    return built[id(node[1])]


# -- chordal graphs ----------------------------------------------------------------

def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS order; ties go to the lowest vertex index."""
    classes = [g.full_mask] if g.n else []
    order = []
    rows = g.rows
    while classes:
        first = classes[0]
        v = (first & -first).bit_length() - 1
        order.append(v)
        classes[0] = first & ~(1 << v)
        nb = rows[v]
        refined = []
        for s in classes:
            inside, outside = s & nb, s & ~nb
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        classes = refined
    return order


def _shortest_path(g: Graph, src: int, dst: int, allowed: int) -> list[int] | None:
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = []
            while u is not None:
                path.append(u)
                u = prev[u]
            return path[::-1]
        for w in iter_bits(g.rows[u] & allowed):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    return None


def _cycle_through(g: Graph, v: int, u: int, w: int) -> list[int] | None:
    """Chordless cycle ``v, u, ..., w`` for non-adjacent neighbours u, w of v."""
    allowed = g.full_mask & ~(g.rows[v] | (1 << v)) | (1 << u) | (1 << w)
    path = _shortest_path(g, u, w, allowed)
    return None if path is None else [v] + path


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def is_chordal(g: Graph) -> Verdict:
    """Perfect elimination ordering from reversed LexBFS, or a chordless cycle."""
    order = lex_bfs(g)[::-1]
    pos = {v: i for i, v in enumerate(order)}
    rows = g.rows
    for v in order:
        later = [u for u in iter_bits(rows[v]) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        for w in later:
            if w != parent and not (rows[parent] >> w) & 1:
                cycle = _cycle_through(g, v, parent, w)
                if cycle is None:
                    cycle = _any_chordless_cycle(g)
                return Verdict(False, HoleCertificate(_canonical_cycle(cycle), "hole"))
    return Verdict(True, EliminationOrdering(tuple(order)))


def _any_chordless_cycle(g: Graph) -> list[int]:
    for v in range(g.n):
        nb = list(iter_bits(g.rows[v]))
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if not g.adjacent(u, w):
                    cycle = _cycle_through(g, v, u, w)
                    if cycle is not None:
                        return cycle
    raise GenGraphError("ordering check failed but no chordless cycle exists")


# -- split graphs ------------------------------------------------------------------

def find_2k2(g: Graph) -> InducedCertificate | None:
    """Lexicographically least pair of edges with no edge between them."""
    rows = g.rows
    full = g.full_mask
    for a, b in g.edges():
        outside = full & ~(rows[a] | rows[b] | (1 << a) | (1 << b))
        outside &= ~((2 << a) - 1)
        for c in iter_bits(outside):
            d = rows[c] & outside & ~((2 << c) - 1)
            if d:
                return InducedCertificate("2K2", (a, b, c, (d & -d).bit_length() - 1))
    return None


def is_split(g: Graph) -> Verdict:
    """Split partition via the degree-sequence test, else C4, C5 or 2K2."""
    n = g.n
    if n == 0:
        return Verdict(True, SplitPartition((), ()))
    deg = g.degrees()
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    d = [deg[v] for v in order]
    m = max(i + 1 for i in range(n) if d[i] >= i)
    if sum(d[:m]) == m * (m - 1) + sum(d[m:]):
        part = SplitPartition(tuple(sorted(order[:m])), tuple(sorted(order[m:])))
        return Verdict(True, part)
    for length, kind in ((4, "C4"), (5, "C5")):
        cert = find_hole(g, length)
        if cert is not None:
            return Verdict(False, InducedCertificate(kind, cert.vertices))
    cert = find_2k2(g)
    if cert is None:
        raise GenGraphError("degree test failed but no forbidden subgraph found")
    return Verdict(False, cert)


def is_c4_free(g: Graph) -> Verdict:
    cert = find_hole(g, 4)
    if cert is None:
        return Verdict(True, None)
    return Verdict(False, InducedCertificate("C4", cert.vertices))


# -- small patterns ----------------------------------------------------------------

def find_y(g: Graph) -> InducedCertificate | None:
    """Induced Y: triangle ``x1 x2 x3`` with a pendant ``x4`` on ``x3``."""
    rows = g.rows
    for x3 in range(g.n):
        nb = rows[x3]
        for x1 in iter_bits(nb):
            for x2 in iter_bits(rows[x1] & nb & ~((2 << x1) - 1)):
                pend = nb & ~rows[x1] & ~rows[x2] & ~(1 << x1) & ~(1 << x2)
                if pend:
                    x4 = (pend & -pend).bit_length() - 1
                    return InducedCertificate("Y", (x1, x2, x3, x4))
    return None


def contains_y(g: Graph) -> bool:
    return find_y(g) is not None


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.rows[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True
