"""Simple undirected graphs with Python-int bitset adjacency rows.

Bit ``v`` of ``rows[u]`` is set iff ``u`` and ``v`` are adjacent.  Python
integers make set algebra on neighbourhoods (``&``, ``|``, ``~``) a single
C-level operation, which is what the induced-subgraph searches lean on.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence

from ..exceptions import ParseError

__all__ = ["Graph", "iter_bits", "bits_of", "mask_of", "complement", "tensor",
           "read_edgelist", "parse_edgelist"]


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Parameters
    ----------
    rows : sequence of int
        Adjacency bitsets.  Must be symmetric with no self-loops; checked
        unless ``check=False``.
    labels : sequence of str, optional
        Display name per vertex.
    """

    def __init__(self, rows: Sequence[int], labels: Sequence[str] | None = None,
                 check: bool = True):
        self.rows = tuple(int(r) for r in rows)
        self.n = len(self.rows)
        self.labels = tuple(str(s) for s in labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"{len(self.labels)} labels for {self.n} vertices")
        if check:
            self._check()

    def _check(self):
        full = (1 << self.n) - 1
        for u, r in enumerate(self.rows):
            if r & ~full:
                raise ValueError(f"row {u} refers to vertices outside 0..{self.n - 1}")
            if (r >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in iter_bits(r):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows, labels, check=False)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls([0] * n, check=False)

    # -- queries -----------------------------------------------------------

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"<{type(self).__name__} n={self.n} m={self.number_of_edges()}>"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def neighbors(self, u: int) -> list[int]:
        return bits_of(self.rows[u])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, r in enumerate(self.rows):
            for v in iter_bits(r >> (u + 1)):
                yield u, u + 1 + v

    def number_of_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def isolated(self) -> list[int]:
        return [u for u, r in enumerate(self.rows) if r == 0]

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; new vertex ``i`` is old vertex ``vertices[i]``."""
        vertices = list(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        sel = mask_of(vertices)
        rows = []
        for v in vertices:
            r = 0
            for w in iter_bits(self.rows[v] & sel):
                r |= 1 << pos[w]
            rows.append(r)
        labels = [self.label(v) for v in vertices] if self.labels is not None else None
        return Graph(rows, labels, check=False)

    def complement(self) -> Graph:
        full = self.full_mask
        rows = [~r & full & ~(1 << u) for u, r in enumerate(self.rows)]
        return Graph(rows, self.labels, check=False)

    def components(self, within: int | None = None) -> list[int]:
        """Connected components (as bitmasks) of the subgraph induced on ``within``."""
        remaining = self.full_mask if within is None else within
        comps = []
        while remaining:
            start = remaining & -remaining
            comp = start
            frontier = start
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.rows[v]
                nxt &= remaining & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- export ------------------------------------------------------------

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {json.dumps(name)} {{"]
        for v in range(self.n):
            lines.append(f"  {v} [label={json.dumps(self.label(v), ensure_ascii=False)}];")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "vertices": [self.label(v) for v in range(self.n)],
            "edges": [[u, v] for u, v in self.edges()],
        }

    def to_edgelist(self) -> str:
        edges = list(self.edges())
        out = [f"{self.n} {len(edges)}"]
        out.extend(f"{u} {v}" for u, v in edges)
        return "\n".join(out) + "\n"


def complement(g: Graph) -> Graph:
    return g.complement()


def tensor(g1: Graph, g2: Graph) -> Graph:
    """Tensor (categorical) product; vertex ``(u, v)`` has index ``u + g1.n * v``."""
    n1, n2 = g1.n, g2.n
    rows = []
    for v in range(n2):
        for u in range(n1):
            r = 0
            for y in iter_bits(g2.rows[v]):
                r |= g1.rows[u] << (n1 * y)
            rows.append(r)
    labels = [f"({g1.label(u)},{g2.label(v)})" for v in range(n2) for u in range(n1)]
    return Graph(rows, labels, check=False)


def parse_edgelist(text: str, source: str | None = None) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, toks) for i, toks in lines if toks and not toks[0].startswith("#")]
    if not lines:
        raise ParseError("empty graph file", source=source)
    lineno, head = lines[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise ParseError("header must be 'n m'", lineno, source) from None
    if n < 0 or m < 0:
        raise ParseError("negative size in header", lineno, source)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}", lineno, source)
    rows = [0] * n
    for lineno, toks in body:
        try:
            u, v = (int(t) for t in toks)
        except ValueError:
            raise ParseError("edge line must be 'u v'", lineno, source) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno, source)
        if u == v:
            raise ParseError("self-loop", lineno, source)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(rows, check=False)


def read_edgelist(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh.read(), source=str(path))
