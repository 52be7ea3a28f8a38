"""The generating graph of a finite group and the reductions used on it.

``Γ(G)`` has the elements of ``G`` as vertices, with ``a ~ b`` (``a != b``)
whenever ``<a, b> = G``.  Whether ``<a, b> = G`` depends only on the cyclic
subgroups ``<a>`` and ``<b>``, so one closure per unordered pair of cyclic
subgroups decides a whole block of the adjacency matrix.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .exceptions import CapExceededError, GenGraphError, LatticeTooLargeError, NotNormalError
from .graphs.certificates import HoleCertificate, is_induced_path
from .graphs.graph import Graph, iter_bits
from .graphs.perfect import PerfectVerdict, perfect_verdict
from .graphs.reduction import ReductionTrace, reduce_for_holes
from .groups.finite import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    QuotientGroup,
    Subgroup,
    generates,
    is_2_generated,
    is_normal,
    quotient,
)
from .groups.lattice import DEFAULT_LATTICE_CAP, SubgroupLattice, all_subgroups, frattini

__all__ = [
    "GeneratingGraph",
    "build_gamma",
    "delta_subgraph",
    "prune_for_holes",
    "unique_maximal_elements",
    "gamma_perfect_verdict",
    "frattini_quotient",
    "lift_path",
    "ReductionTrace",
]


class GeneratingGraph(Graph):
    """A graph whose vertex ``i`` is the group element ``vertex_elements[i]``.

    Labels are the element names; ``source`` records where the group came
    from (a group spec string or a label).
    """

    def __init__(self, rows, group: FiniteGroup, vertex_elements: Sequence[int],
                 source: str | None = None, check: bool = False):
        self.group = group
        self.vertex_elements = tuple(int(x) for x in vertex_elements)
        self.source = source if source is not None else group.label
        labels = [group.names[x] for x in self.vertex_elements]
        super().__init__(rows, labels, check=check)

    def restrict(self, vertices: Sequence[int]) -> GeneratingGraph:
        """Induced subgraph on ``vertices`` (indices into this graph)."""
        sub = self.induced(vertices)
        elements = [self.vertex_elements[v] for v in vertices]
        return GeneratingGraph(sub.rows, self.group, elements, self.source)

    def vertex_of(self, element: int) -> int:
        return self.vertex_elements.index(int(element))

    def to_json(self) -> dict:
        data = super().to_json()
        data["group"] = self.source
        data["order"] = self.group.n
        return data


def _pair_table(G: FiniteGroup) -> tuple[np.ndarray, np.ndarray]:
    """``gen[i, j]``: whether the i-th and j-th cyclic subgroups generate ``G``."""
    class_of, members = G.cyclic_classes
    reps = [int(m[1]) if len(m) > 1 else int(m[0]) for m in members]
    k = len(reps)
    gen = np.zeros((k, k), dtype=bool)
    for i in range(k):
        inside_i = np.zeros(G.n, dtype=bool)
        inside_i[members[i]] = True
        for j in range(i, k):
            if inside_i[reps[j]]:
                # <b> inside <a>: the pair generates only if <a> already does
                gen[i, j] = gen[j, i] = len(members[i]) == G.n
                continue
            gen[i, j] = gen[j, i] = generates(G, [reps[i], reps[j]])
    return class_of, gen


def build_gamma(G: FiniteGroup, cap: int | None = DEFAULT_ORDER_CAP,
                source: str | None = None) -> GeneratingGraph:
    """The generating graph of ``G`` on all ``|G|`` elements."""
    if cap is not None and G.n > cap:
        raise CapExceededError("group", G.n, cap)
    class_of, gen = _pair_table(G)
    k = gen.shape[0]
    class_mask = [0] * k
    for g in range(G.n):
        class_mask[int(class_of[g])] |= 1 << g
    neighbourhood = []
    for i in range(k):
        m = 0
        for j in np.flatnonzero(gen[i]):
            m |= class_mask[j]
        neighbourhood.append(m)
    rows = [neighbourhood[int(class_of[g])] & ~(1 << g) for g in range(G.n)]
    return GeneratingGraph(rows, G, range(G.n), source)


def delta_subgraph(gamma: GeneratingGraph) -> tuple[GeneratingGraph, ReductionTrace]:
    """Drop isolated vertices."""
    iso = set(gamma.isolated())
    keep = [v for v in range(gamma.n) if v not in iso]
    trace = ReductionTrace(removed_isolated=sorted(iso), kept=keep)
    return gamma.restrict(keep), trace


def unique_maximal_elements(G: FiniteGroup, lattice: SubgroupLattice) -> list[int]:
    """Elements lying in exactly one maximal subgroup."""
    masks = [s.mask for s in lattice.maximal]
    out = []
    for g in range(G.n):
        if sum((m >> g) & 1 for m in masks) == 1:
            out.append(g)
    return out


def _lattice_or_none(G, lattice, lattice_cap):
    if lattice is not None:
        return lattice
    try:
        return all_subgroups(G, cap=lattice_cap)
    except LatticeTooLargeError:
        return None


def prune_for_holes(G: FiniteGroup, gamma: GeneratingGraph,
                    lattice: SubgroupLattice | None = None,
                    lattice_cap: int | None = DEFAULT_LATTICE_CAP,
                    use_lattice: bool = True) -> tuple[GeneratingGraph, ReductionTrace]:
    """Reduced graph with exactly the same odd holes/antiholes lengths (>= 5).

    Removes isolated vertices and elements in a unique maximal subgroup
    (when the lattice fits under ``lattice_cap``), vertices with an
    independent non-neighbourhood, and all but one vertex of each twin
    class.  Trace indices refer to ``gamma``'s vertices.
    """
    drop = []
    lat = _lattice_or_none(G, lattice, lattice_cap) if use_lattice else None
    if lat is not None:
        where = {e: v for v, e in enumerate(gamma.vertex_elements)}
        drop = [where[g] for g in unique_maximal_elements(G, lat) if g in where]
    reduced, trace = reduce_for_holes(gamma, drop=drop)
    trace.lattice_used = lat is not None
    return gamma.restrict(trace.kept), trace


def gamma_perfect_verdict(G: FiniteGroup, gamma: GeneratingGraph | None = None,
                          hole_limit: int | None = None, lattice=None,
                          lattice_cap: int | None = DEFAULT_LATTICE_CAP,
                          use_lattice: bool = True,
                          ) -> tuple[PerfectVerdict, ReductionTrace]:
    """Perfectness of ``Γ(G)`` searched on the pruned graph.

    The witness is given in vertex indices of ``gamma`` (element indices when
    ``gamma`` is the full graph).
    """
    if gamma is None:
        gamma = build_gamma(G)
    reduced, trace = prune_for_holes(G, gamma, lattice, lattice_cap, use_lattice)
    verdict, _ = perfect_verdict(reduced, hole_limit, prune=False)
    if verdict.witness is not None:
        w = verdict.witness
        mapped = HoleCertificate(tuple(trace.kept[v] for v in w.vertices), w.kind)
        verdict = PerfectVerdict(verdict.status, verdict.search_limit, verdict.searched_vertices,
                                 mapped, verdict.full)
    return verdict, trace


def frattini_quotient(G: FiniteGroup, lattice_cap: int | None = DEFAULT_LATTICE_CAP) -> QuotientGroup:
    """``G / Frat(G)``; for 2-generated ``G`` its generating graph is perfect
    exactly when that of ``G`` is."""
    return quotient(G, frattini(G, cap=lattice_cap))


# -- lifting paths from a quotient --------------------------------------------------------

def _coset(Q: QuotientGroup, c: int) -> list[int]:
    return [int(x) for x in Q.cosets[c]]


def lift_path(G: FiniteGroup, N: Subgroup, path: Sequence[int],
              Q: QuotientGroup | None = None) -> list[int]:
    """Lift an induced path of ``Γ(G/N)`` to one of ``Γ(G)``.

    ``path`` lists quotient elements (coset indices of ``quotient(G, N)``).
    The lift picks ``x_1 in a_1 N, x_2 in a_2 N, ...`` left to right so that
    consecutive picks generate ``G``; non-consecutive picks cannot, because
    their images already fail to generate ``G/N``.  A single vertex lifts to
    the first element of its coset that is not isolated in ``Γ(G)``.
    """
    if not is_normal(G, N):
        raise NotNormalError("N is not normal in G")
    if Q is None:
        Q = quotient(G, N)
    path = [int(c) for c in path]
    if not path or any(not 0 <= c < Q.n for c in path):
        raise ValueError("path must be a non-empty list of quotient elements")
    if len(set(path)) != len(path):
        raise ValueError("path vertices must be distinct")
    if not is_2_generated(G):
        raise ValueError("lifting needs a 2-generated group")
    for i in range(len(path)):
        for j in range(i + 1, len(path)):
            adjacent = generates(Q, [path[i], path[j]])
            if adjacent != (j == i + 1):
                raise ValueError(f"input is not an induced path of the quotient graph "
                                 f"(vertices {Q.names[path[i]]}, {Q.names[path[j]]})")
    if len(path) == 1:
        for x in _coset(Q, path[0]):
            if any(generates(G, [x, y]) for y in range(G.n)):
                return [x]
        raise GenGraphError("internal error: no non-isolated element in the coset")

    lifted: list[int] = []

    def extend(i: int) -> bool:
        if i == len(path):
            return True
        for x in _coset(Q, path[i]):
            if i == 0 or generates(G, [lifted[-1], x]):
                lifted.append(x)
                if extend(i + 1):
                    return True
                lifted.pop()
        return False

    if not extend(0):
        raise GenGraphError("internal error: path lifting exhausted every coset choice")
    return lifted


def verify_lift(G: FiniteGroup, lifted: Sequence[int]) -> bool:
    """The lifted elements form an induced path of ``Γ(G)``."""
    rows = []
    k = len(lifted)
    for i in range(k):
        r = 0
        for j in range(k):
            if i != j and generates(G, [lifted[i], lifted[j]]):
                r |= 1 << j
        rows.append(r)
    return is_induced_path(Graph(rows, check=False), range(k))
