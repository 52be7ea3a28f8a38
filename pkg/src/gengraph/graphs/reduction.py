"""Reductions that preserve the existence of holes and antiholes of length >= 5.

Three graph-level rules are applied to a fixpoint:

* an isolated vertex lies on no cycle;
* a vertex whose non-neighbourhood is an independent set lies on no hole or
  antihole of length >= 5 (in such a cycle every vertex has a non-edge
  among its non-neighbours);
* of two twins (equal open neighbourhoods, or equal closed neighbourhoods)
  at most one can lie on such a hole or antihole, and either one can
  replace the other, so the larger index is dropped.

Callers may seed the process with extra vertices known to be irrelevant
(the generating-graph code passes elements in a unique maximal subgroup).
These rules are not sound for cograph/chordal/split questions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, iter_bits

__all__ = ["ReductionTrace", "reduce_for_holes"]


@dataclass
class ReductionTrace:
    """Which vertices each rule removed, in original vertex indices."""

    removed_isolated: list = field(default_factory=list)
    removed_unique_maximal: list = field(default_factory=list)
    removed_independent_complement: list = field(default_factory=list)
    twin_classes: list = field(default_factory=list)
    representative_map: dict = field(default_factory=dict)
    kept: list = field(default_factory=list)
    lattice_used: bool = False

    @property
    def removed(self) -> list:
        return sorted(set(self.removed_isolated) | set(self.removed_unique_maximal)
                      | set(self.removed_independent_complement)
                      | set(self.representative_map))

    def to_json(self, names=None) -> dict:
        def nm(v):
            return names[v] if names is not None else v
        return {
            "removed_isolated": [nm(v) for v in self.removed_isolated],
            "removed_unique_maximal": [nm(v) for v in self.removed_unique_maximal],
            "removed_independent_complement": [nm(v) for v in self.removed_independent_complement],
            "twin_classes": [[nm(v) for v in cls] for cls in self.twin_classes],
            "kept": [nm(v) for v in self.kept],
            "lattice_used": self.lattice_used,
        }


def _independent(rows, mask):
    for u in iter_bits(mask):
        if rows[u] & mask:
            return False
    return True


def _twin_groups(rows, active):
    """Twin classes among ``active``: equal open or equal closed neighbourhoods."""
    parent = {v: v for v in iter_bits(active)}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for closed in (False, True):
        seen = {}
        for v in iter_bits(active):
            key = rows[v] & active
            if closed:
                key |= 1 << v
            if key in seen:
                a, b = find(seen[key]), find(v)
                if a != b:
                    parent[max(a, b)] = min(a, b)
            else:
                seen[key] = v
    groups = {}
    for v in iter_bits(active):
        groups.setdefault(find(v), []).append(v)
    return [g for g in groups.values() if len(g) > 1]


def reduce_for_holes(g: Graph, drop: list[int] | None = None,
                     trace: ReductionTrace | None = None) -> tuple[Graph, ReductionTrace]:
    """Reduced induced subgraph with the same odd-hole/antihole lengths (>= 5).

    ``drop`` lists vertices removed up front under a caller-supplied rule,
    recorded as ``removed_unique_maximal``.  The returned graph's vertex
    ``i`` is original vertex ``trace.kept[i]``.
    """
    if trace is None:
        trace = ReductionTrace()
    rows = list(g.rows)
    active = g.full_mask
    for v in drop or ():
        if (active >> v) & 1:
            active &= ~(1 << v)
            trace.removed_unique_maximal.append(v)
    rep_of = {}
    changed = True
    while changed:
        changed = False
        for v in iter_bits(active):
            if rows[v] & active == 0:
                active &= ~(1 << v)
                trace.removed_isolated.append(v)
                changed = True
        # twin merging is cheap and shrinks large graphs fastest, so it goes first
        for group in _twin_groups(rows, active):
            keep = group[0]
            for v in group[1:]:
                active &= ~(1 << v)
                rep_of[v] = keep
                changed = True
        if changed:
            continue
        for v in iter_bits(active):
            non = active & ~rows[v] & ~(1 << v)
            if _independent(rows, non):
                active &= ~(1 << v)
                trace.removed_independent_complement.append(v)
                changed = True
    # follow chains of merges
    def final(v):
        while v in rep_of:
            v = rep_of[v]
        return v

    classes = {}
    for v in rep_of:
        r = final(v)
        trace.representative_map[v] = r
        classes.setdefault(r, [r]).append(v)
    trace.twin_classes = sorted(sorted(c) for c in classes.values())
    trace.kept = list(iter_bits(active))
    return g.induced(trace.kept), trace
