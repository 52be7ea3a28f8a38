"""Brute-force reference implementations.

Nothing here reuses the package's algorithms: groups are handled as plain
nested lists and graphs as sets of frozenset edges, and every question is
answered by exhaustive enumeration.
"""

from __future__ import annotations

import itertools
import math


# -- groups -------------------------------------------------------------------------------

def table(G):
    return [[int(x) for x in row] for row in G.mul]


def brute_closure(mul, seed, identity=0):
    """Smallest subset containing ``seed`` and the identity closed under products."""
    s = {identity, *seed}
    while True:
        new = {mul[a][b] for a in s for b in s} | s
        if new == s:
            return frozenset(s)
        s = new


def brute_order(mul, g, identity=0):
    k, x = 1, g
    while x != identity:
        x = mul[x][g]
        k += 1
    return k


def brute_subgroups(mul, identity=0):
    """All subgroups, assuming each is generated by at most two elements
    (true for every group whose subgroups are all 2-generated, such as S_4)."""
    n = len(mul)
    found = set()
    for a in range(n):
        for b in range(a, n):
            found.add(brute_closure(mul, {a, b}, identity))
    return found


def pair_non_generators(mul, identity=0):
    """Elements g such that <a, b, g> = G implies <a, b> = G for all a, b.

    Every element of the Frattini subgroup has this property."""
    n = len(mul)
    whole = frozenset(range(n))
    seeds = [frozenset(c) for k in range(3) for c in itertools.combinations(range(n), k)]
    out = []
    for g in range(n):
        ok = True
        for s in seeds:
            if brute_closure(mul, s | {g}, identity) == whole and brute_closure(mul, s, identity) != whole:
                ok = False
                break
        if ok:
            out.append(g)
    return frozenset(out)


def brute_generating_edges(mul, identity=0):
    n = len(mul)
    whole = frozenset(range(n))
    return {frozenset((a, b)) for a in range(n) for b in range(a + 1, n)
            if brute_closure(mul, {a, b}, identity) == whole}


# -- graphs -------------------------------------------------------------------------------

def edge_set(g):
    return {frozenset((u, v)) for u in range(g.n) for v in range(u + 1, g.n) if (g.rows[u] >> v) & 1}


def _adj(edges, u, v):
    return frozenset((u, v)) in edges


def _induced_edges(edges, S):
    return [(u, v) for u, v in itertools.combinations(S, 2) if _adj(edges, u, v)]


def _is_cycle_subset(edges, S):
    """``S`` induces a single cycle: 2-regular and connected."""
    es = _induced_edges(edges, S)
    if len(es) != len(S):
        return False
    deg = {v: 0 for v in S}
    for u, v in es:
        deg[u] += 1
        deg[v] += 1
    if any(d != 2 for d in deg.values()):
        return False
    seen, todo = {S[0]}, [S[0]]
    while todo:
        u = todo.pop()
        for v in S:
            if v not in seen and _adj(edges, u, v):
                seen.add(v)
                todo.append(v)
    return len(seen) == len(S)


def complement_edges(n, edges):
    return {frozenset((u, v)) for u in range(n) for v in range(u + 1, n)} - edges


def hole_lengths(n, edges, lengths):
    """Lengths in ``lengths`` for which some vertex subset induces a cycle."""
    return {k for k in lengths if k <= n and
            any(_is_cycle_subset(edges, S) for S in itertools.combinations(range(n), k))}


def has_odd_hole(n, edges, max_len):
    return bool(hole_lengths(n, edges, range(5, max_len + 1, 2)))


def has_odd_antihole(n, edges, max_len):
    return has_odd_hole(n, complement_edges(n, edges), max_len)


def is_perfect(n, edges):
    return not has_odd_hole(n, edges, n) and not has_odd_antihole(n, edges, n)


def is_chordal(n, edges):
    return not hole_lengths(n, edges, range(4, n + 1))


def has_p4(n, edges):
    for S in itertools.combinations(range(n), 4):
        es = _induced_edges(edges, S)
        if len(es) != 3:
            continue
        deg = sorted(sum(v in e for e in es) for v in S)
        if deg == [1, 1, 2, 2]:
            return True
    return False


def is_split(n, edges):
    for k in range(n + 1):
        for K in itertools.combinations(range(n), k):
            rest = [v for v in range(n) if v not in K]
            if all(_adj(edges, u, v) for u, v in itertools.combinations(K, 2)) and \
                    not any(_adj(edges, u, v) for u, v in itertools.combinations(rest, 2)):
                return True
    return False


def has_c4(n, edges):
    return bool(hole_lengths(n, edges, [4]))


def is_dihedral_reflection_pair_generating(a, b, n):
    return math.gcd(a - b, n) == 1
