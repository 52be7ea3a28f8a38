"""Subgroup lattice and Frattini subgroup.

The lattice is built by joining subgroups with cyclic subgroups until no
new subgroup appears.  Every subgroup is the join of the cyclic subgroups
it contains, so starting from the cyclic ones and repeatedly joining with
a cyclic subgroup reaches all of them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import LatticeTooLargeError
from .finite import FiniteGroup, Subgroup, _closure_array, is_abelian, prime_signature

__all__ = ["SubgroupLattice", "all_subgroups", "frattini", "DEFAULT_LATTICE_CAP",
           "maximal_subgroup_masks"]

DEFAULT_LATTICE_CAP = 512
MAX_SUBGROUPS = 5000


def _mask_of(arr: np.ndarray) -> int:
    # bit i of the result is arr[i]
    return int.from_bytes(np.packbits(arr[::-1]).tobytes(), "big") >> ((-arr.size) % 8)


@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups of a group, sorted by (order, least-element list).

    ``inclusion`` holds pairs ``(i, j)`` with ``subgroups[i]`` a proper
    subgroup of ``subgroups[j]``.
    """

    subgroups: tuple
    inclusion: frozenset
    maximal_flags: tuple

    def __len__(self):
        return len(self.subgroups)

    @property
    def maximal(self) -> list[Subgroup]:
        return [s for s, f in zip(self.subgroups, self.maximal_flags) if f]

    def orders(self) -> list[int]:
        return [len(s) for s in self.subgroups]


def all_subgroups(G: FiniteGroup, cap: int | None = DEFAULT_LATTICE_CAP,
                  max_subgroups: int | None = MAX_SUBGROUPS) -> SubgroupLattice:
    """Complete subgroup lattice of ``G``.

    ``|G|`` must not exceed ``cap`` and the search stops with
    :class:`LatticeTooLargeError` once more than ``max_subgroups`` subgroups
    turn up (elementary abelian groups near the cap have millions).
    """
    if cap is not None and G.n > cap:
        raise LatticeTooLargeError(G.n, cap)
    _, cyc_members = G.cyclic_classes
    cyclic = []
    for mem in cyc_members:
        arr = np.zeros(G.n, dtype=bool)
        arr[mem] = True
        cyclic.append((_mask_of(arr), mem))
    # each subgroup is kept with a short generating list; joining closes that
    # list plus one cyclic generator rather than every member
    found = {}
    for mask, mem in cyclic:
        found[mask] = [int(mem[1])] if len(mem) > 1 else []
    queue = list(found)
    for mask in queue:
        gens = found[mask]
        for cmask, cmem in cyclic:
            if cmask & mask == cmask:
                continue
            jmask = _mask_of(_closure_array(G, gens + [int(cmem[1])]))
            if jmask not in found:
                found[jmask] = gens + [int(cmem[1])]
                queue.append(jmask)
                if max_subgroups is not None and len(found) > max_subgroups:
                    raise LatticeTooLargeError(len(found), max_subgroups, "subgroup count")
    subs = sorted((Subgroup.from_mask(m) for m in found), key=lambda s: (len(s), s.sorted()))
    masks = [s.mask for s in subs]
    full = (1 << G.n) - 1
    inclusion = set()
    maximal = []
    for i, mi in enumerate(masks):
        is_max = mi != full
        for j, mj in enumerate(masks):
            if i != j and mi & mj == mi:
                inclusion.add((i, j))
                if mj != full:
                    is_max = False
        maximal.append(is_max)
    return SubgroupLattice(tuple(subs), frozenset(inclusion), tuple(maximal))


def maximal_subgroup_masks(G: FiniteGroup, lattice: SubgroupLattice | None = None,
                           cap: int | None = DEFAULT_LATTICE_CAP) -> list[int]:
    if lattice is None:
        lattice = all_subgroups(G, cap=cap)
    return [s.mask for s in lattice.maximal]


def frattini(G: FiniteGroup, lattice: SubgroupLattice | None = None,
             cap: int | None = DEFAULT_LATTICE_CAP) -> Subgroup:
    """Intersection of all maximal subgroups (the whole group if there are none).

    Abelian groups skip the lattice: there ``Frat(G)`` is the set of
    ``r``-th powers with ``r`` the product of the distinct primes dividing
    ``|G|``, which keeps large cyclic groups tractable.
    """
    if lattice is None and is_abelian(G):
        r = 1
        for p in set(prime_signature(G.n)):
            r *= p
        powers = {G.power(g, r) for g in range(G.n)}
        return Subgroup.of(G, powers)
    masks = maximal_subgroup_masks(G, lattice, cap)
    inter = (1 << G.n) - 1
    for m in masks:
        inter &= m
    return Subgroup.from_mask(inter)
