"""Materialized finite groups on dense element indices.

A :class:`FiniteGroup` is a Cayley table over ``0..n-1``.  Every group the
graph code analyzes is eventually one of these; permutation groups are
converted with :func:`from_perm_group` when they fit under the
materialization cap.

Subgroups are plain ``frozenset`` objects of element indices wrapped in
:class:`Subgroup`, which also carries a Python-int bitmask for fast
containment tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ..exceptions import CapExceededError, InvalidGroupError, NotNormalError
from .permutation import Permutation, PermGroup

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "DEFAULT_ORDER_CAP",
    "closure",
    "is_generating_pair",
    "is_2_generated",
    "element_order",
    "quotient",
    "QuotientGroup",
    "direct_product",
    "semidirect_product",
    "from_perm_group",
    "is_abelian",
    "is_cyclic",
    "is_nilpotent",
    "is_soluble",
    "prime_signature",
    "commutator_subgroup",
]

DEFAULT_ORDER_CAP = 20_000
EXHAUSTIVE_ASSOCIATIVITY_MAX = 200
ASSOCIATIVITY_SAMPLES = 1_000_000


def _index_dtype(n):
    return np.uint16 if n <= np.iinfo(np.uint16).max else np.int32


class FiniteGroup:
    """A finite group given by its multiplication table.

    Parameters
    ----------
    mul : array-like, shape (n, n)
        ``mul[i, j]`` is the index of the product ``i * j``.
    names : sequence of str, optional
        Display labels, one per element.  Defaults to ``"g0", "g1", ...``.
    identity : int
        Index of the identity element.
    validate : bool
        Check identity, inverses and associativity (exhaustively for
        ``n <= 200``, on a million random triples above).
    """

    def __init__(self, mul, names: Sequence[str] | None = None, identity: int = 0,
                 validate: bool = True, label: str | None = None):
        mul = np.asarray(mul)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise InvalidGroupError(f"multiplication table must be square, got shape {mul.shape}")
        n = mul.shape[0]
        if mul.min() < 0 or mul.max() >= n:
            raise InvalidGroupError("table entries out of range")
        self.mul = np.ascontiguousarray(mul, dtype=_index_dtype(n))
        self.mul.setflags(write=False)
        self.n = n
        self.identity = int(identity)
        if names is None:
            names = [f"g{i}" for i in range(n)]
        if len(names) != n:
            raise InvalidGroupError(f"{len(names)} names for {n} elements")
        self.names = tuple(str(s) for s in names)
        self.label = label
        if validate:
            self._validate()
        inv = np.argmax(self.mul == self.identity, axis=1)
        if validate and not np.all(self.mul[np.arange(n), inv] == self.identity):
            raise InvalidGroupError("some element has no inverse")
        self.inv = inv.astype(self.mul.dtype)
        self.inv.setflags(write=False)

    def _validate(self):
        n, e, mul = self.n, self.identity, self.mul
        if not 0 <= e < n:
            raise InvalidGroupError(f"identity index {e} out of range")
        idx = np.arange(n)
        if not (np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx)):
            raise InvalidGroupError(f"element {e} is not a two-sided identity")
        if not np.all((mul == e).sum(axis=1) == 1):
            raise InvalidGroupError("some element does not have a unique inverse")
        m = mul.astype(np.int64)
        if n <= EXHAUSTIVE_ASSOCIATIVITY_MAX:
            # left[a, b, c] = (a*b)*c ; right[a, b, c] = a*(b*c)
            left = m[m]
            right = m[np.arange(n)[:, None, None], m[None, :, :]]
            if not np.array_equal(left, right):
                bad = np.argwhere(left != right)[0]
                raise InvalidGroupError(f"associativity fails on triple {tuple(int(x) for x in bad)}")
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
            if not np.array_equal(m[m[a, b], c], m[a, m[b, c]]):
                raise InvalidGroupError("associativity fails on a sampled triple")

    # -- basic structure -----------------------------------------------------

    def __len__(self):
        return self.n

    @property
    def order(self) -> int:
        return self.n

    def __repr__(self):
        label = self.label or "FiniteGroup"
        return f"<{label} of order {self.n}>"

    def index(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise KeyError(f"no element named {name!r}") from None

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.names)}

    def mult(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = int(self.inv[g]), -k
        result, base = self.identity, g
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        """Order of every element, computed by one vectorized power sweep."""
        n = self.n
        orders = np.zeros(n, dtype=np.int64)
        idx = np.arange(n)
        cur = idx.copy()
        k = 1
        while True:
            hit = (cur == self.identity) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            cur = self.mul[cur, idx]
            k += 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def cyclic_classes(self) -> tuple[np.ndarray, list[np.ndarray]]:
        """Partition of the elements by the cyclic subgroup they generate.

        Returns ``(class_of, members)``: ``class_of[g]`` is the class id of
        ``g`` and ``members[c]`` lists the elements of the cyclic subgroup
        of class ``c`` (not just its generators), in power order.  Classes
        are numbered by their least generator index.
        """
        n = self.n
        class_of = np.full(n, -1, dtype=np.int64)
        members = []
        orders = self.element_orders
        for g in range(n):
            if class_of[g] >= 0:
                continue
            o = int(orders[g])
            powers = np.empty(o, dtype=np.int64)
            cur = self.identity
            for k in range(o):
                powers[k] = cur
                cur = int(self.mul[cur, g])
            c = len(members)
            for k in range(1, o + 1):
                if math.gcd(k, o) == 1:
                    class_of[powers[k % o]] = c
            members.append(powers)
        class_of.setflags(write=False)
        return class_of, members

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def subgroup(self, members: Iterable[int]) -> Subgroup:
        return Subgroup.of(self, members)

    def whole(self) -> Subgroup:
        return Subgroup.of(self, range(self.n))

    def trivial(self) -> Subgroup:
        return Subgroup.of(self, [self.identity])


@dataclass(frozen=True)
class Subgroup:
    """A set of element indices of a fixed group; closure is not re-checked."""

    members: frozenset
    mask: int = field(compare=False, repr=False)

    @classmethod
    def of(cls, group: FiniteGroup, members: Iterable[int]) -> Subgroup:
        members = frozenset(int(m) for m in members)
        mask = 0
        for m in members:
            mask |= 1 << m
        return cls(members, mask)

    @classmethod
    def from_mask(cls, mask: int) -> Subgroup:
        members = []
        m, i = mask, 0
        while m:
            low = m & -m
            members.append(low.bit_length() - 1)
            m ^= low
        return cls(frozenset(members), mask)

    def __len__(self):
        return len(self.members)

    def __contains__(self, g):
        return (self.mask >> int(g)) & 1 == 1

    def __iter__(self):
        return iter(sorted(self.members))

    def __le__(self, other: Subgroup) -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: Subgroup) -> bool:
        return self.mask != other.mask and self <= other

    def __and__(self, other: Subgroup) -> Subgroup:
        return Subgroup.from_mask(self.mask & other.mask)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def is_subgroup_of(self, group: FiniteGroup) -> bool:
        """Closure under products and inverses, and contains the identity."""
        if group.identity not in self:
            return False
        m = np.array(self.sorted())
        prods = group.mul[np.ix_(m, m)].ravel()
        return all(int(p) in self for p in np.unique(prods)) and \
            all(int(group.inv[x]) in self for x in m)


# -- closure and generation ----------------------------------------------------

def _closure_array(G: FiniteGroup, seed, stop_above: int | None = None) -> np.ndarray:
    """Boolean membership vector of the subgroup generated by ``seed``.

    With ``stop_above`` set, returns as soon as more than that many elements
    are known (the caller only needs to know the subgroup is large).
    """
    n = G.n
    members = np.zeros(n, dtype=bool)
    members[G.identity] = True
    seed = np.unique(np.asarray(list(seed), dtype=np.int64))
    seed = seed[seed != G.identity]
    if seed.size == 0:
        return members
    members[seed] = True
    gens = seed
    frontier = seed
    count = int(members.sum())
    mul = G.mul
    fresh = np.zeros(n, dtype=bool)
    while frontier.size:
        prods = mul[frontier[:, None], gens[None, :]].ravel()
        fresh[prods] = True
        fresh &= ~members
        new = np.flatnonzero(fresh)
        if new.size == 0:
            break
        fresh[new] = False
        members[new] = True
        count += new.size
        if stop_above is not None and count > stop_above:
            break
        frontier = new.astype(np.int64)
        # Multiplying by already-known members is still closure-preserving and
        # shortens long words (e.g. two reflections generating a large dihedral).
        if count <= 256:
            gens = np.flatnonzero(members)
    return members


def closure(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``seed``."""
    seed = list(seed)
    for s in seed:
        if not 0 <= int(s) < G.n:
            raise IndexError(f"element index {s} out of range for group of order {G.n}")
    return Subgroup.of(G, np.flatnonzero(_closure_array(G, seed)))


def generates(G: FiniteGroup, seed: Iterable[int]) -> bool:
    """True iff ``seed`` generates all of ``G``."""
    # a subgroup with more than half the elements is the whole group
    arr = _closure_array(G, seed, stop_above=G.n // 2)
    return int(arr.sum()) > G.n // 2


def is_generating_pair(G: FiniteGroup, a: int, b: int) -> bool:
    """True iff ``<a, b> = G``; ``a == b`` tests whether ``a`` alone generates."""
    return generates(G, [a, b])


def is_2_generated(G: FiniteGroup) -> bool:
    """True iff some pair of elements (possibly equal) generates ``G``."""
    if G.n == 1:
        return True
    _, members = G.cyclic_classes
    reps = [int(m[1]) if len(m) > 1 else int(m[0]) for m in members]
    if is_cyclic(G):
        return True
    k = len(members)
    for i in range(k):
        for j in range(i + 1, k):
            if generates(G, [reps[i], reps[j]]):
                return True
    return False


def element_order(G: FiniteGroup, g: int) -> int:
    return int(G.element_orders[g])


# -- quotients and products ------------------------------------------------------

class QuotientGroup(FiniteGroup):
    """``G/N`` with the coset bookkeeping needed to lift elements back.

    Cosets are numbered by their least element index, so the coset of the
    identity is element 0; ``representatives[c]`` is that least element and
    ``projection[g]`` the coset containing ``g``.
    """

    def __init__(self, mul, names, parent: FiniteGroup, normal: Subgroup,
                 projection: np.ndarray, representatives: np.ndarray, cosets: list[np.ndarray]):
        super().__init__(mul, names=names, validate=False, label=f"{parent.label or 'G'}/N")
        self.parent = parent
        self.normal = normal
        self.projection = projection
        self.representatives = representatives
        self.cosets = cosets

    def coset(self, c: int) -> np.ndarray:
        return self.cosets[c]


def is_normal(G: FiniteGroup, N: Subgroup) -> bool:
    """Exhaustive conjugation test ``g n g^-1 in N`` for all ``g`` and ``n``."""
    members = np.array(N.sorted(), dtype=np.int64)
    mask = np.zeros(G.n, dtype=bool)
    mask[members] = True
    g = np.arange(G.n)
    conj = G.mul[G.mul[g[:, None], members[None, :]], G.inv[g][:, None]]
    return bool(mask[conj].all())


def quotient(G: FiniteGroup, N: Subgroup) -> QuotientGroup:
    """The quotient group ``G/N`` for a normal subgroup ``N``."""
    if G.identity not in N or not N.is_subgroup_of(G):
        raise NotNormalError("N is not a subgroup")
    if not is_normal(G, N):
        raise NotNormalError("N is not normal in G")
    members = np.array(N.sorted(), dtype=np.int64)
    n = G.n
    projection = np.full(n, -1, dtype=np.int64)
    reps, cosets = [], []
    for g in range(n):
        if projection[g] >= 0:
            continue
        coset = np.sort(G.mul[g, members].astype(np.int64))
        projection[coset] = len(reps)
        reps.append(g)
        cosets.append(coset)
    reps = np.array(reps, dtype=np.int64)
    k = len(reps)
    table = projection[G.mul[np.ix_(reps, reps)].astype(np.int64)]
    names = [G.names[r] + "N" if r != G.identity else "N" for r in reps]
    projection.setflags(write=False)
    return QuotientGroup(table, names, G, N, projection, reps, cosets)


def _check_cap(size, cap):
    if cap is not None and size > cap:
        raise CapExceededError("group", size, cap)


def direct_product(A: FiniteGroup, B: FiniteGroup, cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """``A x B`` with ``(a, b)`` stored at index ``a + |A| * b``."""
    na, nb = A.n, B.n
    _check_cap(na * nb, cap)
    a = np.arange(na * nb) % na
    b = np.arange(na * nb) // na
    table = A.mul[a[:, None], a[None, :]].astype(np.int64) + \
        na * B.mul[b[:, None], b[None, :]].astype(np.int64)
    names = [_pair_name(A.names[x], B.names[y]) for y in range(nb) for x in range(na)]
    label = f"{A.label or 'A'} x {B.label or 'B'}"
    return FiniteGroup(table, names=names, validate=False, label=label)


def _pair_name(a, b):
    return f"({a},{b})"


def semidirect_product(N: FiniteGroup, H: FiniteGroup, action, cap: int | None = DEFAULT_ORDER_CAP,
                       names: Sequence[str] | None = None) -> FiniteGroup:
    """``N x| H`` on pairs ``(n, h)`` stored at index ``n + |N| * h``.

    ``action[h]`` is the automorphism of ``N`` induced by ``h``, given as an
    image array.  Multiplication follows
    ``(n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2)``, so inside the
    product ``h n h^-1 = action[h](n)``.  The action must be a homomorphism
    ``H -> Aut(N)``; both conditions are checked exhaustively.
    """
    nn, nh = N.n, H.n
    _check_cap(nn * nh, cap)
    act = np.array([np.asarray(action[h], dtype=np.int64) for h in range(nh)])
    if act.shape != (nh, nn):
        raise InvalidGroupError(f"action must give {nh} image arrays of length {nn}")
    ar = np.arange(nn)
    for h in range(nh):
        phi = act[h]
        if sorted(phi.tolist()) != list(range(nn)):
            raise InvalidGroupError(f"action of element {h} is not a bijection")
        # phi(x y) == phi(x) phi(y)
        if not np.array_equal(phi[N.mul], N.mul[phi[:, None], phi[None, :]]):
            raise InvalidGroupError(f"action of element {h} is not an automorphism")
    if not np.array_equal(act[H.identity], ar):
        raise InvalidGroupError("identity of H must act trivially")
    for h1 in range(nh):
        for h2 in range(nh):
            if not np.array_equal(act[H.mul[h1, h2]], act[h1][act[h2]]):
                raise InvalidGroupError(
                    f"action is not a homomorphism at ({H.names[h1]}, {H.names[h2]})")
    idx = np.arange(nn * nh)
    n_of, h_of = idx % nn, idx // nn
    # (n1, h1)(n2, h2) = (n1 * act[h1][n2], h1 h2)
    twisted = act[h_of[:, None], n_of[None, :]]
    new_n = N.mul[n_of[:, None], twisted].astype(np.int64)
    new_h = H.mul[h_of[:, None], h_of[None, :]].astype(np.int64)
    table = new_n + nn * new_h
    if names is None:
        names = [_pair_name(N.names[x], H.names[y]) for y in range(nh) for x in range(nn)]
    label = f"{N.label or 'N'} x| {H.label or 'H'}"
    return FiniteGroup(table, names=names, validate=False, label=label)


def from_perm_group(P: PermGroup, cap: int | None = DEFAULT_ORDER_CAP,
                    validate: bool = False) -> FiniteGroup:
    """Materialize a permutation group; elements sorted by image tuple."""
    elements = P.elements(cap=cap)
    return table_from_permutations(elements, label=P.name, validate=validate)


def table_from_permutations(elements: Sequence[Permutation], label=None,
                            validate: bool = False) -> FiniteGroup:
    """Cayley table of a list of permutations closed under composition.

    ``elements`` must be sorted by image tuple; products are located by
    binary search on a mixed-radix key of the image tuple.
    """
    n = len(elements)
    d = elements[0].degree
    E = np.array([p.images for p in elements], dtype=np.int64).reshape(n, d)
    weights = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
    keys = E @ weights
    if np.any(np.diff(keys) <= 0):
        raise ValueError("elements must be distinct and sorted by image tuple")
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        # (p_i * p_j)[x] = p_j[p_i[x]]
        prod_keys = E[:, E[i]] @ weights
        pos = np.searchsorted(keys, prod_keys)
        if np.any(pos >= n) or np.any(keys[np.minimum(pos, n - 1)] != prod_keys):
            raise ValueError("element list is not closed under multiplication")
        table[i] = pos
    names = [str(p) for p in elements]
    return FiniteGroup(table, names=names, validate=validate, label=label)


# -- structural predicates --------------------------------------------------------

def is_abelian(G: FiniteGroup) -> bool:
    return G.is_abelian()


def is_cyclic(G: FiniteGroup) -> bool:
    return bool((G.element_orders == G.n).any())


def _commutator_closure(G: FiniteGroup, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Element list of the subgroup generated by ``[a, b]`` for a in A, b in B."""
    mul, inv = G.mul, G.inv
    a, b = A[:, None], B[None, :]
    comm = mul[mul[inv[a], inv[b]], mul[a, b]]
    seed = np.unique(comm)
    return np.flatnonzero(_closure_array(G, seed.tolist()))


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    allg = np.arange(G.n)
    return Subgroup.of(G, _commutator_closure(G, allg, allg))


def is_soluble(G: FiniteGroup) -> bool:
    """Derived series reaches the trivial group."""
    current = np.arange(G.n)
    while current.size > 1:
        nxt = _commutator_closure(G, current, current)
        if nxt.size == current.size:
            return False
        current = nxt
    return True


def is_nilpotent(G: FiniteGroup) -> bool:
    """Lower central series reaches the trivial group."""
    if G.is_abelian():
        return True
    allg = np.arange(G.n)
    current = allg
    while current.size > 1:
        nxt = _commutator_closure(G, current, allg)
        if nxt.size == current.size:
            return False
        current = nxt
    return True


def prime_signature(n: int) -> list[int]:
    """Prime factors of ``n`` with multiplicity, ascending; ``[]`` for 1."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out
