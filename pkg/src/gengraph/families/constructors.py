"""Constructors for the built-in group families and companion graphs."""

from __future__ import annotations

import math
from itertools import product as _cartesian

import numpy as np

from ..exceptions import CapExceededError
from ..graphs.graph import Graph
from ..groups.finite import DEFAULT_ORDER_CAP, FiniteGroup, from_perm_group, semidirect_product
from ..groups.permutation import Permutation, PermGroup

__all__ = [
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "symmetric_perm",
    "alternating_perm",
    "psl2",
    "psl2_order",
    "PSL2_FIELDS",
    "MATERIALIZE_MAX_DEGREE",
    "delta_graph",
    "y_graph",
    "k_complete",
    "c2c2_on_p3",
    "element_power_name",
]

MATERIALIZE_MAX_DEGREE = 7
DELTA_MAX = 16


def element_power_name(symbol: str, k: int) -> str:
    if k == 0:
        return "1"
    return symbol if k == 1 else f"{symbol}^{k}"


def cyclic(n: int) -> FiniteGroup:
    """``C_n = <x>`` with ``x^k`` at index ``k``."""
    if n < 1:
        raise ValueError("cyclic group order must be at least 1")
    a = np.arange(n)
    table = (a[:, None] + a[None, :]) % n
    names = [element_power_name("x", k) for k in range(n)]
    return FiniteGroup(table, names=names, validate=False, label=f"C_{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n``; ``ρ^a ι^b`` sits at index ``a + n*b``.

    Multiplication uses ``ι ρ ι = ρ^-1``, i.e.
    ``(ρ^a ι^b)(ρ^c ι^d) = ρ^(a + (-1)^b c) ι^(b + d)``.
    """
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3")
    idx = np.arange(2 * n)
    a, b = idx % n, idx // n
    sign = 1 - 2 * b
    rot = (a[:, None] + sign[:, None] * a[None, :]) % n
    ref = (b[:, None] + b[None, :]) % 2
    table = rot + n * ref
    names = []
    for bb in range(2):
        for aa in range(n):
            r = "" if aa == 0 else element_power_name("ρ", aa)
            s = r + ("ι" if bb else "")
            names.append(s or "1")
    return FiniteGroup(table, names=names, validate=False, label=f"D_{n}")


def symmetric_perm(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric group degree must be at least 1")
    gens = []
    if n >= 2:
        gens = [Permutation.from_cycles([(1, 2)], n), Permutation.from_cycles([tuple(range(1, n + 1))], n)]
    return PermGroup(gens, degree=n, name=f"S_{n}")


def alternating_perm(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("alternating group degree must be at least 1")
    gens = [Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)]
    return PermGroup(gens, degree=n, name=f"A_{n}")


def _materialized(P: PermGroup, n: int, cap: int | None) -> FiniteGroup | PermGroup:
    if n > MATERIALIZE_MAX_DEGREE:
        return P
    return from_perm_group(P, cap=cap)


def symmetric(n: int, cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup | PermGroup:
    """``S_n``: a Cayley table for ``n <= 7``, a generator-based group above."""
    return _materialized(symmetric_perm(n), n, cap)


def alternating(n: int, cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup | PermGroup:
    """``A_n``: a Cayley table for ``n <= 7``, a generator-based group above."""
    return _materialized(alternating_perm(n), n, cap)


# -- PSL(2, q) on the projective line -------------------------------------------------

class _Field:
    """GF(q) on ``0..q-1`` via explicit add/mul tables."""

    def __init__(self, q: int):
        self.q = q
        if q in (2, 3, 5, 7, 11, 13):
            r = np.arange(q)
            self.add = (r[:, None] + r[None, :]) % q
            self.mul = (r[:, None] * r[None, :]) % q
        elif q == 8:
            # polynomials over GF(2) as 3-bit integers, modulo x^3 + x + 1
            self.add = np.arange(8)[:, None] ^ np.arange(8)[None, :]
            self.mul = np.array([[self._gf8(a, b) for b in range(8)] for a in range(8)])
        elif q == 9:
            # a + b*i with i^2 = -1, stored as a + 3b
            def split(z):
                return z % 3, z // 3
            add = np.zeros((9, 9), dtype=int)
            mul = np.zeros((9, 9), dtype=int)
            for z, w in _cartesian(range(9), repeat=2):
                (a, b), (c, d) = split(z), split(w)
                add[z, w] = (a + c) % 3 + 3 * ((b + d) % 3)
                mul[z, w] = (a * c - b * d) % 3 + 3 * ((a * d + b * c) % 3)
            self.add, self.mul = add, mul
        else:
            raise ValueError(f"unsupported field size {q}")
        self.neg = np.argmax(self.add == 0, axis=1)
        inv = np.zeros(q, dtype=int)
        for z in range(1, q):
            inv[z] = int(np.flatnonzero(self.mul[z] == 1)[0])
        self.inv = inv

    @staticmethod
    def _gf8(a, b):
        out = 0
        for i in range(3):
            if (b >> i) & 1:
                out ^= a << i
        for i in (4, 3):
            if (out >> i) & 1:
                out ^= 0b1011 << (i - 3)
        return out

    def primitive(self) -> int:
        for z in range(2, self.q):
            seen, w = set(), 1
            for _ in range(self.q - 1):
                w = int(self.mul[w, z])
                seen.add(w)
            if len(seen) == self.q - 1:
                return z
        return 1  # q = 2


PSL2_FIELDS = (5, 7, 8, 9, 11, 13)


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def psl2(q: int) -> PermGroup:
    """``PSL(2, q)`` acting on the ``q + 1`` points of the projective line.

    Points ``0..q-1`` are field elements and ``q`` is infinity.  Generators
    are ``z -> z + 1``, ``z -> w^2 z`` (``w`` primitive) and ``z -> -1/z``.
    """
    if q not in PSL2_FIELDS:
        raise ValueError(f"psl2(q) supports q in {PSL2_FIELDS}, got {q}")
    F = _Field(q)
    inf = q
    w2 = int(F.mul[F.primitive(), F.primitive()])
    shift = [int(F.add[z, 1]) for z in range(q)] + [inf]
    scale = [int(F.mul[w2, z]) for z in range(q)] + [inf]
    invert = [inf] + [int(F.neg[F.inv[z]]) for z in range(1, q)] + [0]
    gens = [Permutation(shift), Permutation(scale), Permutation(invert)]
    G = PermGroup(gens, degree=q + 1, name=f"PSL2({q})")
    if G.order() != psl2_order(q):
        raise AssertionError(f"PSL2({q}) construction has order {G.order()}")
    return G


# -- companion graphs ------------------------------------------------------------------

def _subset_label(mask: int) -> str:
    if mask == 0:
        return "∅"
    return "{" + ",".join(str(i + 1) for i in range(mask.bit_length()) if (mask >> i) & 1) + "}"


def delta_graph(n: int) -> Graph:
    """Subsets of ``{1..n}`` (vertex index = bitmask), adjacent iff distinct
    with union everything."""
    if not 1 <= n <= DELTA_MAX:
        raise ValueError(f"delta_graph(n) needs 1 <= n <= {DELTA_MAX}")
    size = 1 << n
    full = size - 1
    # has_bit[i]: vertex bitmask of the subsets containing element i
    has_bit = []
    for i in range(n):
        block = ((1 << (1 << i)) - 1) << (1 << i)  # one period: 2^i zeros then 2^i ones
        pattern, width = block, 1 << (i + 1)
        while width < size:
            pattern |= pattern << width
            width *= 2
        has_bit.append(pattern)
    all_vertices = (1 << size) - 1
    rows = []
    for J in range(size):
        r = all_vertices
        missing = full & ~J
        for i in range(n):
            if (missing >> i) & 1:
                r &= has_bit[i]
        rows.append(r & ~(1 << J))
    return Graph(rows, [_subset_label(J) for J in range(size)], check=False)


def y_graph() -> Graph:
    """Triangle ``x1 x2 x3`` with pendant ``x4`` attached to ``x3``."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)], labels=["x1", "x2", "x3", "x4"])


def k_complete(n: int, prefix: str = "y") -> Graph:
    if n < 1:
        raise ValueError("k_complete(n) needs n >= 1")
    full = (1 << n) - 1
    rows = [full & ~(1 << v) for v in range(n)]
    return Graph(rows, [f"{prefix}{i + 1}" for i in range(n)], check=False)


# -- the C_p^3 x| C_2^2 example -----------------------------------------------------------

# sign pattern on (x1, x2, x3) for h1, h2, h3; h3 = h1 h2
_H_SIGNS = {0: (1, 1, 1), 1: (1, -1, -1), 2: (-1, 1, -1), 3: (-1, -1, 1)}


def _n_name(e):
    parts = [element_power_name(f"x{i + 1}", k) for i, k in enumerate(e) if k]
    return "".join(parts)


def c2c2_on_p3(p: int, cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """``C_p^3 x| C_2^2`` where ``h_i`` fixes ``x_i`` and inverts the other two.

    ``x1^a x2^b x3^c h`` sits at index ``(a + p b + p^2 c) + p^3 * h`` with
    ``h`` in ``{0, 1, 2, 3}`` standing for ``1, h1, h2, h3``.
    """
    if p < 3 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"c2c2_on_p3 needs an odd prime p, got {p}")
    if cap is not None and 4 * p ** 3 > cap:
        raise CapExceededError("group", 4 * p ** 3, cap)
    nn = p ** 3
    e = np.array([[k % p, (k // p) % p, k // (p * p)] for k in range(nn)])
    N_table = ((e[:, None, :] + e[None, :, :]) % p) @ np.array([1, p, p * p])
    N = FiniteGroup(N_table, names=[_n_name(x) or "1" for x in e], validate=False,
                    label=f"C_{p}^3")
    H_table = np.arange(4)[:, None] ^ np.arange(4)[None, :]
    H = FiniteGroup(H_table, names=["1", "h1", "h2", "h3"], validate=False, label="C_2^2")
    action = []
    for h in range(4):
        s = np.array(_H_SIGNS[h])
        action.append(((e * s) % p) @ np.array([1, p, p * p]))
    names = []
    for h in range(4):
        for x in e:
            s = _n_name(x) + (f"h{h}" if h else "")
            names.append(s or "1")
    G = semidirect_product(N, H, action, cap=cap, names=names)
    G.label = f"C_{p}^3:C_2^2"
    return G
