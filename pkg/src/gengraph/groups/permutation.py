"""Permutations and generator-based permutation groups.

Permutations act on the right: ``i ** (p * q) == (i ** p) ** q``, so the
product ``p * q`` means "apply ``p`` first, then ``q``".  Points are
0-based internally; cycle notation for display and parsing is 1-based,
matching the usual printed convention ``(1,2,3)(4,5)``.

Group orders come from a deterministic Schreier-Sims computation of a base
and strong generating set, so membership and order queries work for groups
far too large to list (``S_12`` has 479001600 elements).
"""

from __future__ import annotations

import math
import re
from functools import cached_property
from typing import Iterable, Sequence

from ..exceptions import ParseError

__all__ = [
    "Permutation",
    "PermGroup",
    "perm_generates",
    "parse_cycles",
]

MAX_BSGS_DEGREE = 16


class Permutation:
    """A bijection of ``{0, ..., degree - 1}`` stored as its image tuple."""

    __slots__ = ("images", "__weakref__")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def _trusted(cls, images: tuple) -> Permutation:
        p = cls.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int,
                    one_based: bool = True) -> Permutation:
        """Build a permutation from disjoint (or not) cycles.

        Cycles are composed left to right, so ``[(1, 2), (2, 3)]`` is the
        product ``(1,2)*(2,3)`` under the right-action convention.
        """
        result = list(range(degree))
        shift = 1 if one_based else 0
        for cycle in cycles:
            pts = [c - shift for c in cycle]
            if len(set(pts)) != len(pts):
                raise ValueError(f"repeated point in cycle {tuple(cycle)}")
            for p in pts:
                if not 0 <= p < degree:
                    raise ValueError(f"point {p + shift} outside degree {degree}")
            step = list(range(degree))
            for a, b in zip(pts, pts[1:] + pts[:1]):
                step[a] = b
            result = [step[r] for r in result]
        return cls._trusted(tuple(result))

    @classmethod
    def parse(cls, text: str, degree: int) -> Permutation:
        """Parse 1-based cycle notation such as ``"(1,2,3)(4,5)"`` or ``"()"``."""
        return cls.from_cycles(parse_cycles(text), degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise ValueError("degree mismatch")
        q = other.images
        return Permutation._trusted(tuple([q[i] for i in self.images]))

    def __invert__(self) -> Permutation:
        return self.inverse()

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles as 0-based tuples, each starting at its least point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True))) if self.degree else 1

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({str(self)!r}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Split ``"(1,2,3)(4,5)"`` into ``[(1, 2, 3), (4, 5)]`` (points as written)."""
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        raise ParseError(f"empty permutation {text!r}")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != pos:
            raise ParseError(f"could not parse permutation {text!r}")
        pos = m.end()
        body = m.group(1)
        if not body:
            continue
        try:
            cycles.append(tuple(int(t) for t in re.split(r"[, ]", body) if t))
        except ValueError:
            raise ParseError(f"could not parse permutation {text!r}") from None
    if pos != len(stripped):
        raise ParseError(f"could not parse permutation {text!r}")
    return cycles


# -- Schreier-Sims -----------------------------------------------------------
#
# Raw tuples are used below; wrapping every intermediate product in a
# Permutation object roughly doubles the running time.

def _mul(p, q):
    return tuple([q[i] for i in p])


def _inv(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class _Level:
    __slots__ = ("point", "gens", "transversal", "ident")

    def __init__(self, point, gens, degree):
        self.point = point
        self.gens = gens
        self.ident = tuple(range(degree))
        self.transversal = {}
        self.rebuild()

    def rebuild(self):
        # transversal[beta] maps the base point to beta
        b = self.point
        trans = {b: self.ident}
        queue = [b]
        for beta in queue:
            u = trans[beta]
            for s in self.gens:
                gamma = s[beta]
                if gamma not in trans:
                    trans[gamma] = _mul(u, s)
                    queue.append(gamma)
        self.transversal = trans


class _BSGS:
    """Incremental deterministic Schreier-Sims.

    ``stop_above`` aborts as soon as the running lower bound on the group
    order (the product of basic orbit lengths) exceeds it; ``stop_at``
    declares completion when that bound reaches a value known to be the
    largest possible order.  Both only shortcut order *comparisons*.
    """

    def __init__(self, gens, degree, stop_above=None, stop_at=None):
        self.degree = degree
        self.ident = tuple(range(degree))
        self.levels: list[_Level] = []
        self.aborted = False
        gens = [g for g in dict.fromkeys(gens) if g != self.ident]
        self.strong = list(gens)
        self._stop_above = stop_above
        self._stop_at = stop_at
        if gens:
            self._run()

    def lower_bound(self):
        return math.prod(len(lv.transversal) for lv in self.levels)

    def _moved_point(self, g):
        for i, j in enumerate(g):
            if i != j:
                return i
        raise AssertionError("identity has no moved point")

    def _gens_fixing(self, depth):
        pts = [lv.point for lv in self.levels[:depth]]
        return [g for g in self.strong if all(g[p] == p for p in pts)]

    def strip(self, g, start=0):
        for idx in range(start, len(self.levels)):
            lv = self.levels[idx]
            beta = g[lv.point]
            u = lv.transversal.get(beta)
            if u is None:
                return g, idx
            g = _mul(g, _inv(u))
        return g, len(self.levels)

    def _check_stop(self):
        bound = self.lower_bound()
        if self._stop_above is not None and bound > self._stop_above:
            self.aborted = True
            return True
        if self._stop_at is not None and bound >= self._stop_at:
            return True
        return False

    def _run(self):
        # initial base: every strong generator moves some base point
        for g in self.strong:
            if all(g[lv.point] == lv.point for lv in self.levels):
                self.levels.append(_Level(self._moved_point(g), [], self.degree))
        for depth, lv in enumerate(self.levels):
            lv.gens = self._gens_fixing(depth)
            lv.rebuild()
        if self._check_stop():
            return
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            restart = False
            for beta, u in list(lv.transversal.items()):
                for s in lv.gens:
                    gamma = s[beta]
                    h = _mul(_mul(u, s), _inv(lv.transversal[gamma]))
                    if h == self.ident:
                        continue
                    h, j = self.strip(h, i + 1)
                    if j < len(self.levels) or h != self.ident:
                        self.strong.append(h)
                        if j == len(self.levels):
                            self.levels.append(_Level(self._moved_point(h), [], self.degree))
                        for l in range(i + 1, j + 1):
                            self.levels[l].gens = self._gens_fixing(l)
                            self.levels[l].rebuild()
                        if self._check_stop():
                            return
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def order(self):
        return self.lower_bound()

    def contains(self, g):
        h, j = self.strip(g)
        return j == len(self.levels) and h == self.ident


class PermGroup:
    """Permutation group given by generators; nothing is enumerated eagerly."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None,
                 name: str | None = None):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree required for a group without generators")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise ValueError(
                    f"degree mismatch: generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        self.name = name

    def __repr__(self):
        label = self.name or f"<{', '.join(map(str, self.generators))}>"
        return f"PermGroup({label}, degree={self.degree})"

    @cached_property
    def _bsgs(self) -> _BSGS:
        return _BSGS([g.images for g in self.generators], self.degree)

    def order(self) -> int:
        if not self.generators:
            return 1
        return self._bsgs.order()

    def __contains__(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            return False
        if not self.generators:
            return perm.is_identity()
        return self._bsgs.contains(perm.images)

    def base(self) -> list[int]:
        return [lv.point for lv in self._bsgs.levels] if self.generators else []

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def orbit(self, point: int) -> set[int]:
        orb = {point}
        queue = [point]
        for x in queue:
            for g in self.generators:
                y = g.images[x]
                if y not in orb:
                    orb.add(y)
                    queue.append(y)
        return orb

    def elements(self, cap: int | None = None) -> list[Permutation]:
        """All elements, sorted lexicographically by image tuple (identity first)."""
        order = self.order()
        if cap is not None and order > cap:
            from ..exceptions import CapExceededError
            raise CapExceededError("group", order, cap)
        ident = tuple(range(self.degree))
        seen = {ident}
        queue = [ident]
        gens = [g.images for g in self.generators]
        for x in queue:
            for s in gens:
                y = _mul(x, s)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return [Permutation._trusted(p) for p in sorted(seen)]


def perm_generates(perms: Sequence[Permutation], target_order: int) -> bool:
    """True iff ``perms`` generate a group with exactly ``target_order`` elements.

    All permutations must share one degree, at most 16.
    """
    perms = list(perms)
    if not perms:
        return target_order == 1
    degree = perms[0].degree
    for p in perms:
        if p.degree != degree:
            raise ValueError(f"degree mismatch: {p.degree} != {degree}")
    if degree > MAX_BSGS_DEGREE:
        raise ValueError(f"degree {degree} exceeds supported maximum {MAX_BSGS_DEGREE}")
    if target_order < 1 or math.factorial(degree) % target_order:
        return False
    # the largest subgroup the generators could possibly produce
    ceiling = math.factorial(degree)
    if all(p.is_even() for p in perms) and degree > 1:
        ceiling //= 2
    if target_order > ceiling:
        return False
    bsgs = _BSGS([p.images for p in perms], degree, stop_above=target_order,
                 stop_at=ceiling if target_order == ceiling else None)
    if bsgs.aborted:
        return False
    return bsgs.order() == target_order
