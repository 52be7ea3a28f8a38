"""The group mini-language used on the command line.

Examples: ``cyclic:12``, ``dihedral:105``, ``sym:8``, ``alt:5``, ``psl2:7``,
``product:cyclic:30,cyclic:6``, ``c2c2p3:3``, ``cayley:table.txt``,
``perm:gens.txt``.  Graph-valued targets are ``delta:5``,
``tensor:y,k3`` and ``graph:edges.txt``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..exceptions import CapExceededError, ParseError
from ..graphs.graph import Graph, read_edgelist, tensor
from ..groups.fileio import read_cayley_table, read_perm_generators
from ..groups.finite import DEFAULT_ORDER_CAP, FiniteGroup, direct_product, from_perm_group
from ..groups.permutation import PermGroup
from . import constructors as C

__all__ = ["GroupSpec", "GROUP_KINDS", "GRAPH_KINDS"]

_ALIASES = {"symmetric": "sym", "alternating": "alt", "s": "sym", "a": "alt"}
_INT_KINDS = ("cyclic", "dihedral", "sym", "alt", "psl2", "c2c2p3", "delta")
_PATH_KINDS = ("cayley", "perm", "graph")
GROUP_KINDS = ("cyclic", "dihedral", "sym", "alt", "psl2", "product", "c2c2p3", "cayley", "perm")
GRAPH_KINDS = ("delta", "tensor", "graph")


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group (or graph) description.

    ``args`` holds one integer for the numeric kinds, one path string for
    file kinds, and a tuple of factor specs (or factor names for
    ``tensor``) otherwise.
    """

    kind: str
    args: tuple

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        text = text.strip()
        kind, sep, rest = text.partition(":")
        kind = _ALIASES.get(kind.lower(), kind.lower())
        if not sep or not rest:
            raise ParseError(f"group spec {text!r} must look like kind:argument")
        if kind in _INT_KINDS:
            try:
                value = int(rest)
            except ValueError:
                raise ParseError(f"{kind} expects an integer, got {rest!r}") from None
            spec = cls(kind, (value,))
            spec._check()
            return spec
        if kind in _PATH_KINDS:
            return cls(kind, (rest,))
        if kind == "product":
            factors = tuple(cls.parse(part) for part in rest.split(","))
            if len(factors) < 2:
                raise ParseError("product needs at least two comma-separated factors")
            for f in factors:
                if f.is_graph or f.kind == "product":
                    raise ParseError(f"product factor {f} must be a plain group")
            return cls(kind, factors)
        if kind == "tensor":
            factors = tuple(p.strip().lower() for p in rest.split(","))
            if len(factors) != 2:
                raise ParseError("tensor needs exactly two factors")
            for f in factors:
                if f != "y" and not (f.startswith("k") and f[1:].isdigit() and int(f[1:]) >= 1):
                    raise ParseError(f"tensor factor {f!r} must be y or k<n>")
            return cls(kind, factors)
        raise ParseError(f"unknown group kind {kind!r}")

    def _check(self):
        (v,) = self.args
        k = self.kind
        if k == "cyclic" and v < 1:
            raise ParseError("cyclic:n needs n >= 1")
        if k == "dihedral" and v < 3:
            raise ParseError("dihedral:n needs n >= 3")
        if k in ("sym", "alt") and v < 1:
            raise ParseError(f"{k}:n needs n >= 1")
        if k == "psl2" and v not in C.PSL2_FIELDS:
            raise ParseError(f"psl2:q needs q in {C.PSL2_FIELDS}")
        if k == "c2c2p3" and (v < 3 or any(v % d == 0 for d in range(2, int(v ** 0.5) + 1))):
            raise ParseError("c2c2p3:p needs an odd prime p")
        if k == "delta" and not 1 <= v <= C.DELTA_MAX:
            raise ParseError(f"delta:n needs 1 <= n <= {C.DELTA_MAX}")

    def __str__(self):
        if self.kind in ("product", "tensor"):
            return f"{self.kind}:" + ",".join(str(a) for a in self.args)
        return f"{self.kind}:{self.args[0]}"

    @property
    def is_graph(self) -> bool:
        return self.kind in GRAPH_KINDS

    def order(self) -> int | None:
        """Group order when known without materializing, else ``None``."""
        k = self.kind
        if k in ("cayley", "perm") or self.is_graph:
            return None
        if k == "product":
            orders = [f.order() for f in self.args]
            return None if None in orders else math.prod(orders)
        v = self.args[0]
        if k == "cyclic":
            return v
        if k == "dihedral":
            return 2 * v
        if k == "sym":
            return math.factorial(v)
        if k == "alt":
            return max(1, math.factorial(v) // 2)
        if k == "psl2":
            return C.psl2_order(v)
        return 4 * v ** 3  # c2c2p3

    # -- construction ----------------------------------------------------------------

    def build_perm_group(self) -> PermGroup:
        k = self.kind
        v = self.args[0]
        if k == "sym":
            return C.symmetric_perm(v)
        if k == "alt":
            return C.alternating_perm(v)
        if k == "psl2":
            return C.psl2(v)
        if k == "perm":
            return read_perm_generators(v)
        raise ValueError(f"{self} is not a permutation group")

    def build_group(self, cap: int | None = DEFAULT_ORDER_CAP,
                    materialize: bool = True) -> FiniteGroup | PermGroup:
        """Construct the group, as a Cayley table whenever it fits under ``cap``.

        With ``materialize=False`` permutation kinds stay generator-based.
        """
        if self.is_graph:
            raise ValueError(f"{self} describes a graph, not a group")
        k = self.kind
        known = self.order()
        if materialize and cap is not None and known is not None and known > cap:
            raise CapExceededError("group", known, cap)
        if k == "cyclic":
            return C.cyclic(self.args[0])
        if k == "dihedral":
            return C.dihedral(self.args[0])
        if k == "c2c2p3":
            return C.c2c2_on_p3(self.args[0], cap=cap)
        if k == "cayley":
            return read_cayley_table(self.args[0], cap=cap)
        if k == "product":
            G = self.args[0].build_group(cap)
            for f in self.args[1:]:
                G = direct_product(G, f.build_group(cap), cap=cap)
            G.label = " x ".join(str(f) for f in self.args)
            return G
        P = self.build_perm_group()
        if not materialize:
            return P
        G = from_perm_group(P, cap=cap)
        G.label = str(self)
        return G

    def build_graph(self) -> Graph:
        if self.kind == "delta":
            return C.delta_graph(self.args[0])
        if self.kind == "graph":
            return read_edgelist(self.args[0])
        if self.kind == "tensor":
            parts = [C.y_graph() if f == "y" else C.k_complete(int(f[1:])) for f in self.args]
            return tensor(parts[0], parts[1])
        raise ValueError(f"{self} describes a group, not a graph")
