"""Explicit 5-hole certificates and their verification.

A :class:`CertificateBundle` names a target (group or graph spec) and five
vertices written the way the target prints them: cycle notation for
permutation groups, element names for table groups, vertex labels for
graphs.  :func:`verify_bundle` checks the ten pairs directly: the five
cyclically consecutive pairs must be edges and the other five must not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..exceptions import ParseError
from ..groups.finite import commutator_subgroup, from_perm_group, is_generating_pair
from ..groups.permutation import Permutation, perm_generates, PermGroup
from .constructors import c2c2_on_p3
from .spec import GroupSpec

__all__ = [
    "CertificateBundle",
    "BundleResult",
    "sn_hole",
    "an_hole",
    "dihedral_crt_hole",
    "crt_exponents",
    "c2c2_on_p3_example",
    "psl2_hole",
    "delta_hole",
    "y_k3_hole",
    "builtin_bundles",
    "verify_bundle",
]


@dataclass(frozen=True)
class CertificateBundle:
    name: str
    target: str
    vertices: tuple
    kind: str = "hole"

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        if len(self.vertices) != 5:
            raise ValueError(f"a bundle has exactly five vertices, got {len(self.vertices)}")
        if self.kind != "hole":
            raise ValueError("only hole bundles are supported")

    @property
    def spec(self) -> GroupSpec:
        return GroupSpec.parse(self.target)

    def to_json(self) -> dict:
        return {"name": self.name, "target": self.target, "vertices": list(self.vertices),
                "kind": self.kind}

    @classmethod
    def from_json(cls, data: dict) -> CertificateBundle:
        try:
            return cls(data["name"], data["target"], tuple(data["vertices"]), data.get("kind", "hole"))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed bundle: {exc}") from None


@dataclass
class BundleResult:
    bundle: CertificateBundle
    ok: bool
    violations: list = field(default_factory=list)

    def summary(self) -> str:
        if self.ok:
            return f"PASS {self.bundle.name}"
        return f"FAIL {self.bundle.name}: " + "; ".join(self.violations)


# -- symmetric and alternating groups -------------------------------------------------

def _cyc(*points):
    return "(" + ",".join(str(p) for p in points) + ")"


def _run(a, b):
    return list(range(a, b + 1))


_SN_SMALL = {
    5: ("(1,2,3,4,5)", "(2,4)", "(1,2,3,5,4)", "(2,4,5,3)", "(1,2,4,5)"),
    6: ("(1,3,2,4)", "(3,4,6,5)", "(1,2,3,4,5)", "(1,3,4,6)", "(2,3,4,5,6)"),
    7: ("(1,5,4,7,2,3)", "(2,6,5,7,3,4)", "(1,2,3,4,5,7,6)", "(4,5)", "(1,2,3,4,5,6,7)"),
}

_A6 = ("(1,2,3,4,5)", "(1,3)(5,6)", "(1,2,4,5,6)", "(1,4,2,3,5)", "(1,2,6)")


def sn_hole(n: int, corrected: bool = False) -> CertificateBundle:
    """Five permutations claimed to form a 5-hole in the generating graph of ``S_n``.

    The tuples are reproduced as published.  For odd ``n >= 9`` the
    published fourth vertex ``(1,2,4,5,n-1,n-2)`` and the third vertex both
    fix ``n``, so that pair cannot generate ``S_n`` and the bundle fails
    verification; ``corrected=True`` substitutes ``(1,2,4,5,n-1,n)``, which
    verifies.
    """
    if n < 5:
        raise ValueError("sn_hole(n) needs n >= 5")
    if n in _SN_SMALL:
        verts = _SN_SMALL[n]
    elif n % 2 == 0:
        verts = (_cyc(*_run(1, n - 2)), _cyc(*_run(3, n)), _cyc(*_run(1, n - 1)),
                 _cyc(1, 3, 4, n), _cyc(*_run(2, n)))
    else:
        a4 = _cyc(1, 2, 4, 5, n - 1, n) if corrected else _cyc(1, 2, 4, 5, n - 1, n - 2)
        verts = (_cyc(*_run(1, n - 3)), _cyc(*_run(4, n)), _cyc(*_run(1, n - 2)), a4,
                 _cyc(*_run(3, n)))
        if corrected:
            return CertificateBundle(f"S_{n} (corrected)", f"sym:{n}", verts)
    return CertificateBundle(f"S_{n}", f"sym:{n}", verts)


def an_hole(n: int) -> CertificateBundle:
    """Five even permutations forming a 5-hole in the generating graph of ``A_n``."""
    if n < 5:
        raise ValueError("an_hole(n) needs n >= 5")
    if n == 6:
        verts = _A6
    elif n % 2 == 1:
        tail = _run(6, n)
        verts = tuple(_cyc(*head, *tail) for head in
                      ((1, 2, 3), (2, 4, 5), (1, 3, 5), (2, 3, 4), (1, 4, 5)))
    else:
        tail = _run(9, n)
        verts = tuple(_cyc(*head, *tail) for head in
                      ((1, 2, 3, 4, 5), (1, 3, 6, 7, 8), (2, 7, 8, 4, 5), (1, 6, 3, 4, 5),
                       (1, 2, 6, 7, 8)))
    return CertificateBundle(f"A_{n}", f"alt:{n}", verts)


_PSL2 = {
    7: ("(2,3,4)(5,8,7)", "(1,4,5)(3,7,6)", "(2,7,8)(3,6,5)", "(1,2,4)(6,7,8)",
        "(1,2,5,7)(3,8,6,4)"),
    11: ("(3,9,5,11,7)(4,10,6,12,8)", "(1,6,3,4,12)(2,11,9,10,7)", "(1,3,8,5,4)(6,7,9,12,10)",
         "(2,12,11,8,3)(4,7,9,10,6)", "(1,9,6,7,5)(2,4,12,3,10)"),
}


def psl2_hole(q: int) -> CertificateBundle:
    """Printed 5-hole for ``PSL(2, q)``, ``q`` in {7, 11}, as permutations of
    degree ``q + 1`` (the group is the one they generate)."""
    if q not in _PSL2:
        raise ValueError("explicit PSL(2, q) holes are known for q = 7 and 11")
    return CertificateBundle(f"PSL2({q})", f"psl2:{q}", _PSL2[q])


# -- dihedral groups --------------------------------------------------------------------

def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _crt(residues, moduli):
    x, m = 0, 1
    for r, mod in zip(residues, moduli):
        if mod == 1:
            continue
        # solve x + m t = r (mod mod)
        t = ((r - x) * pow(m, -1, mod)) % mod
        x += m * t
        m *= mod
    return x % m if m > 1 else 0


def crt_exponents(p: int, q: int, r: int, k: int = 1) -> tuple[int, int, int, int]:
    """``alpha_1..alpha_4`` modulo ``n = p q r k`` with the minimal residue choice."""
    moduli = (p, q, r, k)
    systems = ((1, 1, -1, 1), (-1, -2, 1, 1), (1, 1, 1, 1), (1, -1, -2, 1))
    return tuple(_crt([s % m for s, m in zip(sys_, moduli)], moduli) for sys_ in systems)


def dihedral_crt_hole(p: int, q: int, r: int, k: int = 1) -> CertificateBundle:
    """Five reflections forming a 5-hole in ``D_n``, ``n = p q r k``."""
    if len({p, q, r}) != 3 or not all(_is_prime(x) and x % 2 for x in (p, q, r)):
        raise ValueError("p, q, r must be distinct odd primes")
    if k < 1 or k % 2 == 0 or math.gcd(k, p * q * r) != 1:
        raise ValueError("k must be odd, positive and coprime to p*q*r")
    n = p * q * r * k
    alphas = crt_exponents(p, q, r, k)
    exps = [0]
    for a in alphas:
        exps.append((exps[-1] + a) % n)
    names = tuple(("ρι" if e == 1 else f"ρ^{e}ι") if e else "ι" for e in exps[:5])
    return CertificateBundle(f"D_{n} ({p},{q},{r},{k})", f"dihedral:{n}", names)


# -- the remaining explicit examples --------------------------------------------------

_C2C2P3_HOLE = ("x1h1", "x2x3h2", "x1x3h3", "x1^2x2h2", "x2x3h3")


def c2c2_on_p3_example(p: int):
    """The ``C_p^3 x| C_2^2`` group together with its printed 5-hole."""
    G = c2c2_on_p3(p)
    return G, CertificateBundle(f"C_{p}^3:C_2^2", f"c2c2p3:{p}", _C2C2P3_HOLE)


def delta_hole(n: int = 5) -> CertificateBundle:
    """The 5-hole of the subset graph on ``{1..n}``; elements above 5 pad every set."""
    if n < 5:
        raise ValueError("the subset-graph hole needs n >= 5")
    pad = _run(6, n)
    base = ((1, 2, 4), (1, 3, 5), (2, 4, 5), (1, 3, 4), (2, 3, 5))
    verts = tuple("{" + ",".join(str(x) for x in (*b, *pad)) + "}" for b in base)
    return CertificateBundle(f"Delta_{n}", f"delta:{n}", verts)


def y_k3_hole() -> CertificateBundle:
    verts = ("(x1,y1)", "(x2,y3)", "(x3,y1)", "(x4,y2)", "(x3,y3)")
    return CertificateBundle("Y^K3", "tensor:y,k3", verts)


def builtin_bundles(corrected: bool = False) -> list[CertificateBundle]:
    """Every explicit certificate shipped with the library, as published.

    ``corrected=True`` substitutes the repaired odd-degree symmetric-group
    tuples (see :func:`sn_hole`) for the published ones.
    """
    out = [sn_hole(n, corrected=corrected) for n in range(5, 13)]
    out += [an_hole(n) for n in range(5, 13)]
    out += [psl2_hole(7), psl2_hole(11)]
    out.append(c2c2_on_p3_example(3)[1])
    out.append(delta_hole(5))
    out.append(y_k3_hole())
    out += [dihedral_crt_hole(*t) for t in ((3, 5, 7), (3, 5, 11), (3, 7, 11))]
    return out


# -- verification ---------------------------------------------------------------------

def _pairs():
    for i in range(5):
        for j in range(i + 1, 5):
            yield i, j, (j - i) in (1, 4)


def _is_perfect_group(P: PermGroup) -> bool:
    G = from_perm_group(P, cap=None)
    return len(commutator_subgroup(G)) == G.n


def _perm_adjacency(bundle, spec, violations):
    degree = spec.args[0] + 1 if spec.kind == "psl2" else spec.args[0]
    perms = []
    for v in bundle.vertices:
        try:
            perms.append(Permutation.parse(v, degree))
        except (ParseError, ValueError) as exc:
            violations.append(f"vertex {v}: {exc}")
            return None
    target = spec.order()
    if spec.kind == "alt":
        odd = [v for v, p in zip(bundle.vertices, perms) if not p.is_even()]
        if odd:
            violations.append(f"odd permutation {odd[0]} is not in {spec}")
    # the five together must generate a group of the target order, which then
    # is the group the pairs are measured against
    P = PermGroup(perms, degree=degree)
    whole = P.order()
    if whole != target:
        violations.append(f"vertices generate a group of order {whole}, expected {target}")
    elif spec.kind == "psl2" and not _is_perfect_group(P):
        # order alone is not enough: S_8 also holds the soluble AGammaL(1,8) of order 168;
        # the only perfect group of each supported order is PSL_2(q)
        violations.append(f"vertices generate a group of order {whole} that is not perfect")
    return lambda i, j: perm_generates([perms[i], perms[j]], target)


def _table_adjacency(bundle, spec, violations):
    G = spec.build_group()
    idx = []
    for v in bundle.vertices:
        try:
            idx.append(G.index(v))
        except KeyError:
            violations.append(f"{v} is not an element of {spec}")
            return None
    return lambda i, j: is_generating_pair(G, idx[i], idx[j])


def _graph_adjacency(bundle, spec, violations):
    g = spec.build_graph()
    where = {g.label(v): v for v in range(g.n)}
    idx = []
    for v in bundle.vertices:
        if v not in where:
            violations.append(f"{v} is not a vertex of {spec}")
            return None
        idx.append(where[v])
    return lambda i, j: g.adjacent(idx[i], idx[j])


def verify_bundle(bundle: CertificateBundle) -> BundleResult:
    """Check all ten vertex pairs; violations name the offending pair."""
    violations = []
    if len(set(bundle.vertices)) != 5:
        violations.append("vertices are not distinct")
    spec = bundle.spec
    if spec.is_graph:
        adj = _graph_adjacency(bundle, spec, violations)
    elif spec.kind in ("sym", "alt", "psl2"):
        adj = _perm_adjacency(bundle, spec, violations)
    else:
        adj = _table_adjacency(bundle, spec, violations)
    if adj is not None:
        for i, j, want in _pairs():
            if adj(i, j) != want:
                a, b = bundle.vertices[i], bundle.vertices[j]
                what = "should be adjacent" if want else "should not be adjacent"
                violations.append(f"pair ({a}, {b}) {what}")
    return BundleResult(bundle, not violations, violations)
