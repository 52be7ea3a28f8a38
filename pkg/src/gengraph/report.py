"""Property analysis of a group or graph and its JSON report.

Reports use element names (vertex labels) in every certificate so they read
without an index table, sort their keys, and contain no timings, which makes
them byte-identical across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .exceptions import CapExceededError, InvalidCertificateError, LatticeTooLargeError
from .families.spec import GroupSpec
from .gamma import GeneratingGraph, build_gamma, gamma_perfect_verdict
from .graphs.certificates import (
    Cotree,
    EliminationOrdering,
    HoleCertificate,
    InducedCertificate,
    PathCertificate,
    SplitPartition,
    verify_certificate,
)
from .graphs.graph import Graph
from .graphs.perfect import PerfectVerdict, perfect_verdict
from .graphs.recognition import Verdict, is_c4_free, is_chordal, is_cograph, is_split
from .groups.finite import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    is_2_generated,
    is_abelian,
    is_cyclic,
    is_nilpotent,
    is_soluble,
    prime_signature,
)
from .groups.lattice import DEFAULT_LATTICE_CAP, all_subgroups, frattini

__all__ = [
    "PROPERTIES",
    "SCHEMA_VERSION",
    "AUTO_FULL_MAX",
    "AUTO_LIMIT",
    "PropertyReport",
    "analyze_graph",
    "analyze_target",
    "parse_hole_limit",
    "certificate_to_json",
    "certificate_from_json",
    "report_to_json",
    "dumps_report",
]

SCHEMA_VERSION = 1
PROPERTIES = ("cograph", "perfect", "chordal", "split", "c4free")
DEFAULT_HOLE_LIMIT = 15
# "auto": full search when the reduced graph is this small, else a bounded one
AUTO_FULL_MAX = 20
AUTO_LIMIT = 9


def parse_hole_limit(text) -> int | str | None:
    """``"full"`` -> ``None``; ``"auto"`` stays; otherwise an odd integer >= 5."""
    if text is None or text == "full":
        return None
    if text == "auto":
        return "auto"
    try:
        value = int(text)
    except (TypeError, ValueError):
        raise ValueError(f"hole limit must be an odd integer, 'full' or 'auto', got {text!r}") from None
    if value < 5 or value % 2 == 0:
        raise ValueError(f"hole limit must be odd and at least 5, got {value}")
    return value


@dataclass
class PropertyReport:
    """Verdicts for the requested properties; absent ones stay ``None``."""

    graph: Graph
    cograph: Verdict | None = None
    perfect: PerfectVerdict | None = None
    chordal: Verdict | None = None
    split: Verdict | None = None
    c4free: Verdict | None = None
    hole_limit: int | str | None = None
    reduced_vertices: int | None = None
    group_info: dict = field(default_factory=dict)
    target: str | None = None

    def certificates(self):
        """Every certificate in the report, for re-verification."""
        for v in (self.cograph, self.chordal, self.split, self.c4free):
            if v is not None and v.certificate is not None:
                yield v.certificate
        if self.perfect is not None and self.perfect.witness is not None:
            yield self.perfect.witness

    def all_certificates_verify(self) -> bool:
        return all(verify_certificate(self.graph, c) for c in self.certificates())


def _perfect(g: Graph, group: FiniteGroup | None, hole_limit, lattice_cap, lattice):
    def run(limit):
        if group is not None and isinstance(g, GeneratingGraph):
            if lattice is False:
                return gamma_perfect_verdict(group, g, limit, use_lattice=False)
            return gamma_perfect_verdict(group, g, limit, lattice=lattice, lattice_cap=lattice_cap)
        return perfect_verdict(g, limit)

    if hole_limit != "auto":
        return run(hole_limit)
    verdict, trace = run(AUTO_LIMIT)
    if verdict.witness is None and verdict.searched_vertices <= AUTO_FULL_MAX:
        verdict, trace = run(None)
    return verdict, trace


def analyze_graph(g: Graph, props=PROPERTIES, hole_limit=DEFAULT_HOLE_LIMIT,
                  group: FiniteGroup | None = None,
                  lattice_cap: int | None = DEFAULT_LATTICE_CAP,
                  lattice=None) -> PropertyReport:
    """Evaluate ``props`` on ``g``.

    With ``group`` given, ``g`` must be its generating graph and the
    perfectness search uses the group-aware pruning.  ``lattice`` may carry a
    precomputed subgroup lattice, or ``False`` to skip the lattice rule.
    """
    unknown = set(props) - set(PROPERTIES)
    if unknown:
        raise ValueError(f"unknown properties: {', '.join(sorted(unknown))}")
    hole_limit = parse_hole_limit(hole_limit)
    rep = PropertyReport(g, hole_limit=hole_limit)
    if "cograph" in props:
        rep.cograph = is_cograph(g)
    if "perfect" in props:
        rep.perfect, _ = _perfect(g, group, hole_limit, lattice_cap, lattice)
        rep.reduced_vertices = rep.perfect.searched_vertices
    if "chordal" in props:
        rep.chordal = is_chordal(g)
    if "split" in props:
        rep.split = is_split(g)
    if "c4free" in props:
        rep.c4free = is_c4_free(g)
    return rep


def group_summary(G: FiniteGroup, lattice_cap: int | None = DEFAULT_LATTICE_CAP,
                  lattice=None) -> dict:
    info = {
        "order": G.n,
        "abelian": is_abelian(G),
        "cyclic": is_cyclic(G),
        "nilpotent": is_nilpotent(G),
        "soluble": is_soluble(G),
        "two_generated": is_2_generated(G),
        "prime_signature": prime_signature(G.n),
    }
    try:
        if lattice is False and not is_abelian(G):
            raise LatticeTooLargeError(G.n, lattice_cap)
        F = frattini(G, lattice or None, cap=lattice_cap)
        info["frattini_order"] = len(F)
        info["frattini_index"] = G.n // len(F)
        info["frattini_index_signature"] = prime_signature(G.n // len(F))
    except CapExceededError:
        info["frattini_order"] = None
        info["frattini_index"] = None
        info["frattini_index_signature"] = None
    return info


def analyze_target(spec: GroupSpec | str, props=PROPERTIES, hole_limit=DEFAULT_HOLE_LIMIT,
                   cap_order: int | None = DEFAULT_ORDER_CAP,
                   cap_lattice: int | None = DEFAULT_LATTICE_CAP) -> PropertyReport:
    """Build the group (then its generating graph) or graph named by ``spec``
    and analyze it."""
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    if spec.is_graph:
        g = spec.build_graph()
        rep = analyze_graph(g, props, hole_limit)
    else:
        G = spec.build_group(cap=cap_order)
        g = build_gamma(G, cap=cap_order, source=str(spec))
        try:
            lattice = all_subgroups(G, cap=cap_lattice)
        except LatticeTooLargeError:
            lattice = False
        rep = analyze_graph(g, props, hole_limit, group=G, lattice_cap=cap_lattice,
                            lattice=lattice)
        rep.group_info = group_summary(G, cap_lattice, lattice)
    rep.target = str(spec)
    return rep


# -- JSON ---------------------------------------------------------------------------------

def certificate_to_json(g: Graph, cert) -> dict | None:
    def names(vs):
        return [g.label(v) for v in vs]

    if cert is None:
        return None
    if isinstance(cert, HoleCertificate):
        return {"type": cert.kind, "vertices": names(cert.vertices)}
    if isinstance(cert, PathCertificate):
        return {"type": f"P{len(cert.vertices)}", "vertices": names(cert.vertices)}
    if isinstance(cert, InducedCertificate):
        return {"type": cert.kind, "vertices": names(cert.vertices)}
    if isinstance(cert, SplitPartition):
        return {"type": "partition", "clique": names(cert.clique),
                "independent": names(cert.independent)}
    if isinstance(cert, EliminationOrdering):
        return {"type": "peo", "order": names(cert.order)}
    if isinstance(cert, Cotree):
        def tree(node):
            if node.op == "leaf":
                return g.label(node.vertex)
            return {node.op: [tree(c) for c in node.children]}
        return {"type": "cotree", "tree": tree(cert)}
    raise TypeError(f"unsupported certificate {type(cert).__name__}")


def certificate_from_json(g: Graph, data: dict):
    """Inverse of :func:`certificate_to_json` against the re-built graph."""
    index = {g.label(v): v for v in range(g.n)}

    def ids(names):
        try:
            return tuple(index[str(x)] for x in names)
        except KeyError as exc:
            raise InvalidCertificateError(f"unknown vertex {exc.args[0]!r}") from None

    kind = data.get("type")
    if kind in ("hole", "antihole"):
        return HoleCertificate(ids(data["vertices"]), kind)
    if kind in ("C4", "C5", "2K2", "Y", "K3"):
        return InducedCertificate(kind, ids(data["vertices"]))
    if kind and kind.startswith("P") and kind[1:].isdigit():
        return PathCertificate(ids(data["vertices"]))
    if kind == "partition":
        return SplitPartition(ids(data["clique"]), ids(data["independent"]))
    if kind == "peo":
        return EliminationOrdering(ids(data["order"]))
    if kind == "cotree":
        def tree(node):
            if isinstance(node, dict):
                (op, kids), = node.items()
                return Cotree(op, None, tuple(tree(k) for k in kids))
            return Cotree("leaf", ids([node])[0])
        return tree(data["tree"])
    raise InvalidCertificateError(f"unknown certificate type {kind!r}")


def _verdict_json(g, v: Verdict | None) -> dict | None:
    if v is None:
        return None
    return {"value": bool(v.value), "certificate": certificate_to_json(g, v.certificate)}


def _perfect_json(g, p: PerfectVerdict | None, hole_limit) -> dict | None:
    if p is None:
        return None
    return {
        "status": p.status,
        "perfect": p.is_perfect,
        "hole_limit": "full" if hole_limit is None else hole_limit,
        "search_limit": p.search_limit,
        "searched_vertices": p.searched_vertices,
        "witness": certificate_to_json(g, p.witness),
    }


def report_to_json(rep: PropertyReport) -> dict:
    g = rep.graph
    props: dict[str, Any] = {}
    for name in ("cograph", "chordal", "split", "c4free"):
        val = getattr(rep, name)
        if val is not None:
            props[name] = _verdict_json(g, val)
    if rep.perfect is not None:
        props["perfect"] = _perfect_json(g, rep.perfect, rep.hole_limit)
    out = {
        "schema": SCHEMA_VERSION,
        "target": rep.target,
        "graph": {
            "vertices": g.n,
            "edges": g.number_of_edges(),
            "isolated": len(g.isolated()),
            "reduced_vertices": rep.reduced_vertices,
        },
        "properties": props,
    }
    if rep.group_info:
        out["group"] = rep.group_info
    return out


def dumps_report(rep: PropertyReport) -> str:
    return json.dumps(report_to_json(rep), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
