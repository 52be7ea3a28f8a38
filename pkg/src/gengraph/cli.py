"""Command line front end: ``gengraph analyze | verify | sweep``.

Exit codes: 0 success, 2 parse error, 3 cap exceeded, 4 a bundle failed
verification, 5 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .exceptions import CapExceededError, GenGraphError, ParseError
from .families.catalogue import FAMILIES, builtin_groups, family_spec
from .families.holes import CertificateBundle, builtin_bundles, verify_bundle
from .families.spec import GroupSpec
from .groups.finite import DEFAULT_ORDER_CAP
from .groups.lattice import DEFAULT_LATTICE_CAP
from .report import (
    DEFAULT_HOLE_LIMIT,
    PROPERTIES,
    analyze_target,
    certificate_to_json,
    dumps_report,
    parse_hole_limit,
)

__all__ = ["main", "build_parser", "parse_range", "sweep_rows", "EXIT_OK", "EXIT_PARSE",
           "EXIT_CAP", "EXIT_VERIFY", "EXIT_INTERNAL"]

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_VERIFY, EXIT_INTERNAL = 0, 2, 3, 4, 5


def parse_range(text: str) -> list[int]:
    """``"3..40"``, ``"6,10,15"`` or a mix such as ``"3..9,45,105"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("..")
        try:
            if sep:
                a, b = int(lo), int(hi)
                if b < a:
                    raise ParseError(f"empty range {part!r}")
                out.extend(range(a, b + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise ParseError(f"bad range element {part!r}") from None
    if not out:
        raise ParseError("empty range")
    return sorted(set(out))


def parse_props(text: str) -> tuple[str, ...]:
    props = tuple(p.strip().lower() for p in text.split(",") if p.strip())
    bad = [p for p in props if p not in PROPERTIES]
    if bad or not props:
        raise ParseError(f"unknown properties {bad}; choose from {', '.join(PROPERTIES)}")
    return props


def _hole_limit(text):
    try:
        return parse_hole_limit(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _cap(text: str) -> int | None:
    if text.lower() == "none":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cap must be a positive integer or 'none', got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("cap must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gengraph",
        description="Generating graphs of finite groups and their forbidden-subgraph properties.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--cap-order", type=_cap, default=DEFAULT_ORDER_CAP,
                      help=f"largest group order to materialize (default {DEFAULT_ORDER_CAP})")
    caps.add_argument("--cap-lattice", type=_cap, default=DEFAULT_LATTICE_CAP,
                      help=f"largest order for subgroup-lattice work (default {DEFAULT_LATTICE_CAP})")
    limit = argparse.ArgumentParser(add_help=False)
    limit.add_argument("--hole-limit", default=str(DEFAULT_HOLE_LIMIT),
                       help="longest odd hole/antihole searched: an odd integer >= 5, 'full' "
                            "or 'auto' (full when the reduced graph has at most 20 vertices, "
                            f"else 9); default {DEFAULT_HOLE_LIMIT}")

    an = sub.add_parser("analyze", parents=[caps, limit], help="analyze one group or graph")
    an.add_argument("--group", required=True, help="target spec, e.g. dihedral:105 or delta:5")
    an.add_argument("--props", default=",".join(PROPERTIES),
                    help="comma-separated subset of " + ",".join(PROPERTIES))
    an.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    an.add_argument("--dot", metavar="PATH", help="write the graph in DOT format")

    ve = sub.add_parser("verify", help="verify certificate bundles")
    ve.add_argument("bundles", nargs="*", metavar="FILE",
                    help="JSON file with a bundle or a list of bundles (default: built-ins)")
    ve.add_argument("--only", metavar="NAME", action="append",
                    help="restrict to bundles with this exact name (repeatable)")
    ve.add_argument("--corrected", action="store_true",
                    help="use the repaired odd-degree symmetric-group tuples")
    ve.add_argument("--list", action="store_true", help="list the bundles and exit")

    sw = sub.add_parser("sweep", parents=[caps, limit], help="tabulate a family as CSV")
    sw.add_argument("--family", required=True, choices=FAMILIES)
    sw.add_argument("--range", required=True, dest="values",
                    help="parameters such as 3..40 or 6,10,15; for 'builtin' the group orders")
    sw.add_argument("--props", default="perfect")
    sw.add_argument("--out", metavar="PATH", help="CSV destination (default stdout)")
    sw.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    return parser


# -- analyze ------------------------------------------------------------------------------

def _write_text(path: str, text: str, stdout) -> None:
    if path == "-":
        stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_analyze(args, stdout) -> int:
    props = parse_props(args.props)
    limit = _hole_limit(args.hole_limit)
    spec = GroupSpec.parse(args.group)
    rep = analyze_target(spec, props, limit, cap_order=args.cap_order, cap_lattice=args.cap_lattice)
    text = dumps_report(rep)
    if args.dot:
        _write_text(args.dot, rep.graph.to_dot(name=_dot_name(str(spec))), stdout)
    if args.json and args.json != "-":
        _write_text(args.json, text, stdout)
        for line in _summary_lines(rep):
            print(line, file=stdout)
    else:
        stdout.write(text)
    return EXIT_OK


def _dot_name(s: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in s)


def _summary_lines(rep):
    yield f"{rep.target}: {rep.graph.n} vertices, {rep.graph.number_of_edges()} edges"
    for name in PROPERTIES:
        v = getattr(rep, name)
        if v is None:
            continue
        if name == "perfect":
            yield f"perfect: {v}"
        else:
            yield f"{name}: {str(bool(v.value)).lower()}"


# -- verify -------------------------------------------------------------------------------

def _load_bundles(paths) -> list[CertificateBundle]:
    out = []
    for path in paths:
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, path) from None
        items = data if isinstance(data, list) else [data]
        for item in items:
            if not isinstance(item, dict):
                raise ParseError("bundle entries must be JSON objects", source=path)
            out.append(CertificateBundle.from_json(item))
    return out


def cmd_verify(args, stdout) -> int:
    bundles = _load_bundles(args.bundles) if args.bundles else builtin_bundles(args.corrected)
    if args.only:
        wanted = set(args.only)
        bundles = [b for b in bundles if b.name in wanted]
        missing = wanted - {b.name for b in bundles}
        if missing:
            raise ParseError(f"no bundle named {', '.join(sorted(missing))}")
    if args.list:
        for b in bundles:
            print(f"{b.name}\t{b.target}\t" + " ".join(b.vertices), file=stdout)
        return EXIT_OK
    failed = 0
    for b in bundles:
        try:
            result = verify_bundle(b)
            line = result.summary()
            failed += not result.ok
        except (GenGraphError, ValueError) as exc:
            line = f"FAIL {b.name}: {exc}"
            failed += 1
        print(line, file=stdout)
    print(f"{len(bundles) - failed}/{len(bundles)} bundles passed", file=stdout)
    return EXIT_VERIFY if failed else EXIT_OK


# -- sweep --------------------------------------------------------------------------------

def _witness_summary(graph, cert) -> str:
    data = certificate_to_json(graph, cert)
    if data is None:
        return ""
    if "vertices" in data:
        return f"{data['type']}[{' '.join(data['vertices'])}]"
    if data["type"] == "partition":
        return f"clique[{' '.join(data['clique'])}] independent[{' '.join(data['independent'])}]"
    if data["type"] == "peo":
        return f"peo[{' '.join(data['order'])}]"
    return data["type"]


def _sweep_row(task) -> dict:
    family, parameter, target, props, limit, cap_order, cap_lattice = task
    row = {"family": family, "parameter": parameter, "target": target}
    start = time.perf_counter()
    try:
        spec = GroupSpec.parse(target)
        row["order"] = spec.order() if not spec.is_graph else ""
        rep = analyze_target(spec, props, limit, cap_order=cap_order, cap_lattice=cap_lattice)
        if spec.is_graph:
            row["order"] = ""
        else:
            row["order"] = rep.group_info["order"]
            row["two_generated"] = str(rep.group_info["two_generated"]).lower()
        for p in props:
            v = getattr(rep, p)
            if p == "perfect":
                row[p] = v.status
                row[f"{p}_witness"] = _witness_summary(rep.graph, v.witness)
            else:
                row[p] = str(bool(v.value)).lower()
                row[f"{p}_witness"] = "" if v.value else _witness_summary(rep.graph, v.certificate)
        row["reduced_vertices"] = "" if rep.reduced_vertices is None else rep.reduced_vertices
        row["error"] = ""
    except (GenGraphError, ValueError, MemoryError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    row["seconds"] = f"{time.perf_counter() - start:.3f}"
    return row


def sweep_columns(props) -> list[str]:
    cols = ["family", "parameter", "target", "order", "two_generated"]
    for p in props:
        cols += [p, f"{p}_witness"]
    return cols + ["reduced_vertices", "seconds", "error"]


def sweep_tasks(family: str, values, props, limit, cap_order, cap_lattice) -> list[tuple]:
    if family == "builtin":
        specs = builtin_groups(max(values), min(values))
        specs = [s for s in specs if s.order() in set(values)]
        return [(family, s.order(), str(s), props, limit, cap_order, cap_lattice) for s in specs]
    tasks = []
    for n in values:
        try:
            target = str(family_spec(family, n))
        except ParseError:
            target = f"{family}:{n}"  # reported as a row error
        tasks.append((family, n, target, props, limit, cap_order, cap_lattice))
    return tasks


def sweep_rows(tasks, jobs: int = 1) -> list[dict]:
    """Rows in task order regardless of which worker finishes first."""
    if jobs <= 1 or len(tasks) <= 1:
        return [_sweep_row(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_sweep_row, tasks))


def cmd_sweep(args, stdout) -> int:
    props = parse_props(args.props)
    limit = _hole_limit(args.hole_limit)
    values = parse_range(args.values)
    if args.jobs < 1:
        raise ParseError("--jobs must be at least 1")
    tasks = sweep_tasks(args.family, values, props, limit, args.cap_order, args.cap_lattice)
    rows = sweep_rows(tasks, args.jobs)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=sweep_columns(props), restval="", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _write_text(args.out or "-", buf.getvalue(), stdout)
    return EXIT_OK


# -- entry point --------------------------------------------------------------------------

_COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, stdout)
    except ParseError as exc:
        print(f"gengraph: parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"gengraph: {exc}", file=stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"gengraph: {exc}", file=stderr)
        return EXIT_PARSE
    except Exception as exc:  # noqa: BLE001 - anything else is a bug worth a distinct code
        print(f"gengraph: internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
