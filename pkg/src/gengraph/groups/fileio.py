"""Readers for Cayley-table and permutation-generator files.

Cayley table: line 1 holds ``n``; the next ``n`` lines hold ``n`` 0-based
indices each, row ``i`` column ``j`` being the product ``i * j``.  Element 0
must be the identity.

Permutation generators: line 1 holds the degree ``d``; every later line is
one generator as ``d`` 0-based images.

Blank lines and lines starting with ``#`` are ignored.  Errors name the
offending line.
"""

from __future__ import annotations

import numpy as np

from ..exceptions import CapExceededError, InvalidGroupError, ParseError
from .finite import DEFAULT_ORDER_CAP, FiniteGroup
from .permutation import Permutation, PermGroup

__all__ = ["parse_cayley_table", "read_cayley_table", "parse_perm_generators",
           "read_perm_generators", "write_cayley_table"]


def _content_lines(text):
    for i, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield i, s.split()


def _ints(tokens, lineno, source):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {' '.join(tokens)!r}", lineno, source) from None


def parse_cayley_table(text: str, source: str | None = None,
                       cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty Cayley table file", source=source)
    lineno, head = lines[0]
    head = _ints(head, lineno, source)
    if len(head) != 1 or head[0] < 1:
        raise ParseError("first line must be the group order n >= 1", lineno, source)
    n = head[0]
    if cap is not None and n > cap:
        raise CapExceededError("group", n, cap)
    rows = lines[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else lineno
        raise ParseError(f"expected {n} table rows, found {len(rows)}", last, source)
    table = np.empty((n, n), dtype=np.int64)
    for i, (ln, toks) in enumerate(rows):
        vals = _ints(toks, ln, source)
        if len(vals) != n:
            raise ParseError(f"row has {len(vals)} entries, expected {n}", ln, source)
        if min(vals) < 0 or max(vals) >= n:
            raise ParseError(f"entry out of range 0..{n - 1}", ln, source)
        if i == 0 and vals != list(range(n)):
            raise ParseError("element 0 must be the identity (row 0 must be 0..n-1)", ln, source)
        if vals[0] != i:
            raise ParseError("element 0 must be the identity (column 0 must be 0..n-1)", ln, source)
        table[i] = vals
    try:
        return FiniteGroup(table, validate=True, label=source)
    except InvalidGroupError as exc:
        raise ParseError(f"not a group: {exc}", source=source) from None


def read_cayley_table(path, cap: int | None = DEFAULT_ORDER_CAP) -> FiniteGroup:
    with open(path, encoding="utf-8") as fh:
        return parse_cayley_table(fh.read(), source=str(path), cap=cap)


def write_cayley_table(G: FiniteGroup) -> str:
    out = [str(G.n)]
    out.extend(" ".join(str(int(x)) for x in row) for row in G.mul)
    return "\n".join(out) + "\n"


def parse_perm_generators(text: str, source: str | None = None) -> PermGroup:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty permutation file", source=source)
    lineno, head = lines[0]
    head = _ints(head, lineno, source)
    if len(head) != 1 or head[0] < 1:
        raise ParseError("first line must be the degree d >= 1", lineno, source)
    d = head[0]
    gens = []
    for ln, toks in lines[1:]:
        vals = _ints(toks, ln, source)
        if len(vals) != d:
            raise ParseError(f"generator has {len(vals)} images, expected {d}", ln, source)
        if sorted(vals) != list(range(d)):
            raise ParseError(f"images are not a permutation of 0..{d - 1}", ln, source)
        gens.append(Permutation(vals))
    return PermGroup(gens, degree=d, name=source)


def read_perm_generators(path) -> PermGroup:
    with open(path, encoding="utf-8") as fh:
        return parse_perm_generators(fh.read(), source=str(path))
