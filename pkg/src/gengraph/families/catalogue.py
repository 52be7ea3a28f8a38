"""Built-in group catalogue for sweeps over small orders."""

from __future__ import annotations

from .spec import GroupSpec

__all__ = ["builtin_groups", "FAMILIES", "family_spec"]

FAMILIES = ("cyclic", "dihedral", "sym", "alt", "psl2", "c2c2p3", "delta", "builtin")


def family_spec(family: str, n: int) -> GroupSpec:
    """``family:n`` as a spec; ``builtin`` is not indexed this way."""
    if family == "builtin":
        raise ValueError("the builtin family is enumerated by order, not indexed")
    return GroupSpec.parse(f"{family}:{n}")


def builtin_groups(max_order: int, min_order: int = 1) -> list[GroupSpec]:
    """Every built-in group with ``min_order <= |G| <= max_order``.

    Cyclic groups, dihedral groups, direct products ``C_a x C_b`` with
    ``a | b`` (the invariant-factor form, so each abelian group of rank two
    appears once), ``C_2^3``, ``D_n x C_m``, and ``S_3``, ``S_4``, ``A_4``.
    Some groups appear under two names (``S_3`` and ``D_3``); sweeps keep
    both rows.  Sorted by order, then by spec string.
    """
    out: list[GroupSpec] = []
    for n in range(1, max_order + 1):
        out.append(GroupSpec("cyclic", (n,)))
    for n in range(3, max_order // 2 + 1):
        out.append(GroupSpec("dihedral", (n,)))
    for a in range(2, max_order + 1):
        for b in range(a, max_order // a + 1):
            if b % a == 0:
                out.append(GroupSpec("product", (GroupSpec("cyclic", (a,)), GroupSpec("cyclic", (b,)))))
    if max_order >= 8:
        c2 = GroupSpec("cyclic", (2,))
        out.append(GroupSpec("product", (c2, c2, c2)))
    for n in range(3, max_order // 4 + 1):
        for m in range(2, max_order // (2 * n) + 1):
            out.append(GroupSpec("product", (GroupSpec("dihedral", (n,)), GroupSpec("cyclic", (m,)))))
    out += [GroupSpec("sym", (3,)), GroupSpec("sym", (4,)), GroupSpec("alt", (4,))]
    out = [s for s in out if min_order <= s.order() <= max_order]
    return sorted(out, key=lambda s: (s.order(), str(s)))
