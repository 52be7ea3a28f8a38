"""Finite groups: Cayley tables, permutation groups, subgroups and lattices."""

from .finite import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    QuotientGroup,
    Subgroup,
    closure,
    commutator_subgroup,
    direct_product,
    element_order,
    from_perm_group,
    generates,
    is_2_generated,
    is_abelian,
    is_cyclic,
    is_generating_pair,
    is_nilpotent,
    is_normal,
    is_soluble,
    prime_signature,
    quotient,
    semidirect_product,
)
from .lattice import DEFAULT_LATTICE_CAP, SubgroupLattice, all_subgroups, frattini
from .permutation import Permutation, PermGroup, perm_generates

__all__ = [
    "DEFAULT_LATTICE_CAP", "DEFAULT_ORDER_CAP", "FiniteGroup", "PermGroup", "Permutation",
    "QuotientGroup", "Subgroup", "SubgroupLattice", "all_subgroups", "closure",
    "commutator_subgroup", "direct_product", "element_order", "frattini", "from_perm_group",
    "generates", "is_2_generated", "is_abelian", "is_cyclic", "is_generating_pair",
    "is_nilpotent", "is_normal", "is_soluble", "perm_generates", "prime_signature",
    "quotient", "semidirect_product",
]
