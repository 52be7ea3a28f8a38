"""Built-in group families, companion graphs and explicit hole certificates."""

from .constructors import (
    alternating,
    alternating_perm,
    c2c2_on_p3,
    cyclic,
    delta_graph,
    dihedral,
    k_complete,
    psl2,
    psl2_order,
    symmetric,
    symmetric_perm,
    y_graph,
)
from .holes import (
    BundleResult,
    CertificateBundle,
    an_hole,
    builtin_bundles,
    c2c2_on_p3_example,
    crt_exponents,
    delta_hole,
    dihedral_crt_hole,
    psl2_hole,
    sn_hole,
    verify_bundle,
    y_k3_hole,
)
from .spec import GroupSpec

__all__ = [
    "BundleResult", "CertificateBundle", "GroupSpec", "alternating", "alternating_perm",
    "an_hole", "builtin_bundles", "c2c2_on_p3", "c2c2_on_p3_example", "crt_exponents", "cyclic",
    "delta_graph", "delta_hole", "dihedral", "dihedral_crt_hole", "k_complete", "psl2",
    "psl2_hole", "psl2_order", "sn_hole", "symmetric", "symmetric_perm", "verify_bundle",
    "y_graph", "y_k3_hole",
]
