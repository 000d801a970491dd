"""hullforge: exact GF(p^e) arithmetic, GRS codes with prescribed Galois hull
dimension, and the MDS EAQECC parameters they induce."""

from .errors import HullforgeError
from .ffield import (
    FieldCtx,
    FieldElement,
    GaloisLevel,
    PrimePower,
    discrete_log,
    element_order,
    field_from_json,
    field_new,
    field_to_json,
    frobenius,
    galois_norm_preimage,
    nth_root_of_unity,
    power_preimage,
)
from .linalg import (
    MatFq,
    entrywise_frobenius,
    intersection_basis,
    intersection_dim,
    matmul,
    null_space,
    rank,
    rref,
)
from .grs import (
    GrsSpec,
    LinearCode,
    compute_u,
    encode,
    grs_generator,
    mds_check_minors,
    min_distance_bruteforce,
)
from .hull import (
    HullReport,
    HullWitness,
    galois_dual,
    hull_compute,
    membership_witness_check,
    witness_solve,
)
from .families import Family, FamilyConstruction, FamilyRequest, construct
from .eaqecc import (
    EaqeccParams,
    derive_eaqecc,
    dual_side_eaqecc,
    singleton_verdict,
    theorem_family_emit,
)

__version__ = "0.1.0"

__all__ = [
    "EaqeccParams",
    "Family",
    "FamilyConstruction",
    "FamilyRequest",
    "FieldCtx",
    "FieldElement",
    "GaloisLevel",
    "GrsSpec",
    "HullReport",
    "HullWitness",
    "HullforgeError",
    "LinearCode",
    "MatFq",
    "PrimePower",
    "compute_u",
    "construct",
    "derive_eaqecc",
    "discrete_log",
    "dual_side_eaqecc",
    "element_order",
    "encode",
    "entrywise_frobenius",
    "field_from_json",
    "field_new",
    "field_to_json",
    "frobenius",
    "galois_dual",
    "galois_norm_preimage",
    "grs_generator",
    "hull_compute",
    "intersection_basis",
    "intersection_dim",
    "matmul",
    "mds_check_minors",
    "membership_witness_check",
    "min_distance_bruteforce",
    "null_space",
    "nth_root_of_unity",
    "power_preimage",
    "rank",
    "rref",
    "singleton_verdict",
    "theorem_family_emit",
    "witness_solve",
]
