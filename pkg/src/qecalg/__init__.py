"""qecalg: group-algebra weight enumerators for quantum error-correcting codes.

Builds nice error bases with Abelian index group Z_m x Z_m, maps any quantum
code (stabilizer generators or explicit orthonormal basis) to an element of
the group algebra over (Z_m x Z_m)^n, computes its MacWilliams-type transform
and the exact / complete / Lee / Hamming weight enumerators, verifies the
enumerator identities, and extracts code dimension, minimum distance, and
purity.
"""

__version__ = "0.1.0"

from .error_basis import (
    GroupElement,
    GroupOrdering,
    PhaseSystem,
    build_pauli_system,
    canonical_ordering,
    character,
    validate_custom_basis,
    verify_kernel_row_sums,
)
from .group_algebra import (
    AlgebraElement,
    TransformResult,
    add,
    double_transform_scaling_check,
    encode_label,
    decode_index,
    multiply,
    random_element,
    scale,
    transform,
    transform_naive,
)
from .enumerators import (
    CompleteDistribution,
    HammingDistribution,
    LeeDistribution,
    complete_distribution,
    composition,
    exact_enumerator_value,
    hamming_distribution,
    lee_composition,
    lee_distribution,
    macwilliams_hamming,
    verify_exact_identity,
    verify_complete_identity,
    verify_lee_identity,
    verify_hamming_identity,
)
from .code_analysis import (
    AnalysisReport,
    BasisVectors,
    CodeSpec,
    StabilizerGenerators,
    analyze,
    associated_element,
    check_cs_ordering,
    dual_element,
    pauli_label,
    random_code,
    symplectic_product,
)
from .reports import CheckReport

__all__ = [
    "__version__",
    "GroupElement", "GroupOrdering", "PhaseSystem",
    "build_pauli_system", "canonical_ordering", "character",
    "validate_custom_basis", "verify_kernel_row_sums",
    "AlgebraElement", "TransformResult", "add", "scale", "multiply",
    "transform", "transform_naive", "double_transform_scaling_check",
    "encode_label", "decode_index", "random_element",
    "CompleteDistribution", "LeeDistribution", "HammingDistribution",
    "composition", "lee_composition", "complete_distribution",
    "lee_distribution", "hamming_distribution", "macwilliams_hamming",
    "exact_enumerator_value",
    "verify_exact_identity", "verify_complete_identity", "verify_lee_identity", "verify_hamming_identity",
    "CodeSpec", "StabilizerGenerators", "BasisVectors", "AnalysisReport",
    "associated_element", "dual_element", "analyze", "check_cs_ordering",
    "random_code", "pauli_label", "symplectic_product",
    "CheckReport",
]
