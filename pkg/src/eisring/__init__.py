"""eisring: exact arithmetic and constellation analysis over Z[rho] quotients.

The package covers the ring of Eisenstein integers (arithmetic, division,
gcd, prime structure), residue systems of Z[rho]/<eta> with the reduce/lift
pair between grid and norm-minimal representatives, hexagonal and Euclidean
metrics, additive-subgroup set partitioning with exhaustively certified
minimum distances, linear codes and field extensions over prime residue
fields, and Gaussian-integer constellations for side-by-side average-energy
comparison.
"""

from .eisenstein import (
    BETA,
    ONE,
    RHO,
    UNITS,
    ZERO,
    Eisenstein,
    Factorization,
    PrimeKind,
    canonical_associate,
    classify_prime,
    euclid_divmod,
    factorize,
    gcd,
    ideal_member,
    is_primitive,
    primitivity_structure_check,
)
from .gaussian import Gaussian, g_mod_reduce, g_residue_system, mannheim_weight
from .metrics import (
    hex_distance,
    hex_weight,
    min_class_hex_weight,
    sq_euclid_distance,
    vector_hex_distance,
    vector_sq_euclid_distance,
)
from .quotient import (
    Modulus,
    ResidueSystem,
    class_equal,
    decompose,
    isomorphism_kind,
    mu_reduce,
    pi_lift,
    residue_system,
    ring_op_mod,
)
from .partition import (
    PartitionNode,
    recursive_partition,
    subgroup_nonprimitive,
    subgroup_primitive,
    subset_min_distances,
)
from .constellation import (
    Constellation,
    EnergyReport,
    build,
    compare_table,
    energy_report,
)
from .codes import (
    EisensteinField,
    LinearCode,
    code_min_distance,
    ext_field_build,
    is_group_code,
    mult_group_order_check,
    prime_field,
    span,
)

__version__ = "0.1.0"

__all__ = [
    "Eisenstein", "Gaussian", "Modulus", "ResidueSystem", "PartitionNode",
    "Constellation", "EnergyReport", "EisensteinField", "LinearCode",
    "PrimeKind", "Factorization",
    "ZERO", "ONE", "RHO", "BETA", "UNITS",
    "canonical_associate", "euclid_divmod", "gcd", "is_primitive",
    "classify_prime", "factorize", "primitivity_structure_check",
    "ideal_member",
    "g_mod_reduce", "g_residue_system", "mannheim_weight",
    "hex_weight", "hex_distance", "sq_euclid_distance",
    "vector_hex_distance", "vector_sq_euclid_distance", "min_class_hex_weight",
    "decompose", "residue_system", "mu_reduce", "pi_lift", "class_equal",
    "ring_op_mod", "isomorphism_kind",
    "subgroup_primitive", "subgroup_nonprimitive", "recursive_partition",
    "subset_min_distances",
    "build", "energy_report", "compare_table",
    "span", "is_group_code", "code_min_distance", "prime_field",
    "ext_field_build", "mult_group_order_check",
]
