"""semiring-lab: exhaustive-search laboratory for finite semirings.

Validated Cayley-table algebras, congruence/subobject enumeration,
homomorphism and isomorphism search, and bounded injectivity verdicts
for cyclic and simple semimodules.
"""

from .congruences import (
    Congruence,
    SimplicityReport,
    SubsetMask,
    enumerate_congruences,
    enumerate_congruences_bruteforce,
    enumerate_ideals,
    enumerate_left_ideals,
    enumerate_right_ideals,
    enumerate_subsemimodules,
    is_semisimple,
    jacobson_radical,
    principal_congruence,
    semiring_simplicity,
    simplicity_report,
)
from .constructions import (
    b31,
    b31_retract_counterexample,
    b4_extension_counterexample,
    boolean_lattice_semiring,
    boolean_semiring,
    bourne_congruence,
    chain_lattice_semiring,
    chain_semiring,
    character_semimodule,
    cyclic_ring,
    diamond_congruence,
    direct_product,
    direct_sum,
    ext_semimodule,
    ext_semiring,
    matrix_semiring,
    morita_expand,
    morita_reduce,
    quotient,
    rho_congruence,
    sigma_congruence,
    trivial_semiring,
    zerosumfree_decomposition,
)
from .core import (
    CliffordDecomposition,
    ElementClassReport,
    FiniteSemimodule,
    FiniteSemiring,
    PropertyFlags,
    classify_semiring,
    clifford_decomposition,
    element_classes,
    is_ring,
    opposite,
    regular_semimodule,
    submodule,
    validate_semimodule,
    validate_semiring,
)
from .errors import (
    ActionAxiomFailure,
    AlgebraError,
    IdentityFailure,
    IncompatiblePartition,
    NonAssociative,
    NonCommutativeAdd,
    NotACongruence,
    NotAdditivelyIdempotent,
    NotAdditivelyRegular,
    NotASubsemimodule,
    NotDistributive,
    ParseError,
    SizeCapExceeded,
    ZeroNotAbsorbing,
)
from .fileformat import load_algebra, parse_algebra, serialize_semimodule, serialize_semiring
from .homs import (
    Homomorphism,
    are_isomorphic,
    dedupe_by_isomorphism,
    embeddings,
    enumerate_cyclic_semimodules,
    enumerate_homs,
    enumerate_semimodules,
    extension_exists,
    find_extension,
    hom_violation,
    is_essential_extension,
    is_retract,
    iter_semimodules,
)
from .injectivity import (
    InjectivityWitness,
    Verdict,
    VerdictStatus,
    check_witness,
    ci_verdict,
    injectivity_verdict,
    v_verdict,
)
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"
