"""Exact-arithmetic engine for Galilean (super)conformal algebras."""
from .builders import (
    BuildSpec, build, build_exotic_super, build_gca, build_n1_super, build_standard_super,
    check_spec, d_weight, d_weights, ideal_generators, legal_specs, named_subalgebras,
    r_charges,
)
from .coefficients import CoefficientKind, coeff
from .cohomology import CentralAnsatz, Redefinition, TrivialityCertificate, build_constraints, solve_and_certify
from .core import (
    AlgebraError, Central, Element, Family, Generator, HalfInt, Superalgebra, Violation,
    ViolationReport, bracket, jacobi_triple, structure_constants, verify_antisymmetry,
    verify_subalgebra_closure, verify_super_jacobi, verify_weight_grading, with_constant,
)
from .oscillator import IdealAlgebra, LaurentScalar, OscExpr, graded_commutator, multiply
from .realizations import (
    OscillatorBasis, Realization, build_bf_hamiltonian, build_oscillator_basis,
    canonical_relations, fermion_sign, hamiltonian_offset, hamiltonian_residual, realize,
    verify_realization,
)
from .serialization import export_algebra, import_algebra

__all__ = [
    "AlgebraError", "BuildSpec", "Central", "CentralAnsatz", "CoefficientKind", "Element",
    "Family", "Generator", "HalfInt", "IdealAlgebra", "LaurentScalar", "OscExpr",
    "OscillatorBasis", "Realization", "Redefinition", "Superalgebra", "TrivialityCertificate",
    "Violation", "ViolationReport", "bracket", "build", "build_bf_hamiltonian",
    "build_constraints", "build_exotic_super", "build_gca", "build_n1_super",
    "build_oscillator_basis", "build_standard_super", "canonical_relations", "check_spec",
    "coeff", "d_weight", "d_weights", "export_algebra", "fermion_sign", "graded_commutator",
    "hamiltonian_offset", "hamiltonian_residual", "ideal_generators", "import_algebra",
    "jacobi_triple", "legal_specs", "multiply", "named_subalgebras", "r_charges", "realize",
    "solve_and_certify", "structure_constants", "verify_antisymmetry", "verify_realization",
    "verify_subalgebra_closure", "verify_super_jacobi", "verify_weight_grading",
    "with_constant",
]
