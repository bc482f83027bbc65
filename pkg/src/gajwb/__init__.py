"""Exact-arithmetic workbench for commutative nonassociative algebras.

Checks the generalized almost-Jordan identity, computes Peirce decompositions
of algebras and modules relative to an idempotent, validates representations
through split null extensions, and decides module irreducibility at desk
scale, all over the rationals or a prime field F_p (p > 3) with no rounding
anywhere.
"""

from .algebra import (
    Algebra,
    Element,
    GajParams,
    fourth_power_defect,
    is_idempotent,
    multiply,
    principal_power,
    right_mult_operator,
)
from .corpus import builtin_corpus, corpus_entry, corpus_names
from .document import WorkbenchDocument, document_to_json, emit_document, parse_document
from .errors import (
    BaseAlgebraNotGaj,
    ClassificationFailed,
    DocumentError,
    HypothesisNotMet,
    IdentityFails,
    InvalidParameters,
    MinimalPolynomialViolation,
    ModuleNotM1,
    NotIdempotent,
    RepresentationInvalid,
    WorkbenchError,
)
from .fields import RATIONALS, FieldError, FpElement, PrimeField, Rationals, field_from_spec
from .identity import (
    MultilinearForm,
    ParameterSpace,
    check_gaj_identity,
    gaj_defect,
    gaj_identity_form,
    linearize_identity,
    solve_parameter_space,
)
from .irreducibility import (
    Certificate,
    Envelope,
    IrreducibilityVerdict,
    ModuleClassification,
    Status,
    classify_irreducible,
    exhaustive_invariant_subspace,
    generate_envelope,
    invariant_under_all,
    is_irreducible,
    iter_subspaces,
    spin,
)
from .linalg import (
    Matrix,
    Subspace,
    evaluate_polynomial_at,
    kernel,
    minimal_polynomial,
)
from .peirce import (
    Case,
    ParameterCase,
    PeirceDecomposition,
    RelationCheck,
    RelationReport,
    classify_params,
    peirce_decompose,
    verify_peirce_relations,
)
from .poly import Poly, PolyFactor, factor_squarefree_or_irreducible
from .representation import (
    ModuleDecomposition,
    OperatorRelationCheck,
    Representation,
    SplitNullExtension,
    check_associative_module,
    check_lambda_relations,
    check_rep_via_extension,
    check_representation,
    module_peirce,
    rep_defect_1,
    rep_defect_2,
    split_null_extension,
    verify_action_relations,
    verify_linearized_consequences,
)
from .verify import TableRow, theorem_table

__version__ = "0.1.0"
