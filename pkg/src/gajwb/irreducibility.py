"""Submodule generation, invariant-subspace search, and irreducibility decisions.

A subspace N of the module is a submodule exactly when every acting operator
maps it into itself.  `spin` closes a seed set under the action; the
irreducibility decision ladder combines spinning, minimal-polynomial kernels,
a Burnside certificate from the generated operator algebra, a complete
dimension-2 decision over the rationals, and exhaustive subspace enumeration
over small prime fields.  Verdicts are deterministic: no randomness anywhere.
"""

import enum
from dataclasses import dataclass
from itertools import combinations, product

from .algebra import Element, GajParams
from .errors import ClassificationFailed, WorkbenchError
from .fields import Field, FpElement, PrimeField, Rationals
from .linalg import (
    Matrix,
    Subspace,
    evaluate_polynomial_at,
    kernel,
    minimal_polynomial,
    unit_vector,
)
from .peirce import Case
from .poly import factor_squarefree_or_irreducible, roots
from .representation import ModuleDecomposition, Representation, module_peirce


class Status(enum.Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    INCONCLUSIVE = "Inconclusive"


class Certificate(enum.Enum):
    DIM_ONE = "DimOne"
    NO_RATIONAL_EIGENVALUE_DIM2 = "NoRationalEigenvalueDim2"
    FULL_ENVELOPE = "FullEnvelope"
    EXHAUSTIVE_FINITE_FIELD = "ExhaustiveFiniteField"
    SPIN_SEARCH_EXHAUSTED = "SpinSearchExhausted"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """Decision outcome; a Reducible verdict carries a verified witness."""

    status: Status
    witness: Subspace | None = None
    certificate: Certificate | None = None

    def __repr__(self):
        if self.status is Status.REDUCIBLE:
            return f"IrreducibilityVerdict(Reducible, witness dim {self.witness.dim})"
        return f"IrreducibilityVerdict({self.status.value}, {self.certificate.value})"


def invariant_under_all(r: Representation, sub: Subspace) -> bool:
    """Whether every basis operator maps the subspace into itself."""
    for g in r.matrices:
        for v in sub.basis:
            if not sub.contains_vector(g.apply(v)):
                return False
    return True


def spin(r: Representation, seed_vectors) -> Subspace:
    """Smallest subspace containing the seeds and invariant under all operators."""
    field = r.algebra.field
    m = r.module_dim
    current = Subspace.span(field, m, [tuple(field.scalar(x) for x in v) for v in seed_vectors])
    while True:
        images = [g.apply(v) for v in current.basis for g in r.matrices]
        grown = current.sum(Subspace.span(field, m, images))
        if grown.dim == current.dim:
            return current
        current = grown


@dataclass(frozen=True)
class Envelope:
    """The associative operator algebra generated by the acting matrices.

    Spanned by all nonempty products of the generators; full dimension m^2
    forces irreducibility (a Burnside-style certificate, valid over any
    exact field here because density gives the whole endomorphism ring in
    finite dimension).
    """

    field: Field
    module_dim: int
    subspace: Subspace
    basis_matrices: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def is_full(self) -> bool:
        return self.dim == self.module_dim**2


def generate_envelope(r: Representation) -> Envelope:
    field = r.algebra.field
    m = r.module_dim
    span = Subspace.zero(field, m * m)
    mats = []
    queue = list(r.matrices)
    while queue:
        w = queue.pop(0)
        flat = w.flatten()
        if span.contains_vector(flat):
            continue
        span = span.sum(Subspace.span(field, m * m, [flat]))
        mats.append(w)
        for g in r.matrices:
            queue.append(g * w)
    return Envelope(field, m, span, tuple(mats))


def _deterministic_probe_matrices(r: Representation) -> list[Matrix]:
    """Generators, their pairwise products, and pairwise sums, in a fixed order."""
    gens = list(r.matrices)
    out = list(gens)
    for a in gens:
        for b in gens:
            out.append(a * b)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            out.append(gens[i] + gens[j])
    return out


def _field_elements(field: PrimeField):
    return [FpElement(v, field.p) for v in range(field.p)]


def iter_subspaces(field: PrimeField, n: int, k: int):
    """All k-dimensional subspaces of F_p^n, each exactly once, in a fixed order.

    Enumerates reduced-echelon bases directly: choose pivot columns, then fill
    the free positions with every residue combination.
    """
    residues = _field_elements(field)
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free_positions = [
            (row, col)
            for row, p in enumerate(pivots)
            for col in range(p + 1, n)
            if col not in pivot_set
        ]
        for values in product(residues, repeat=len(free_positions)):
            rows = [[field.zero] * n for _ in range(k)]
            for row, p in enumerate(pivots):
                rows[row][p] = field.one
            for (row, col), val in zip(free_positions, values):
                rows[row][col] = val
            yield Subspace.span(field, n, [tuple(row) for row in rows])


def exhaustive_invariant_subspace(r: Representation) -> Subspace | None:
    """First proper nonzero invariant subspace in enumeration order, if any.

    Only available over a prime field; complete but exponential in p and the
    module dimension, so meant for module_dim <= 4 and small p.
    """
    field = r.algebra.field
    if not isinstance(field, PrimeField):
        raise ValueError("exhaustive enumeration needs a prime field")
    m = r.module_dim
    for k in range(1, m):
        for sub in iter_subspaces(field, m, k):
            if invariant_under_all(r, sub):
                return sub
    return None


def _reducible(r: Representation, witness: Subspace) -> IrreducibilityVerdict:
    # witnesses are re-verified independently of how the search found them
    assert 0 < witness.dim < r.module_dim
    assert invariant_under_all(r, witness)
    return IrreducibilityVerdict(Status.REDUCIBLE, witness=witness)


def _decide_dim2_rational(r: Representation) -> IrreducibilityVerdict:
    """Complete decision for 2-dimensional modules over the rationals.

    A proper invariant subspace is a line of common eigenvectors.  If some
    operator has no rational eigenvalue there is no such line.  Otherwise the
    candidate lines are the eigenlines of the first non-scalar operator; if
    none of them is invariant under everything, the generated algebra is
    dense and the full-envelope step would already have certified the module,
    so that branch is unreachable.
    """
    field = r.algebra.field
    ident = Matrix.identity(field, 2)
    nonscalar = [g for g in r.matrices if g != g.rows[0][0] * ident]
    if not nonscalar:
        return _reducible(r, Subspace.span(field, 2, [unit_vector(field, 2, 0)]))
    for g in r.matrices:
        if not roots(minimal_polynomial(g)):
            return IrreducibilityVerdict(
                Status.IRREDUCIBLE, certificate=Certificate.NO_RATIONAL_EIGENVALUE_DIM2
            )
    g0 = nonscalar[0]
    for mu in roots(minimal_polynomial(g0)):
        eigenspace = kernel(g0 - mu * ident)
        for v in eigenspace.basis:
            line = Subspace.span(field, 2, [v])
            if line.dim < 2 and invariant_under_all(r, line):
                return _reducible(r, line)
    raise AssertionError(
        "dim-2 module with rational eigenvalues everywhere and no invariant "
        "line must have a full envelope; earlier ladder steps should have fired"
    )


def is_irreducible(r: Representation) -> IrreducibilityVerdict:
    """Deterministic decision ladder for module irreducibility.

    Steps, in order: dimension-1 modules are irreducible by definition; spins
    from coordinate vectors; spins from kernels of irreducible factors of
    minimal polynomials of a fixed probe set of operators; full-envelope
    certificate; complete dimension-2 decision over the rationals; exhaustive
    enumeration over prime fields up to dimension 4.  Anything left over is
    Inconclusive (possible only over the rationals in dimension >= 3).
    """
    field = r.algebra.field
    m = r.module_dim
    if m == 1:
        return IrreducibilityVerdict(Status.IRREDUCIBLE, certificate=Certificate.DIM_ONE)
    for i in range(m):
        sub = spin(r, [unit_vector(field, m, i)])
        if sub.dim < m:
            return _reducible(r, sub)
    for g in _deterministic_probe_matrices(r):
        if g.is_zero:
            continue
        for fac in factor_squarefree_or_irreducible(minimal_polynomial(g)):
            ker = kernel(evaluate_polynomial_at(g, fac.poly))
            for v in ker.basis:
                sub = spin(r, [v])
                if 0 < sub.dim < m:
                    return _reducible(r, sub)
    if generate_envelope(r).is_full:
        return IrreducibilityVerdict(Status.IRREDUCIBLE, certificate=Certificate.FULL_ENVELOPE)
    if isinstance(field, Rationals) and m == 2:
        return _decide_dim2_rational(r)
    if isinstance(field, PrimeField) and m <= 4:
        witness = exhaustive_invariant_subspace(r)
        if witness is not None:
            return _reducible(r, witness)
        return IrreducibilityVerdict(
            Status.IRREDUCIBLE, certificate=Certificate.EXHAUSTIVE_FINITE_FIELD
        )
    return IrreducibilityVerdict(
        Status.INCONCLUSIVE, certificate=Certificate.SPIN_SEARCH_EXHAUSTED
    )


@dataclass(frozen=True)
class ModuleClassification:
    """Which decomposition component an irreducible module equals."""

    label: str
    decomposition: ModuleDecomposition
    note: str | None = None


def classify_irreducible(
    r: Representation, e: Element, params: GajParams, verdict: IrreducibilityVerdict
) -> ModuleClassification:
    """Match an irreducible module against the possible component shapes.

    Generic parameters allow M = M_0, M_1 or M_lambda; beta = 0 allows
    M = M_0 or M = M_1 + M_-1; the degenerate regimes allow M = M_0 or M_1.
    A mismatch falsifies the expected structure on this instance and raises
    ClassificationFailed with the computed decomposition attached.
    """
    if verdict.status is not Status.IRREDUCIBLE:
        raise WorkbenchError("classification requires an Irreducible verdict")
    dec = module_peirce(r, e, params)
    pc = dec.case
    full_labels = [label for label, sub in dec.components if sub.is_full]
    note = None
    if pc.lambda_label is not None and pc.beta_zero:
        if dec.component("0").is_full:
            label = "M = M_0"
        elif dec.component("0").is_zero:
            label = "M = M_1 + M_-1"
        else:
            raise ClassificationFailed(
                "module is neither M_0 nor M_1 + M_-1 for beta = 0", dec
            )
    elif len(full_labels) == 1:
        label = f"M = M_{full_labels[0]}"
    else:
        raise ClassificationFailed(
            "module does not equal a single decomposition component", dec
        )
    if (
        pc.case is Case.BETA_PLUS_GAMMA_ZERO
        and label == "M = M_0"
        and r.rho(e).is_zero
    ):
        note = "no structural conclusion available for M = M_0 with rho_e = 0"
    return ModuleClassification(label, dec, note)
