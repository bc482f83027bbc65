"""Peirce decomposition relative to a verified idempotent.

The identity, applied with x = e idempotent, forces the multiplication
operator R_e (and any representing operator rho_e) to satisfy

    (beta+gamma) t^3 - beta t^2 - gamma t = 0.

The shape of that cubic splits the parameter plane into four regimes:

  generic (0 not in {gamma, beta+gamma, beta+2gamma}):
      simple roots 0, 1, lambda with lambda = -gamma/(beta+gamma);
      eigenspace decomposition A_0 + A_1 + A_lambda
  gamma = 0:        t^2 (t-1);  A_0 = ker R_e^2,  A_1 = ker(R_e - 1)
  beta+gamma = 0:   t (t-1);    A_0 = ker R_e,    A_1 = ker(R_e - 1)
  beta+2gamma = 0:  t (t-1)^2;  A_0 = ker R_e,    A_1 = ker(R_e - 1)^2

Each regime comes with multiplication relations between the components,
which `verify_peirce_relations` recomputes and reports rather than assumes.
"""

import enum
from dataclasses import dataclass

from .algebra import Algebra, Element, GajParams, is_idempotent, right_mult_operator
from .errors import IdentityFails, MinimalPolynomialViolation, NotIdempotent
from .fields import Field, Scalar
from .identity import check_gaj_identity
from .linalg import Matrix, Subspace, evaluate_polynomial_at, kernel
from .linalg import minimal_polynomial as matrix_minimal_polynomial
from .poly import Poly


class Case(enum.Enum):
    GENERIC = "generic"
    GAMMA_ZERO = "gamma-zero"
    BETA_PLUS_GAMMA_ZERO = "beta-plus-gamma-zero"
    BETA_PLUS_2GAMMA_ZERO = "beta-plus-2gamma-zero"


@dataclass(frozen=True)
class ParameterCase:
    """Parameter regime plus the derived scalar flags other checks dispatch on."""

    case: Case
    lam: Scalar | None
    beta_zero: bool
    beta_plus_3gamma_zero: bool
    beta_minus_gamma_zero: bool

    @property
    def lambda_label(self) -> str | None:
        """Display label of the third component; "-1" when beta = 0 forces lambda = -1."""
        if self.case is not Case.GENERIC:
            return None
        return "-1" if self.beta_zero else "lambda"


def classify_params(params: GajParams) -> ParameterCase:
    """The unique applicable regime for (beta, gamma) != (0, 0)."""
    b, g = params.beta, params.gamma
    gamma_zero = not g
    bpg_zero = not (b + g)
    bp2g_zero = not (b + 2 * g)
    if gamma_zero + bpg_zero + bp2g_zero > 1:
        # impossible for (beta, gamma) != (0, 0) in characteristic not 2, 3
        raise AssertionError("degenerate cases are not mutually exclusive")
    lam = None
    if gamma_zero:
        case = Case.GAMMA_ZERO
    elif bpg_zero:
        case = Case.BETA_PLUS_GAMMA_ZERO
    elif bp2g_zero:
        case = Case.BETA_PLUS_2GAMMA_ZERO
    else:
        case = Case.GENERIC
        lam = -g / (b + g)
    return ParameterCase(
        case=case,
        lam=lam,
        beta_zero=not b,
        beta_plus_3gamma_zero=not (b + 3 * g),
        beta_minus_gamma_zero=not (b - g),
    )


def component_factors(pc: ParameterCase, field: Field) -> tuple[tuple[str, Poly], ...]:
    """(label, polynomial) pairs whose kernels at the operator are the components."""
    t = Poly.x(field)
    t_minus_1 = Poly(field, (-field.one, field.one))
    if pc.case is Case.GENERIC:
        t_minus_lam = Poly(field, (-pc.lam, field.one))
        return (("0", t), ("1", t_minus_1), (pc.lambda_label, t_minus_lam))
    if pc.case is Case.GAMMA_ZERO:
        return (("0", t * t), ("1", t_minus_1))
    if pc.case is Case.BETA_PLUS_GAMMA_ZERO:
        return (("0", t), ("1", t_minus_1))
    return (("0", t), ("1", t_minus_1 * t_minus_1))


def case_polynomial(pc: ParameterCase, field: Field) -> Poly:
    """Monic polynomial annihilating the idempotent's operator in this regime."""
    out = Poly.one(field)
    for _, f in component_factors(pc, field):
        out = out * f
    return out


def decompose_operator(
    op: Matrix, pc: ParameterCase
) -> tuple[tuple[str, Subspace], ...]:
    """Kernel components of an operator constrained by the case polynomial.

    Raises MinimalPolynomialViolation if the operator's minimal polynomial
    does not divide the case polynomial, and verifies that the components
    sum directly and exhaustively.
    """
    field = op.field
    mp = matrix_minimal_polynomial(op)
    cp = case_polynomial(pc, field)
    if not mp.divides(cp):
        raise MinimalPolynomialViolation(
            f"minimal polynomial {mp} does not divide the case polynomial {cp}"
        )
    comps = tuple(
        (label, kernel(evaluate_polynomial_at(op, f)))
        for label, f in component_factors(pc, field)
    )
    total = sum(s.dim for _, s in comps)
    if total != op.nrows:
        raise MinimalPolynomialViolation(
            f"components have total dimension {total}, expected {op.nrows}"
        )
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            if not comps[i][1].intersect(comps[j][1]).is_zero:
                raise MinimalPolynomialViolation(
                    f"components {comps[i][0]} and {comps[j][0]} overlap"
                )
    return comps


@dataclass(frozen=True)
class PeirceDecomposition:
    """Direct-sum split of the algebra relative to an idempotent."""

    case: ParameterCase
    idempotent: Element
    components: tuple[tuple[str, Subspace], ...]

    @property
    def algebra(self) -> Algebra:
        return self.idempotent.algebra

    @property
    def lam(self) -> Scalar | None:
        return self.case.lam

    def component(self, label: str) -> Subspace:
        for lbl, sub in self.components:
            if lbl == label:
                return sub
        raise KeyError(label)


def peirce_decompose(
    algebra: Algebra, e: Element, params: GajParams
) -> PeirceDecomposition:
    """Decompose the algebra relative to e for the given parameters.

    Requires e idempotent and the identity to hold; the components are the
    kernels of the case polynomial's factors at R_e.
    """
    if e.algebra != algebra:
        raise ValueError("idempotent belongs to a different algebra")
    if not is_idempotent(e):
        raise NotIdempotent(f"element {e!r} is not a nonzero idempotent")
    if not check_gaj_identity(algebra, params):
        raise IdentityFails(
            f"the identity fails for beta={params.beta}, gamma={params.gamma}"
        )
    pc = classify_params(params)
    comps = decompose_operator(right_mult_operator(e), pc)
    dec = PeirceDecomposition(case=pc, idempotent=e, components=comps)
    # e*e = e puts the idempotent in the eigenvalue-1 component in every case
    assert dec.component("1").contains_vector(e.coords)
    return dec


@dataclass(frozen=True)
class RelationCheck:
    """One verified relation; status is "pass", "fail" or "vacuous"."""

    name: str
    status: str
    detail: str = ""


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> tuple[RelationCheck, ...]:
        return tuple(c for c in self.checks if c.status == "fail")


def product_span(algebra: Algebra, u: Subspace, v: Subspace) -> Subspace:
    """Span of all pairwise products of basis vectors of u and v."""
    vectors = [
        algebra.multiply_coords(x, y) for x in u.basis for y in v.basis
    ]
    return Subspace.span(algebra.field, algebra.dim, vectors)


def _relation_check(
    name: str, factors: tuple[Subspace, Subspace], result: Subspace, target: Subspace | None
) -> RelationCheck:
    """target None means the product must vanish."""
    if any(f.dim == 0 for f in factors):
        return RelationCheck(name, "vacuous", "a factor is the zero subspace")
    if target is None:
        if result.is_zero:
            return RelationCheck(name, "pass")
        return RelationCheck(name, "fail", f"product has dimension {result.dim}")
    if target.contains(result):
        return RelationCheck(name, "pass")
    return RelationCheck(name, "fail", f"product of dimension {result.dim} escapes the target")


def _case_product_relations(pc: ParameterCase):
    """Relations among algebra components, per regime: (left, right, target|None)."""
    if pc.case is Case.GENERIC:
        lam = pc.lambda_label
        return [
            ("0", "0", "0"),
            ("1", "1", "1"),
            ("0", "1", None),
            (lam, "0", lam),
            (lam, "1", lam),
            (lam, lam, ("0", "1")),
        ]
    if pc.case is Case.GAMMA_ZERO:
        return [("0", "1", "0"), ("0", "0", "0")]
    if pc.case is Case.BETA_PLUS_GAMMA_ZERO:
        return [("0", "1", None), ("1", "1", "1")]
    return [("0", "1", None), ("0", "0", "0")]


def verify_peirce_relations(dec: PeirceDecomposition) -> RelationReport:
    """Recompute every multiplication relation of the applicable regime.

    Failures are reported, not raised: a failing relation falsifies the
    expected structure on this instance and must surface in the report.
    """
    algebra = dec.algebra
    checks = []
    for left, right, target in _case_product_relations(dec.case):
        u = dec.component(left)
        v = dec.component(right)
        prod = product_span(algebra, u, v)
        if target is None:
            tgt = None
            name = f"A_{left}*A_{right} == 0"
        elif isinstance(target, tuple):
            tgt = dec.component(target[0]).sum(dec.component(target[1]))
            name = f"A_{left}*A_{right} <= A_{target[0]}+A_{target[1]}"
        else:
            tgt = dec.component(target)
            name = f"A_{left}*A_{right} <= A_{target}"
        checks.append(_relation_check(name, (u, v), prod, tgt))
    return RelationReport(tuple(checks))
