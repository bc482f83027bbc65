"""Run every applicable structure check on one instance and tabulate results.

Statuses: "pass" and "fail" are recomputed verdicts, "vacuous" means the
check applies but has nothing to bite on (a zero component), and
"not-applicable" means the instance does not satisfy the check's hypotheses.
Any "fail" falsifies an expected structural fact on this instance and is
surfaced as such; nothing here assumes the facts it is checking.
"""

from dataclasses import dataclass

from .document import WorkbenchDocument
from .errors import ClassificationFailed, HypothesisNotMet, ModuleNotM1
from .identity import check_gaj_identity, solve_parameter_space
from .irreducibility import Status, classify_irreducible, is_irreducible
from .peirce import peirce_decompose, verify_peirce_relations
from .representation import (
    check_associative_module,
    check_lambda_relations,
    check_rep_via_extension,
    check_representation,
    module_peirce,
    verify_action_relations,
    verify_linearized_consequences,
)


@dataclass(frozen=True)
class TableRow:
    check: str
    status: str  # pass | fail | vacuous | not-applicable | info
    detail: str = ""


def theorem_table(doc: WorkbenchDocument) -> tuple[list[TableRow], bool]:
    """All applicable checks for the instance; second value is overall success."""
    rows: list[TableRow] = []

    def add(check, status, detail=""):
        rows.append(TableRow(check, status, detail))

    space = solve_parameter_space(doc.algebra)
    add("parameter-space", "info", space.kind)

    if doc.params is None:
        add("identity", "not-applicable", "document carries no parameters")
        return rows, all(r.status != "fail" for r in rows)
    params = doc.params
    holds = check_gaj_identity(doc.algebra, params)
    add("identity", "pass" if holds else "fail")
    if not holds:
        return rows, False

    alg_dec = None
    if doc.idempotent is None:
        add("peirce-decomposition", "not-applicable", "document names no idempotent")
    else:
        alg_dec = peirce_decompose(doc.algebra, doc.idempotent, params)
        dims = ", ".join(f"A_{lbl}: {sub.dim}" for lbl, sub in alg_dec.components)
        add("peirce-decomposition", "pass", f"direct sum with {dims}")
        for check in verify_peirce_relations(alg_dec).checks:
            add(check.name, check.status, check.detail)

    if doc.representation is None:
        add("representation-conditions", "not-applicable", "document carries no representation")
        return rows, all(r.status != "fail" for r in rows)
    rep = doc.representation

    direct = check_representation(rep, params)
    via_ext = check_rep_via_extension(rep, params)
    add("representation-conditions", "pass" if direct else "fail")
    add("representation-via-extension", "pass" if via_ext else "fail")
    add(
        "representation-decision-agreement",
        "pass" if direct == via_ext else "fail",
        "the operator-condition route and the extension route must agree",
    )
    if not direct or not via_ext:
        return rows, all(r.status != "fail" for r in rows)

    for check in verify_linearized_consequences(rep, params).checks:
        add(check.name, check.status, check.detail)

    if doc.idempotent is None or alg_dec is None:
        return rows, all(r.status != "fail" for r in rows)
    e = doc.idempotent

    mod_dec = module_peirce(rep, e, params)
    dims = ", ".join(f"M_{lbl}: {sub.dim}" for lbl, sub in mod_dec.components)
    add("module-decomposition", "pass", f"direct sum with {dims}")
    for check in verify_action_relations(rep, e, params, alg_dec, mod_dec).checks:
        add(check.name, check.status, check.detail)

    b, g = params.beta, params.gamma
    assoc_scalars_ok = all((b, g, b + g, b + 2 * g, b + 3 * g))
    if not assoc_scalars_ok:
        add(
            "associative-module",
            "not-applicable",
            "needs beta, gamma, beta+gamma, beta+2*gamma, beta+3*gamma all nonzero",
        )
    else:
        try:
            assoc = check_associative_module(rep, e, params)
            add("associative-module", assoc.verdict, "; ".join(assoc.failures))
            for check in assoc.identities.checks:
                add(check.name, check.status, check.detail)
        except ModuleNotM1:
            add("associative-module", "not-applicable", "module is not all of M_1")

    try:
        lam = check_lambda_relations(rep, e, params)
        detail = "; ".join(lam.failures)
        if lam.verdict == "vacuous":
            detail = "module is not all of M_lambda"
        add("lambda-relations", lam.verdict, detail)
        for check in lam.identities.checks:
            add(check.name, check.status, check.detail)
    except HypothesisNotMet as exc:
        add("lambda-relations", "not-applicable", str(exc))

    verdict = is_irreducible(rep)
    add("irreducibility", "info", verdict.status.value)
    if verdict.status is Status.IRREDUCIBLE:
        try:
            cls = classify_irreducible(rep, e, params, verdict)
            detail = cls.label if cls.note is None else f"{cls.label} ({cls.note})"
            add("irreducible-classification", "pass", detail)
        except ClassificationFailed as exc:
            add("irreducible-classification", "fail", str(exc))
    else:
        add(
            "irreducible-classification",
            "not-applicable",
            f"module is {verdict.status.value}",
        )

    return rows, all(r.status != "fail" for r in rows)
