"""Built-in corpus: seven worked instances with expected-verdict metadata.

Four instances are small published multiplication tables (two-dimensional
algebras with a square root of an idempotent, with a shifted root, a
three-dimensional table with a local unit, and a two-dimensional irreducible
module over the first of them); three more are constructed here (a split pair
of orthogonal idempotents and the regular representations of two of the
tables).  The notes on the entries record the discrepancies this workbench
found when reproducing the published claims.
"""

import copy

from .document import WorkbenchDocument, parse_document
from .representation import Representation

_SHIFTED_ROOT_NOTE = (
    "Published descriptions of this table claim a^2(aa) = 2a != (a^2a)a = 0. "
    "Direct computation from the table gives a^2*a^2 = -a and a^3 = 0 (hence "
    "a^4 = 0), so the claimed value 2a is not reproducible; the fourth-power "
    "defect is -a, which still certifies failure of power-associativity."
)

_LOCAL_UNIT_NOTE = (
    "The published parameter claim for this table quantifies over a scalar "
    "alpha that never occurs in the identity; it is treated as a typo for "
    "the (beta, gamma) pair."
)

_LOCAL_UNIT_PARAMS_NOTE = (
    "The published parameter claim (beta, gamma) = (1, 1) for this table is "
    "falsified by exact computation: the identity defect at x = a + b, y = a "
    "equals (beta+gamma)*b, and the full solution space is the line "
    "beta + gamma = 0. The stored parameters use the admissible "
    "representative (1, -1)."
)

_LAMBDA_ACTION_NOTE = (
    "The action relation for the lambda component acting on itself is "
    "verified as an inclusion in M_0 + M_1, not as the published equality: "
    "only the inclusion follows from the component relations it is derived "
    "from."
)

_EXTENSION_RELATION_NOTE = (
    "A published derivation of the action table lists S_lambda*S_1 <= S_1 "
    "for the extension algebra; the statement actually verified here is the "
    "component relation A_1*M_lambda <= M_lambda."
)


def _regular_matrices(raw_algebra: dict) -> dict:
    """Row-major string grids of the regular action, computed from the table."""
    doc = parse_document({"field": "rational", "algebra": raw_algebra})
    alg = doc.algebra
    rep = Representation.regular(alg)
    return {
        name: [[str(x) for x in row] for row in rep.matrices[i].rows]
        for i, name in enumerate(alg.basis_names)
    }


_SQRT_IDEMPOTENT_ALGEBRA = {
    "basis": ["e", "a"],
    "products": {"e*e": {"e": "1"}, "a*a": {"e": "1"}},
}

_SHIFTED_ROOT_ALGEBRA = {
    "basis": ["e", "a"],
    "products": {
        "e*e": {"e": "1"},
        "e*a": {"e": "-1", "a": "-1"},
        "a*a": {"e": "1", "a": "1"},
    },
}

_LOCAL_UNIT_ALGEBRA = {
    "basis": ["e", "a", "b"],
    "products": {"e*e": {"e": "1"}, "a*b": {"b": "1"}},
}

_SPLIT_IDEMPOTENTS_ALGEBRA = {
    "basis": ["e", "f"],
    "products": {"e*e": {"e": "1"}, "f*f": {"f": "1"}},
}


def _build_raw_corpus() -> tuple[tuple[str, dict], ...]:
    entries = []
    entries.append(
        (
            "sqrt-idempotent",
            {
                "name": "sqrt-idempotent",
                "field": "rational",
                "algebra": _SQRT_IDEMPOTENT_ALGEBRA,
                "params": {"beta": "1", "gamma": "-1"},
                "idempotent": "e",
                "expected": {
                    "check-identity": True,
                    "parameter-space-kind": "line",
                    "fourth-power-defect-of-a": "nonzero",
                    "peirce-dims": {"A_0": 1, "A_1": 1},
                },
            },
        )
    )
    entries.append(
        (
            "shifted-root",
            {
                "name": "shifted-root",
                "field": "rational",
                "algebra": _SHIFTED_ROOT_ALGEBRA,
                "params": {"beta": "0", "gamma": "1"},
                "idempotent": "e",
                "notes": [_SHIFTED_ROOT_NOTE],
                "expected": {
                    "check-identity": True,
                    "parameter-space-contains-beta-zero-line": True,
                    "a-cubed": "0",
                    "peirce-dims": {"A_0": 0, "A_1": 1, "A_-1": 1},
                },
            },
        )
    )
    entries.append(
        (
            "local-unit",
            {
                "name": "local-unit",
                "field": "rational",
                "algebra": _LOCAL_UNIT_ALGEBRA,
                "params": {"beta": "1", "gamma": "-1"},
                "idempotent": "e",
                "notes": [_LOCAL_UNIT_NOTE, _LOCAL_UNIT_PARAMS_NOTE],
                "expected": {
                    "check-identity": True,
                    "published-params-claim-holds": False,
                    "parameter-space-kind": "line",
                    "fourth-power-of-a-plus-b": "2b",
                    "peirce-dims": {"A_0": 2, "A_1": 1},
                },
            },
        )
    )
    entries.append(
        (
            "irreducible-plane",
            {
                "name": "irreducible-plane",
                "field": "rational",
                "algebra": _SQRT_IDEMPOTENT_ALGEBRA,
                "params": {"beta": "1", "gamma": "-1"},
                "idempotent": "e",
                "representation": {
                    "module_dim": 2,
                    "module_basis": ["v", "w"],
                    "matrices": {
                        "e": [["0", "0"], ["0", "0"]],
                        "a": [["-1", "2"], ["-1", "1"]],
                    },
                },
                "expected": {
                    "check-rep": True,
                    "irreducible": "Irreducible",
                    "certificate": "NoRationalEigenvalueDim2",
                    "classification": "M = M_0",
                },
            },
        )
    )
    entries.append(
        (
            "split-idempotents",
            {
                "name": "split-idempotents",
                "field": "rational",
                "algebra": _SPLIT_IDEMPOTENTS_ALGEBRA,
                "params": {"beta": "3", "gamma": "-1"},
                "idempotent": "e",
                "representation": {
                    "module_dim": 2,
                    "matrices": _regular_matrices(_SPLIT_IDEMPOTENTS_ALGEBRA),
                },
                "notes": [_LAMBDA_ACTION_NOTE, _EXTENSION_RELATION_NOTE],
                "expected": {
                    "check-identity": True,
                    "parameter-space-kind": "plane",
                    "check-rep": True,
                    "irreducible": "Reducible",
                    "peirce-dims": {"A_0": 1, "A_1": 1, "A_lambda": 0},
                    "strengthened-action-relations": False,
                },
            },
        )
    )
    entries.append(
        (
            "sqrt-idempotent-regular",
            {
                "name": "sqrt-idempotent-regular",
                "field": "rational",
                "algebra": _SQRT_IDEMPOTENT_ALGEBRA,
                "params": {"beta": "1", "gamma": "-1"},
                "idempotent": "e",
                "representation": {
                    "module_dim": 2,
                    "matrices": _regular_matrices(_SQRT_IDEMPOTENT_ALGEBRA),
                },
                "expected": {
                    "check-rep": True,
                    "irreducible": "Reducible",
                    "reducible-witness-dim": 1,
                },
            },
        )
    )
    entries.append(
        (
            "local-unit-regular",
            {
                "name": "local-unit-regular",
                "field": "rational",
                "algebra": _LOCAL_UNIT_ALGEBRA,
                "params": {"beta": "1", "gamma": "-1"},
                "idempotent": "e",
                "representation": {
                    "module_dim": 3,
                    "matrices": _regular_matrices(_LOCAL_UNIT_ALGEBRA),
                },
                "notes": [_LOCAL_UNIT_PARAMS_NOTE],
                "expected": {
                    "check-rep": True,
                    "irreducible": "Reducible",
                    "module-peirce-dims": {"M_0": 2, "M_1": 1},
                },
            },
        )
    )
    return tuple(entries)


_RAW_CORPUS = _build_raw_corpus()


def corpus_names() -> tuple[str, ...]:
    return tuple(name for name, _ in _RAW_CORPUS)


def raw_corpus_entry(name: str) -> dict:
    for entry_name, raw in _RAW_CORPUS:
        if entry_name == name:
            return copy.deepcopy(raw)
    raise KeyError(f"no corpus entry named {name!r}")


def builtin_corpus() -> tuple[WorkbenchDocument, ...]:
    """The seven corpus instances, parsed."""
    return tuple(parse_document(copy.deepcopy(raw)) for _, raw in _RAW_CORPUS)


def corpus_entry(name: str) -> WorkbenchDocument:
    return parse_document(raw_corpus_entry(name))
