"""Command-line interface.

    gajwb <command> [--params B,G] [--idempotent NAME|COORDS] \
          [--field rational|fp:P] [--json|--pretty] FILE

FILE is a path, "-" for stdin, or "corpus:NAME" for a built-in instance.
Exit codes: 0 = holds/true/irreducible, 1 = fails/false/reducible,
2 = input or precondition error, 3 = inconclusive.

Reports are deterministic byte-for-byte for identical inputs.  The
GAJWB_THREADS environment variable is validated and accepted as an upper
bound on parallelism; the sweeps are evaluated sequentially, which trivially
respects any bound and keeps output independent of it.
"""

import argparse
import json
import os
import sys

from .corpus import builtin_corpus, corpus_names, raw_corpus_entry
from .document import (
    WorkbenchDocument,
    document_to_json,
    emit_document,
    parse_document,
    parse_element,
    parse_params,
)
from .errors import ClassificationFailed, DocumentError, WorkbenchError
from .fields import FieldError, field_from_spec
from .identity import check_gaj_identity, solve_parameter_space
from .irreducibility import Status, classify_irreducible, is_irreducible
from .linalg import minimal_polynomial
from .algebra import right_mult_operator
from .peirce import peirce_decompose, verify_peirce_relations
from .representation import (
    check_representation,
    module_peirce,
    split_null_extension,
    verify_action_relations,
)
from .verify import theorem_table

COMMANDS = (
    "check-identity",
    "params",
    "peirce",
    "check-rep",
    "extend",
    "module-peirce",
    "actions",
    "irreducible",
    "classify",
    "verify-theorems",
    "examples",
)


class CliError(Exception):
    """Input or precondition error at the CLI level; maps to exit code 2."""


def _read_thread_cap():
    raw = os.environ.get("GAJWB_THREADS")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise CliError(f"GAJWB_THREADS must be a positive integer, got {raw!r}")
    if cap < 1:
        raise CliError(f"GAJWB_THREADS must be a positive integer, got {raw!r}")
    return cap


def _load_raw(file_arg: str) -> dict:
    if file_arg.startswith("corpus:"):
        name = file_arg[len("corpus:"):]
        try:
            return raw_corpus_entry(name)
        except KeyError:
            known = ", ".join(corpus_names())
            raise CliError(f"no corpus entry {name!r}; known entries: {known}")
    if file_arg == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(file_arg, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise CliError(f"cannot read {file_arg}: {exc}")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{file_arg}: invalid JSON: {exc}")
    if not isinstance(raw, dict):
        raise CliError(f"{file_arg}: document must be a JSON object")
    return raw


def _load_document(ns) -> WorkbenchDocument:
    raw = _load_raw(ns.file)
    field_override = None
    if ns.field is not None:
        field_override = field_from_spec(ns.field)
    if ns.params is not None:
        parts = ns.params.split(",")
        if len(parts) != 2:
            raise CliError(f"--params expects B,G with exact scalars, got {ns.params!r}")
        raw["params"] = {"beta": parts[0].strip(), "gamma": parts[1].strip()}
    doc = parse_document(raw, field_override=field_override)
    if ns.idempotent is not None:
        spec = ns.idempotent.strip()
        if spec in doc.algebra.basis_names:
            raw_elem = spec
        else:
            raw_elem = [p.strip() for p in spec.split(",")]
        doc.idempotent = parse_element(doc.algebra, raw_elem, "--idempotent")
    return doc


def _need(doc: WorkbenchDocument, what: str):
    if what == "params" and doc.params is None:
        raise CliError("no parameters: pass --params B,G or put them in the document")
    if what == "idempotent" and doc.idempotent is None:
        raise CliError("no idempotent: pass --idempotent or put one in the document")
    if what == "representation" and doc.representation is None:
        raise CliError("the document carries no representation")


def _subspace_json(field, sub):
    return {
        "ambient_dim": sub.ambient_dim,
        "dim": sub.dim,
        "basis": [[field.format(x) for x in row] for row in sub.basis],
    }


def _base_report(command: str, doc: WorkbenchDocument, source: str) -> dict:
    out = {"command": command, "source": source, "field": doc.field.spec()}
    if doc.name:
        out["name"] = doc.name
    if doc.params is not None:
        out["params"] = {
            "beta": doc.field.format(doc.params.beta),
            "gamma": doc.field.format(doc.params.gamma),
        }
    if doc.notes:
        out["notes"] = list(doc.notes)
    return out


def _relations_json(report):
    return [
        {"name": c.name, "status": c.status, "detail": c.detail}
        for c in report.checks
    ]


def _cmd_check_identity(ns, doc):
    _need(doc, "params")
    holds = check_gaj_identity(doc.algebra, doc.params)
    report = _base_report("check-identity", doc, ns.file)
    report["holds"] = holds
    return report, 0 if holds else 1


def _cmd_params(ns, doc):
    space = solve_parameter_space(doc.algebra)
    report = _base_report("params", doc, ns.file)
    report["parameter-space"] = {
        "kind": space.kind,
        "basis": [[doc.field.format(x) for x in row] for row in space.solutions.basis],
    }
    admissible = space.solutions.dim > 0
    report["admissible-parameters-exist"] = admissible
    return report, 0 if admissible else 1


def _cmd_peirce(ns, doc):
    _need(doc, "params")
    _need(doc, "idempotent")
    dec = peirce_decompose(doc.algebra, doc.idempotent, doc.params)
    relations = verify_peirce_relations(dec)
    report = _base_report("peirce", doc, ns.file)
    report["case"] = dec.case.case.value
    report["lambda"] = None if dec.lam is None else doc.field.format(dec.lam)
    report["minimal-polynomial"] = str(
        minimal_polynomial(right_mult_operator(doc.idempotent))
    )
    report["components"] = {
        f"A_{lbl}": _subspace_json(doc.field, sub) for lbl, sub in dec.components
    }
    report["relations"] = _relations_json(relations)
    report["all-relations-ok"] = relations.ok
    return report, 0 if relations.ok else 1


def _cmd_check_rep(ns, doc):
    _need(doc, "params")
    _need(doc, "representation")
    holds = check_representation(doc.representation, doc.params)
    report = _base_report("check-rep", doc, ns.file)
    report["is-representation"] = holds
    return report, 0 if holds else 1


def _cmd_extend(ns, doc):
    _need(doc, "representation")
    ext = split_null_extension(doc.representation, doc.module_basis)
    ext_doc = WorkbenchDocument(
        field=doc.field,
        algebra=ext.algebra,
        name=f"{doc.name}-extension" if doc.name else None,
        params=doc.params,
        idempotent=None,
        representation=None,
    )
    report = _base_report("extend", doc, ns.file)
    report["extension"] = emit_document(ext_doc)
    report["dim"] = ext.algebra.dim
    code = 0
    if doc.params is not None:
        holds = check_gaj_identity(ext.algebra, doc.params)
        report["identity-holds-on-extension"] = holds
        code = 0 if holds else 1
    return report, code


def _cmd_module_peirce(ns, doc):
    _need(doc, "params")
    _need(doc, "idempotent")
    _need(doc, "representation")
    dec = module_peirce(doc.representation, doc.idempotent, doc.params)
    report = _base_report("module-peirce", doc, ns.file)
    report["case"] = dec.case.case.value
    report["lambda"] = None if dec.lam is None else doc.field.format(dec.lam)
    report["minimal-polynomial"] = str(
        minimal_polynomial(doc.representation.rho(doc.idempotent))
    )
    report["components"] = {
        f"M_{lbl}": _subspace_json(doc.field, sub) for lbl, sub in dec.components
    }
    return report, 0


def _cmd_actions(ns, doc):
    _need(doc, "params")
    _need(doc, "idempotent")
    _need(doc, "representation")
    alg_dec = peirce_decompose(doc.algebra, doc.idempotent, doc.params)
    mod_dec = module_peirce(doc.representation, doc.idempotent, doc.params)
    relations = verify_action_relations(
        doc.representation, doc.idempotent, doc.params, alg_dec, mod_dec
    )
    report = _base_report("actions", doc, ns.file)
    report["case"] = alg_dec.case.case.value
    report["algebra-components"] = {
        f"A_{lbl}": sub.dim for lbl, sub in alg_dec.components
    }
    report["module-components"] = {
        f"M_{lbl}": sub.dim for lbl, sub in mod_dec.components
    }
    report["relations"] = _relations_json(relations)
    report["all-relations-ok"] = relations.ok
    return report, 0 if relations.ok else 1


def _cmd_irreducible(ns, doc):
    _need(doc, "representation")
    verdict = is_irreducible(doc.representation)
    report = _base_report("irreducible", doc, ns.file)
    report["status"] = verdict.status.value
    report["certificate"] = (
        None if verdict.certificate is None else verdict.certificate.value
    )
    report["witness"] = (
        None
        if verdict.witness is None
        else _subspace_json(doc.field, verdict.witness)
    )
    if verdict.status is Status.IRREDUCIBLE:
        return report, 0
    if verdict.status is Status.REDUCIBLE:
        return report, 1
    return report, 3


def _cmd_classify(ns, doc):
    _need(doc, "params")
    _need(doc, "idempotent")
    _need(doc, "representation")
    verdict = is_irreducible(doc.representation)
    if verdict.status is not Status.IRREDUCIBLE:
        raise CliError(
            f"classification requires an irreducible module; this one is "
            f"{verdict.status.value}"
        )
    report = _base_report("classify", doc, ns.file)
    try:
        cls = classify_irreducible(
            doc.representation, doc.idempotent, doc.params, verdict
        )
    except ClassificationFailed as exc:
        report["label"] = None
        report["classification-error"] = str(exc)
        report["components"] = {
            f"M_{lbl}": sub.dim for lbl, sub in exc.decomposition.components
        }
        return report, 1
    report["label"] = cls.label
    report["note"] = cls.note
    report["components"] = {
        f"M_{lbl}": sub.dim for lbl, sub in cls.decomposition.components
    }
    return report, 0


def _cmd_verify_theorems(ns, doc):
    _need(doc, "params")
    rows, ok = theorem_table(doc)
    report = _base_report("verify-theorems", doc, ns.file)
    report["table"] = [
        {"check": r.check, "status": r.status, "detail": r.detail} for r in rows
    ]
    report["ok"] = ok
    return report, 0 if ok else 1


def _cmd_examples(ns, doc_unused):
    if ns.file is not None:
        raw = _load_raw(f"corpus:{ns.file}" if not ns.file.startswith("corpus:") else ns.file)
        doc = parse_document(raw)
        report = emit_document(doc)
        return report, 0
    entries = []
    for doc in builtin_corpus():
        entries.append(
            {
                "name": doc.name,
                "field": doc.field.spec(),
                "dim": doc.algebra.dim,
                "has-representation": doc.representation is not None,
                "module_dim": (
                    doc.representation.module_dim if doc.representation else None
                ),
                "notes": list(doc.notes),
            }
        )
    return {"command": "examples", "corpus": entries}, 0


_HANDLERS = {
    "check-identity": _cmd_check_identity,
    "params": _cmd_params,
    "peirce": _cmd_peirce,
    "check-rep": _cmd_check_rep,
    "extend": _cmd_extend,
    "module-peirce": _cmd_module_peirce,
    "actions": _cmd_actions,
    "irreducible": _cmd_irreducible,
    "classify": _cmd_classify,
    "verify-theorems": _cmd_verify_theorems,
}


def _render_pretty(report: dict) -> str:
    lines = []

    def emit(key, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k in value:
                emit(k, value[k], indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                status = item.get("status", "")
                name = item.get("name", item.get("check", ""))
                detail = item.get("detail", "")
                rest = f"  ({detail})" if detail else ""
                if status or name:
                    lines.append(f"{pad}  [{status:>14}] {name}{rest}")
                else:
                    lines.append(f"{pad}  {json.dumps(item, sort_keys=True)}")
        else:
            lines.append(f"{pad}{key}: {json.dumps(value, sort_keys=True)}")

    for key in report:
        emit(key, report[key])
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gajwb",
        description=(
            "Exact workbench for commutative nonassociative algebras: identity "
            "checks, Peirce decompositions, representations, and module "
            "irreducibility."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        p = sub.add_parser(command)
        p.add_argument("--params", help="identity parameters as B,G (exact scalars)")
        p.add_argument(
            "--idempotent", help="idempotent as a basis name or comma-separated coordinates"
        )
        p.add_argument("--field", help="field override: rational or fp:P")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument(
            "--json", action="store_true", help="machine-readable output (default)"
        )
        fmt.add_argument("--pretty", action="store_true", help="human-readable output")
        if command == "examples":
            p.add_argument("file", nargs="?", default=None, metavar="NAME")
        else:
            p.add_argument("file", metavar="FILE", help="path, '-' for stdin, or corpus:NAME")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        _read_thread_cap()
        if ns.command == "examples":
            report, code = _cmd_examples(ns, None)
        else:
            doc = _load_document(ns)
            report, code = _HANDLERS[ns.command](ns, doc)
    except (CliError, DocumentError, FieldError, WorkbenchError) as exc:
        sys.stderr.write(f"gajwb: error: {exc}\n")
        return 2
    if ns.pretty:
        sys.stdout.write(_render_pretty(report))
    else:
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
