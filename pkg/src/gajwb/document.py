"""The JSON input document: parsing, validation, and canonical emission.

One document describes one instance: a field, an algebra by its multiplication
table (products given for one order only, zero products omitted), and
optionally the identity parameters, a distinguished idempotent, and a
representation.  Scalars are always strings ("1", "-1", "2/3") so that
exactness survives any JSON implementation; floats are rejected.

Matrices are row-major and act on column vectors: entry [i][j] is row i,
column j, and column j of a representation matrix holds the image of the j-th
module basis vector.
"""

import json
from dataclasses import dataclass, field as dataclass_field

from .algebra import Algebra, Element, GajParams
from .errors import DocumentError
from .fields import Field, FieldError, field_from_spec
from .linalg import Matrix
from .representation import Representation


@dataclass
class WorkbenchDocument:
    field: Field
    algebra: Algebra
    name: str | None = None
    params: GajParams | None = None
    idempotent: Element | None = None
    representation: Representation | None = None
    module_basis: tuple[str, ...] | None = None
    notes: tuple[str, ...] = ()
    expected: dict | None = None


def _require(cond: bool, path: str, message: str):
    if not cond:
        raise DocumentError(path, message)


def _parse_scalar(fld: Field, value, path: str):
    if isinstance(value, float):
        raise DocumentError(path, f"non-exact scalar {value!r}: use a string like \"2/3\"")
    if isinstance(value, bool):
        raise DocumentError(path, f"not a scalar: {value!r}")
    try:
        return fld.scalar(value)
    except FieldError as exc:
        raise DocumentError(path, str(exc)) from None


def parse_params(fld: Field, raw, path: str = "params") -> GajParams:
    _require(isinstance(raw, dict), path, "expected an object with beta and gamma")
    for key in raw:
        _require(key in ("beta", "gamma"), f"{path}.{key}", "unknown key")
    _require("beta" in raw and "gamma" in raw, path, "both beta and gamma are required")
    beta = _parse_scalar(fld, raw["beta"], f"{path}.beta")
    gamma = _parse_scalar(fld, raw["gamma"], f"{path}.gamma")
    if not beta and not gamma:
        raise DocumentError(path, "(beta, gamma) != (0, 0) required")
    return GajParams(fld, beta, gamma)


def parse_element(algebra: Algebra, raw, path: str) -> Element:
    """An element given by basis name or by coordinate vector."""
    if isinstance(raw, str):
        if raw in algebra.basis_names:
            return algebra.basis_element(raw)
        raise DocumentError(path, f"unknown basis name {raw!r}")
    _require(isinstance(raw, list), path, "expected a basis name or a coordinate list")
    _require(
        len(raw) == algebra.dim,
        path,
        f"coordinate vector must have length {algebra.dim}",
    )
    coords = [_parse_scalar(algebra.field, c, f"{path}[{i}]") for i, c in enumerate(raw)]
    return algebra.element(coords)


def _parse_algebra(fld: Field, raw, path: str = "algebra") -> Algebra:
    _require(isinstance(raw, dict), path, "expected an object")
    for key in raw:
        _require(key in ("dim", "basis", "products"), f"{path}.{key}", "unknown key")
    basis = raw.get("basis")
    _require(
        isinstance(basis, list) and basis and all(isinstance(b, str) and b for b in basis),
        f"{path}.basis",
        "expected a nonempty list of nonempty strings",
    )
    _require(len(set(basis)) == len(basis), f"{path}.basis", "duplicate basis names")
    if "dim" in raw:
        _require(
            raw["dim"] == len(basis),
            f"{path}.dim",
            f"dim {raw['dim']!r} does not match basis of length {len(basis)}",
        )
    index = {name: i for i, name in enumerate(basis)}
    products_raw = raw.get("products", {})
    _require(isinstance(products_raw, dict), f"{path}.products", "expected an object")
    products: dict[tuple[int, int], list] = {}
    seen: dict[tuple[int, int], tuple[str, tuple]] = {}
    for key, entry in products_raw.items():
        kpath = f"{path}.products.{key}"
        parts = key.split("*")
        _require(len(parts) == 2, kpath, "product keys look like \"e*a\"")
        left, right = parts[0].strip(), parts[1].strip()
        _require(left in index, kpath, f"unknown basis name {left!r}")
        _require(right in index, kpath, f"unknown basis name {right!r}")
        _require(isinstance(entry, dict), kpath, "expected an object of coordinates")
        vec = [fld.zero] * len(basis)
        for name, val in entry.items():
            _require(name in index, f"{kpath}.{name}", f"unknown basis name {name!r}")
            vec[index[name]] = _parse_scalar(fld, val, f"{kpath}.{name}")
        i, j = index[left], index[right]
        pair = (i, j) if i <= j else (j, i)
        if pair in seen:
            prev_key, prev_vec = seen[pair]
            if prev_vec != tuple(vec):
                raise DocumentError(
                    kpath,
                    f"commutativity conflict: differs from product {prev_key!r}",
                )
        seen[pair] = (key, tuple(vec))
        products[pair] = vec
    return Algebra(fld, basis, products)


def _parse_representation(
    fld: Field, algebra: Algebra, raw, path: str = "representation"
) -> tuple[Representation, tuple[str, ...] | None]:
    _require(isinstance(raw, dict), path, "expected an object")
    for key in raw:
        _require(
            key in ("module_dim", "module_basis", "matrices"),
            f"{path}.{key}",
            "unknown key",
        )
    m = raw.get("module_dim")
    _require(isinstance(m, int) and not isinstance(m, bool) and m >= 1, f"{path}.module_dim", "expected an integer >= 1")
    module_basis = None
    if "module_basis" in raw:
        mb = raw["module_basis"]
        _require(
            isinstance(mb, list) and len(mb) == m and all(isinstance(x, str) and x for x in mb),
            f"{path}.module_basis",
            f"expected {m} nonempty strings",
        )
        _require(len(set(mb)) == len(mb), f"{path}.module_basis", "duplicate names")
        module_basis = tuple(mb)
    mats_raw = raw.get("matrices")
    _require(isinstance(mats_raw, dict), f"{path}.matrices", "expected an object")
    for key in mats_raw:
        _require(
            key in algebra.basis_names,
            f"{path}.matrices.{key}",
            f"unknown basis name {key!r}",
        )
    matrices = []
    for name in algebra.basis_names:
        mpath = f"{path}.matrices.{name}"
        _require(name in mats_raw, mpath, "missing matrix for this basis element")
        grid = mats_raw[name]
        _require(
            isinstance(grid, list) and len(grid) == m,
            mpath,
            f"expected {m} rows",
        )
        rows = []
        for i, row in enumerate(grid):
            _require(
                isinstance(row, list) and len(row) == m,
                f"{mpath}[{i}]",
                f"expected {m} entries",
            )
            rows.append(
                [_parse_scalar(fld, v, f"{mpath}[{i}][{j}]") for j, v in enumerate(row)]
            )
        matrices.append(Matrix(fld, rows))
    return Representation(algebra, m, matrices), module_basis


def parse_document(raw, field_override: Field | None = None) -> WorkbenchDocument:
    """Validate a raw document (dict or JSON text) into workbench objects.

    `field_override` re-reads every scalar in the document over another
    field, which is how a rational corpus entry is reused over F_p.
    """
    if isinstance(raw, (str, bytes)):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise DocumentError("$", f"invalid JSON: {exc}") from None
    _require(isinstance(raw, dict), "$", "document must be a JSON object")
    known = {
        "name",
        "field",
        "algebra",
        "params",
        "idempotent",
        "representation",
        "notes",
        "expected",
    }
    for key in raw:
        _require(key in known, key, "unknown key")
    name = raw.get("name")
    if name is not None:
        _require(isinstance(name, str) and name, "name", "expected a nonempty string")
    if field_override is not None:
        fld = field_override
    else:
        spec = raw.get("field")
        _require(isinstance(spec, str), "field", "expected \"rational\" or \"fp:P\"")
        try:
            fld = field_from_spec(spec)
        except FieldError as exc:
            raise DocumentError("field", str(exc)) from None
    _require("algebra" in raw, "algebra", "missing")
    algebra = _parse_algebra(fld, raw["algebra"])
    params = None
    if "params" in raw and raw["params"] is not None:
        params = parse_params(fld, raw["params"])
    idempotent = None
    if "idempotent" in raw and raw["idempotent"] is not None:
        idempotent = parse_element(algebra, raw["idempotent"], "idempotent")
    representation = None
    module_basis = None
    if "representation" in raw and raw["representation"] is not None:
        representation, module_basis = _parse_representation(
            fld, algebra, raw["representation"]
        )
    notes = raw.get("notes", [])
    _require(
        isinstance(notes, list) and all(isinstance(x, str) for x in notes),
        "notes",
        "expected a list of strings",
    )
    expected = raw.get("expected")
    if expected is not None:
        _require(isinstance(expected, dict), "expected", "expected an object")
    return WorkbenchDocument(
        field=fld,
        algebra=algebra,
        name=name,
        params=params,
        idempotent=idempotent,
        representation=representation,
        module_basis=module_basis,
        notes=tuple(notes),
        expected=expected,
    )


def emit_document(doc: WorkbenchDocument) -> dict:
    """Canonical raw form: products keyed left-index <= right-index, scalars as strings."""
    fld = doc.field
    alg = doc.algebra
    out: dict = {}
    if doc.name is not None:
        out["name"] = doc.name
    out["field"] = fld.spec()
    products = {}
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            vec = alg.table_coords(i, j)
            if any(vec):
                entry = {
                    alg.basis_names[k]: fld.format(c)
                    for k, c in enumerate(vec)
                    if c
                }
                products[f"{alg.basis_names[i]}*{alg.basis_names[j]}"] = entry
    out["algebra"] = {
        "dim": alg.dim,
        "basis": list(alg.basis_names),
        "products": products,
    }
    if doc.params is not None:
        out["params"] = {
            "beta": fld.format(doc.params.beta),
            "gamma": fld.format(doc.params.gamma),
        }
    if doc.idempotent is not None:
        out["idempotent"] = [fld.format(c) for c in doc.idempotent.coords]
    if doc.representation is not None:
        rep = doc.representation
        mats = {
            name: [[fld.format(x) for x in row] for row in rep.matrices[i].rows]
            for i, name in enumerate(alg.basis_names)
        }
        block: dict = {"module_dim": rep.module_dim}
        if doc.module_basis is not None:
            block["module_basis"] = list(doc.module_basis)
        block["matrices"] = mats
        out["representation"] = block
    if doc.notes:
        out["notes"] = list(doc.notes)
    if doc.expected is not None:
        out["expected"] = doc.expected
    return out


def document_to_json(doc: WorkbenchDocument) -> str:
    return json.dumps(emit_document(doc), sort_keys=True, indent=2) + "\n"
