"""Instance files: JSON documents holding quantales, categories, distributors and spaces.

Shape errors are reported with JSON-pointer paths.  Axiom failures are not
raised here; ``validate_instance`` collects them into reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import jsonschema
import numpy as np

from . import quantale as qmod
from .dist import Distributor, validate_distributor
from .quantale import QuantaleTable, validate_quantale
from .report import StructureError, ValidationReport
from .topo import FinTop
from .vcat import VCategory, validate_vcategory

SCHEMA_VERSION = 1

_name = {"type": ["string", "number"]}
_matrix = {"type": "array", "items": {"type": "array"}}

QUANTALE_SCHEMA = {
    "oneOf": [
        {"type": "string"},
        {"type": "object", "required": ["builtin"], "additionalProperties": False,
         "properties": {
             "builtin": {"enum": ["two", "lukasiewicz", "chain_plus", "frame_of_downsets"]},
             "n": {"type": "integer", "minimum": 1},
             "poset": {"type": "object", "required": ["elements", "leq"],
                       "properties": {"elements": {"type": "array", "items": _name},
                                      "leq": _matrix}}}},
        {"type": "object", "required": ["elements", "leq", "tensor", "unit"],
         "additionalProperties": False,
         "properties": {"elements": {"type": "array", "items": _name, "minItems": 1},
                        "leq": _matrix, "tensor": _matrix, "unit": _name}},
    ]
}

CATEGORY_SCHEMA = {
    "type": "object", "required": ["quantale"], "additionalProperties": False,
    "properties": {
        "quantale": QUANTALE_SCHEMA,
        "objects": {"type": "array", "items": _name},
        "structure": _matrix,
        "leq": _matrix,
        "builtin": {"enum": ["self"]},
    },
    "oneOf": [{"required": ["objects", "structure"]}, {"required": ["objects", "leq"]},
              {"required": ["builtin"]}],
}

DISTRIBUTOR_SCHEMA = {
    "type": "object", "required": ["source", "target", "matrix"], "additionalProperties": False,
    "properties": {"source": {"type": "string"}, "target": {"type": "string"}, "matrix": _matrix},
}

SPACE_SCHEMA = {
    "type": "object", "required": ["points", "opens"], "additionalProperties": False,
    "properties": {"points": {"type": "array", "items": _name},
                   "opens": {"type": "array",
                             "items": {"type": "array", "items": {"type": "integer"}}}},
}

INSTANCE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object", "additionalProperties": False,
    "properties": {
        "version": {"const": SCHEMA_VERSION},
        "quantales": {"type": "object", "additionalProperties": QUANTALE_SCHEMA},
        "categories": {"type": "object", "additionalProperties": CATEGORY_SCHEMA},
        "distributors": {"type": "object", "additionalProperties": DISTRIBUTOR_SCHEMA},
        "spaces": {"type": "object", "additionalProperties": SPACE_SCHEMA},
        "ideals": {"type": "string"},
    },
}


class InstanceError(StructureError):
    def __init__(self, pointer: str, message: str):
        self.pointer = pointer or "/"
        super().__init__(f"{self.pointer}: {message}")


def _ptr(*parts) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in parts)


@dataclass
class Instance:
    quantales: dict = field(default_factory=dict)
    categories: dict = field(default_factory=dict)
    distributors: dict = field(default_factory=dict)
    spaces: dict = field(default_factory=dict)
    ideals: str | None = None


def _square(m, n: int, where: str) -> None:
    if len(m) != n:
        raise InstanceError(where, f"expected {n} rows, got {len(m)}")
    for i, row in enumerate(m):
        if len(row) != n:
            raise InstanceError(_ptr_join(where, i), f"expected {n} entries, got {len(row)}")


def _ptr_join(base: str, *parts) -> str:
    return base + _ptr(*parts)


def _element(q: QuantaleTable, v, where: str) -> int:
    try:
        return q.idx(str(v))  # identifiers, never positions
    except StructureError:
        raise InstanceError(where, f"unknown quantale element {v!r}") from None


def _elements_matrix(q, m, rows: int, cols: int, where: str) -> np.ndarray:
    if len(m) != rows:
        raise InstanceError(where, f"expected {rows} rows, got {len(m)}")
    out = np.empty((rows, cols), dtype=np.int64)
    for i, row in enumerate(m):
        if len(row) != cols:
            raise InstanceError(_ptr_join(where, i), f"expected {cols} entries, got {len(row)}")
        for j, v in enumerate(row):
            out[i, j] = _element(q, v, _ptr_join(where, i, j))
    return out


def parse_quantale(doc, where: str = "", named: dict | None = None) -> QuantaleTable:
    if isinstance(doc, str):
        if named and doc in named:
            return named[doc]
        if doc == "two":
            return qmod.two()
        raise InstanceError(where, f"unknown quantale reference {doc!r}")
    if "builtin" in doc:
        b = doc["builtin"]
        try:
            if b == "frame_of_downsets":
                if "poset" not in doc:
                    raise InstanceError(where, "frame_of_downsets needs 'poset'")
                p = doc["poset"]
                _square(p["leq"], len(p["elements"]), _ptr_join(where, "poset", "leq"))
                return qmod.frame_of_downsets(p["elements"], np.asarray(p["leq"], dtype=bool))
            return qmod.builtin_quantales(b, doc.get("n"))
        except ValueError as e:
            if isinstance(e, InstanceError):
                raise
            raise InstanceError(where, str(e)) from None
    n = len(doc["elements"])
    _square(doc["leq"], n, _ptr_join(where, "leq"))
    _square(doc["tensor"], n, _ptr_join(where, "tensor"))
    names = [str(e) for e in doc["elements"]]
    tensor = []
    for i, row in enumerate(doc["tensor"]):
        out = []
        for j, v in enumerate(row):
            if str(v) not in names:
                raise InstanceError(_ptr_join(where, "tensor", i, j), f"unknown element {v!r}")
            out.append(names.index(str(v)))
        tensor.append(out)
    if str(doc["unit"]) not in names:
        raise InstanceError(_ptr_join(where, "unit"), f"unknown element {doc['unit']!r}")
    try:
        return QuantaleTable(names, np.asarray(doc["leq"], dtype=bool), tensor, str(doc["unit"]))
    except StructureError as e:
        raise InstanceError(where, str(e)) from None


def parse_category(doc, where: str = "", named: dict | None = None) -> VCategory:
    q = parse_quantale(doc["quantale"], _ptr_join(where, "quantale"), named)
    if "builtin" in doc:
        return VCategory.of_quantale(q)
    objs = doc["objects"]
    if "leq" in doc:
        _square(doc["leq"], len(objs), _ptr_join(where, "leq"))
        return VCategory.from_preorder(q, objs, np.asarray(doc["leq"], dtype=bool))
    s = _elements_matrix(q, doc["structure"], len(objs), len(objs), _ptr_join(where, "structure"))
    try:
        return VCategory(q, objs, s)
    except StructureError as e:
        raise InstanceError(where, str(e)) from None


def parse_space(doc, where: str = "") -> FinTop:
    try:
        return FinTop(doc["points"], doc["opens"])
    except StructureError as e:
        raise InstanceError(_ptr_join(where, "opens"), str(e)) from None


def parse_instance(doc) -> Instance:
    validator = jsonschema.Draft202012Validator(INSTANCE_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        e = errors[0]
        raise InstanceError(_ptr(*e.absolute_path), e.message)
    inst = Instance(ideals=doc.get("ideals"))
    for name, q in doc.get("quantales", {}).items():
        inst.quantales[name] = parse_quantale(q, _ptr("quantales", name), inst.quantales)
    for name, c in doc.get("categories", {}).items():
        inst.categories[name] = parse_category(c, _ptr("categories", name), inst.quantales)
    for name, d in doc.get("distributors", {}).items():
        where = _ptr("distributors", name)
        ends = []
        for end in ("source", "target"):
            if d[end] not in inst.categories:
                raise InstanceError(_ptr_join(where, end), f"unknown category {d[end]!r}")
            ends.append(inst.categories[d[end]])
        src, tgt = ends
        if src.quantale != tgt.quantale:
            raise InstanceError(where, "source and target are over different quantales")
        m = _elements_matrix(src.quantale, d["matrix"], len(src), len(tgt),
                             _ptr_join(where, "matrix"))
        inst.distributors[name] = Distributor(src, tgt, m)
    for name, s in doc.get("spaces", {}).items():
        inst.spaces[name] = parse_space(s, _ptr("spaces", name))
    return inst


def load_instance(path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InstanceError("", f"cannot read {path}: {e.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError("", f"invalid JSON at line {e.lineno}: {e.msg}") from None
    return parse_instance(doc)


def validate_instance(inst: Instance) -> dict:
    """Axiom reports for every embedded object, keyed by JSON pointer."""
    reports: dict[str, ValidationReport] = {}
    seen = {}
    for name, q in inst.quantales.items():
        reports[_ptr("quantales", name)] = validate_quantale(q)
        seen[q] = True
    for name, X in inst.categories.items():
        if X.quantale not in seen:
            reports[_ptr("categories", name, "quantale")] = validate_quantale(X.quantale)
            seen[X.quantale] = True
        reports[_ptr("categories", name)] = validate_vcategory(X)
    for name, d in inst.distributors.items():
        reports[_ptr("distributors", name)] = validate_distributor(d)
    for name, sp in inst.spaces.items():
        rep = ValidationReport("space")
        rep.add("topology", True)
        reports[_ptr("spaces", name)] = rep
    return reports


def category_to_json(X: VCategory) -> dict:
    q = X.quantale
    return {"quantale": _quantale_to_json(q), "objects": list(X.objects),
            "structure": [[q.name(v) for v in row] for row in X.structure]}


def _quantale_to_json(q: QuantaleTable):
    return {"elements": list(q.elements), "leq": q.leq.astype(bool).tolist(),
            "tensor": [[q.name(v) for v in row] for row in q.tensor], "unit": q.name(q.unit)}
