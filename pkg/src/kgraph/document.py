"""JSON interchange format for directed graphs, coloured graphs with squares and
textile systems.

Parsing checks the JSON syntax, then the schema, then the mathematical
invariants of the decoded object.  Serialisation uses a fixed key order so the
same object always produces the same bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import jsonschema

from .coloured import ColouredGraph, SquareSet, make_square_set, validate_coloured
from .errors import DocumentSyntaxError, SchemaError
from .graphs import DirectedGraph, validate_graph
from .textile import TextileSystem, validate_textile

KINDS = ("directed_graph", "coloured_graph", "textile")

_ident = {"type": "string", "minLength": 1}
_graph_props = {
    "vertices": {"type": "array", "items": _ident},
    "edges": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["name", "range", "source"],
            "properties": {"name": _ident, "range": _ident, "source": _ident},
            "additionalProperties": False,
        },
    },
}
_graph = {"type": "object", "required": ["vertices", "edges"], "properties": _graph_props}
_map = {"type": "object", "additionalProperties": _ident}
_morphism = {"type": "object", "required": ["vertices", "edges"],
             "properties": {"vertices": _map, "edges": _map}, "additionalProperties": False}
_square = {
    "type": "object",
    "required": ["i", "j", "f", "g", "gp", "fp"],
    "properties": {"i": {"type": "integer"}, "j": {"type": "integer"}, "f": _ident, "g": _ident,
                   "gp": _ident, "fp": _ident, "name": _ident},
    "additionalProperties": False,
}

SCHEMAS: dict[str, dict] = {
    "directed_graph": {
        "type": "object",
        "required": ["kind", "vertices", "edges"],
        "properties": {"kind": {"const": "directed_graph"}, **_graph_props},
        "additionalProperties": False,
    },
    "coloured_graph": {
        "type": "object",
        "required": ["kind", "vertices", "edges", "k", "colours", "squares"],
        "properties": {
            "kind": {"const": "coloured_graph"},
            **_graph_props,
            "k": {"type": "integer", "minimum": 1},
            "colours": {"type": "object", "additionalProperties": {"type": "integer"}},
            "squares": {"oneOf": [{"const": "deduce"}, {"type": "array", "items": _square}]},
        },
        "additionalProperties": False,
    },
    "textile": {
        "type": "object",
        "required": ["kind", "E", "F", "p", "q"],
        "properties": {"kind": {"const": "textile"}, "E": _graph, "F": _graph,
                       "p": _morphism, "q": _morphism},
        "additionalProperties": False,
    },
}


@dataclass(frozen=True)
class Document:
    """``value`` is a DirectedGraph, a ``(ColouredGraph, SquareSet | None)`` pair
    (``None`` with ``deduce`` set) or a TextileSystem."""

    kind: str
    value: Any
    deduce: bool = False


def _pointer(err: jsonschema.ValidationError) -> str:
    path = [str(x) for x in err.absolute_path]
    if err.validator == "required" and isinstance(err.instance, dict):
        missing = [k for k in err.validator_value if k not in err.instance]
        if missing:
            path.append(missing[0])
    return "/".join(path)


def _check_schema(data, schema) -> None:
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(data),
                    key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        err = errors[0]
        raise SchemaError(_pointer(err), err.message)


def _graph_from(data: dict) -> DirectedGraph:
    return validate_graph(data["vertices"], [(e["name"], e["range"], e["source"])
                                             for e in data["edges"]])


def document_from_data(data: Any) -> Document:
    if not isinstance(data, dict):
        raise SchemaError("", "top level must be an object")
    if "kind" not in data:
        raise SchemaError("kind", "'kind' is a required property")
    kind = data["kind"]
    if kind not in KINDS:
        raise SchemaError("kind", f"unknown kind {kind!r}")
    _check_schema(data, SCHEMAS[kind])
    if kind == "directed_graph":
        return Document(kind, _graph_from(data))
    if kind == "coloured_graph":
        cg = validate_coloured(_graph_from(data), data["k"], data["colours"])
        if data["squares"] == "deduce":
            return Document(kind, (cg, None), deduce=True)
        return Document(kind, (cg, make_square_set(cg, data["squares"])))
    E, F = _graph_from(data["E"]), _graph_from(data["F"])
    maps = [(data[m]["vertices"], data[m]["edges"]) for m in ("p", "q")]
    return Document(kind, validate_textile(E, F, *maps))


def parse_document(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    return document_from_data(data)


def load_document(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


# -- serialisation -----------------------------------------------------------

def graph_data(g: DirectedGraph) -> dict:
    return {"vertices": list(g.vertices),
            "edges": [{"name": e.name, "range": e.range, "source": e.source} for e in g.edges]}


def square_data(s) -> dict:
    out = {"i": s.i, "j": s.j, "f": s.f, "g": s.g, "gp": s.gp, "fp": s.fp}
    if s.name is not None:
        out["name"] = s.name
    return out


def coloured_data(cg: ColouredGraph, C: SquareSet | None) -> dict:
    return {"kind": "coloured_graph", **graph_data(cg.graph), "k": cg.k,
            "colours": {e: cg.colour[e] for e in cg.graph.edge_names},
            "squares": "deduce" if C is None else [square_data(s) for s in C]}


def textile_data(T: TextileSystem) -> dict:
    def morphism(m):
        return {"vertices": {v: m.vertex(v) for v in T.F.vertices},
                "edges": {f: m(f) for f in T.F.edge_names}}

    return {"kind": "textile", "E": graph_data(T.E), "F": graph_data(T.F),
            "p": morphism(T.p), "q": morphism(T.q)}


def document_data(doc: Document) -> dict:
    if doc.kind == "directed_graph":
        return {"kind": "directed_graph", **graph_data(doc.value)}
    if doc.kind == "coloured_graph":
        cg, C = doc.value
        return coloured_data(cg, None if doc.deduce else C)
    return textile_data(doc.value)


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def serialise_document(doc: Document) -> str:
    return dumps(document_data(doc))


def textile_document(T: TextileSystem) -> Document:
    return Document("textile", T)


def coloured_document(cg: ColouredGraph, C: SquareSet | None) -> Document:
    return Document("coloured_graph", (cg, C), deduce=C is None)
