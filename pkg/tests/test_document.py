import json

import pytest

from kgraph import corpus
from kgraph.document import parse_document, serialise_document
from kgraph.errors import DocumentSyntaxError, DuplicateIdentifier, SchemaError


@pytest.mark.parametrize("name", corpus.FILES)
def test_shipped_files_round_trip(name):
    text = corpus.path(name).read_text(encoding="utf-8")
    doc = parse_document(text)
    again = serialise_document(doc)
    assert again == text
    assert parse_document(again) == doc


@pytest.mark.parametrize("name", corpus.FILES)
def test_shipped_files_match_builders(name):
    assert corpus.load(name) == corpus.documents()[name]


def test_sphere_textile_kind():
    doc = corpus.load("sphere.tex.json")
    assert doc.kind == "textile"
    assert doc.value.F.edge_names == ("alpha", "beta", "gamma", "delta")


def test_missing_q():
    data = json.loads(corpus.path("extex1.tex.json").read_text())
    del data["q"]
    with pytest.raises(SchemaError) as exc:
        parse_document(json.dumps(data))
    assert exc.value.pointer == "q"


def test_nested_pointer():
    data = json.loads(corpus.path("extex1.tex.json").read_text())
    del data["E"]["edges"][0]["range"]
    with pytest.raises(SchemaError) as exc:
        parse_document(json.dumps(data))
    assert exc.value.pointer == "E/edges/0/range"


def test_deduce_flag():
    data = json.loads(corpus.path("sphere.cg.json").read_text())
    data["squares"] = "deduce"
    doc = parse_document(json.dumps(data))
    assert doc.deduce and doc.value[1] is None
    assert json.loads(serialise_document(doc))["squares"] == "deduce"


def test_syntax_error_position():
    with pytest.raises(DocumentSyntaxError) as exc:
        parse_document('{\n  "kind": "textile",\n  oops\n}')
    assert exc.value.line == 3


def test_unknown_kind():
    with pytest.raises(SchemaError) as exc:
        parse_document('{"kind": "hypergraph"}')
    assert exc.value.pointer == "kind"


def test_invariants_checked_after_schema():
    text = json.dumps({"kind": "directed_graph", "vertices": ["u", "u"], "edges": []})
    with pytest.raises(DuplicateIdentifier):
        parse_document(text)
