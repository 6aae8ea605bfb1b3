import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import lendkit
from lendkit.cat import poset_cat, walking_arrow
from lendkit.corpus import fixture_categories, fixture_shapes
from lendkit.ends import end_of
from lendkit.io import export_dot, parse_document, read_document, serialize
from lendkit.errors import ValidationError
from lendkit.io import ParseError
from lendkit.iso import is_isomorphic
from lendkit.twocat import hom_2functor, locally_discrete

DATA = Path(lendkit.__file__).parent / "data"


@pytest.mark.parametrize("name", sorted(fixture_categories()))
def test_category_round_trip(name):
    c = fixture_categories()[name]
    text = serialize("category", c)
    doc = parse_document(text)
    assert is_isomorphic(doc.value, c) is not None
    assert serialize("category", doc.value) == text


@pytest.mark.parametrize("name", sorted(fixture_shapes()))
def test_twocategory_round_trip(name):
    text = serialize("twocategory", fixture_shapes()[name])
    doc = parse_document(text)
    assert serialize("twocategory", doc.value) == text


def test_diagram_round_trip(corpus):
    for name, t in corpus.covariant[:6] + corpus.mixed[:6]:
        text = serialize("diagram", t)
        doc = parse_document(text)
        assert serialize("diagram", doc.value) == text, name


def test_missing_identity_is_located():
    d = json.loads(serialize("category", walking_arrow()))
    del d["payload"]["identities"]["1"]
    with pytest.raises(ParseError) as e:
        parse_document(json.dumps(d))
    assert "identit" in str(e.value)
    assert e.value.path == "payload.identities"


def test_unknown_version_rejected():
    d = json.loads(serialize("category", walking_arrow()))
    d["formatVersion"] = "2.0"
    with pytest.raises(ParseError) as e:
        parse_document(json.dumps(d))
    assert e.value.stage == "schema"


def test_unknown_field_rejected():
    d = json.loads(serialize("category", walking_arrow()))
    d["payload"]["extra"] = 1
    with pytest.raises(ParseError) as e:
        parse_document(json.dumps(d))
    assert e.value.stage == "schema"


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as e:
        parse_document('{\n  "kind": "category",\n  "payload": {,}\n}')
    assert e.value.stage == "syntax"
    assert e.value.line == 3 and e.value.column is not None


def test_duplicate_keys_rejected():
    with pytest.raises(ParseError) as e:
        parse_document('{"kind": "category", "kind": "category", "payload": {}}')
    assert e.value.stage == "syntax"


def test_broken_law_is_a_validation_error():
    d = json.loads(serialize("category", walking_arrow()))
    rows = d["payload"]["compose"]
    for row in rows:
        if row[:2] == ["11", "a"]:
            row[2] = "11"
    with pytest.raises(ParseError) as e:
        parse_document(json.dumps(d))
    assert e.value.stage == "validation" and e.value.laws


def test_shipped_fixture_is_the_hom_diagram():
    doc = read_document(DATA / "hom_arrow.json", "diagram")
    assert doc.value.variance == "mixed"
    e = end_of(doc.value)
    assert is_isomorphic(e.category, end_of(hom_2functor(locally_discrete(walking_arrow()))).category)
    assert read_document(DATA / "arrow.json", "twocategory").value.is_locally_discrete()


def test_wrong_kind_rejected():
    with pytest.raises(ParseError):
        read_document(DATA / "arrow.json", "diagram")


def test_dot_output():
    text = export_dot(walking_arrow(), "arrow")
    assert text.splitlines()[0] == 'digraph "arrow" {'
    assert '"0" -> "1" [label="a"];' in text
    assert text.endswith("}\n")


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.data())
def test_serialization_is_canonical(n, data):
    rel = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4))
    rel = [(str(a), str(b)) for a, b in rel if a < b]
    c = poset_cat([str(i) for i in range(n)], rel)
    shuffled = poset_cat([str(i) for i in reversed(range(n))], list(reversed(rel)))
    assert serialize("category", c) == serialize("category", shuffled)
