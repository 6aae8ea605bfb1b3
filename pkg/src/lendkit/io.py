"""JSON interchange format: a versioned envelope around category, 2-category,
functor, diagram, wedge, coherence and report payloads.

Every document is parsed strictly (unknown fields and duplicate keys are
rejected), checked against its JSON schema, decoded, and then run through the
matching law validator.  Serialization is canonical: keys are sorted and every
list is ordered by id, so equal values give byte-identical text.
"""
import json
from pathlib import Path

import jsonschema

from .cat import FinCat, Funct, NatT, canon, check_fin_cat, check_functor, materialize
from .errors import LendkitError, ValidationError
from .twocat import Fin2Cat, TwoFunctor, check_2cat, check_2functor

FORMAT_VERSION = "1.0"
KINDS = ("category", "twocategory", "functor", "diagram", "wedge", "coherence", "report")


class ParseError(LendkitError):
    """A document that cannot be read.

    ``stage`` is ``"syntax"``, ``"schema"`` or ``"validation"``; syntax errors
    carry ``line`` and ``column``, schema errors a dotted ``path``, and
    validation errors the list of broken laws in ``laws``.
    """

    def __init__(self, stage, message, line=None, column=None, path=None, laws=None):
        self.stage = stage
        self.line = line
        self.column = column
        self.path = path
        self.laws = list(laws or [])
        where = ""
        if line is not None:
            where = f" at line {line}, column {column}"
        elif path:
            where = f" at {path}"
        super().__init__(f"{stage} error{where}: {message}")


class DocumentEnvelope:
    """A parsed document: its kind, canonical payload and decoded value."""

    def __init__(self, kind, payload, value=None, format_version=FORMAT_VERSION):
        self.format_version = format_version
        self.kind = kind
        self.payload = payload
        self.value = value

    def to_json(self):
        return {"formatVersion": self.format_version, "kind": self.kind, "payload": self.payload}


# ---------------------------------------------------------------------------
# schemas

_ID = {"type": "string"}
_IDS = {"type": "array", "items": _ID}
_CELL = {
    "type": "object",
    "properties": {"id": _ID, "src": _ID, "dst": _ID},
    "required": ["id", "src", "dst"],
    "additionalProperties": False,
}
_TRIPLES = {"type": "array", "items": {"type": "array", "items": _ID, "minItems": 3, "maxItems": 3}}
_IDMAP = {"type": "object", "additionalProperties": _ID}
_MAP = {
    "type": "object",
    "properties": {"objects": _IDMAP, "morphisms": _IDMAP},
    "required": ["objects", "morphisms"],
    "additionalProperties": False,
}

_CATEGORY = {
    "type": "object",
    "properties": {
        "objects": _IDS,
        "morphisms": {"type": "array", "items": _CELL},
        "identities": _IDMAP,
        "compose": _TRIPLES,
        "construction": {"type": "string"},
    },
    "required": ["objects", "morphisms", "identities", "compose"],
    "additionalProperties": False,
}

_TWOCATEGORY = {
    "type": "object",
    "properties": {
        "objects": _IDS,
        "oneCells": {"type": "array", "items": _CELL},
        "twoCells": {"type": "array", "items": _CELL},
        "identities": _IDMAP,
        "identityTwoCells": _IDMAP,
        "compose": _TRIPLES,
        "vcomp": _TRIPLES,
        "hcomp": _TRIPLES,
    },
    "required": ["objects", "oneCells", "twoCells", "identities", "identityTwoCells", "compose", "vcomp",
                 "hcomp"],
    "additionalProperties": False,
}

_FUNCTOR = {
    "type": "object",
    "properties": {"domain": _CATEGORY, "codomain": _CATEGORY, "objects": _IDMAP, "morphisms": _IDMAP},
    "required": ["domain", "codomain", "objects", "morphisms"],
    "additionalProperties": False,
}

_DIAGRAM = {
    "type": "object",
    "properties": {
        "shape": {"oneOf": [_ID, _TWOCATEGORY]},
        "variance": {"enum": ["covariant", "mixed"]},
        "onObjects": {"type": "object", "additionalProperties": _CATEGORY},
        "onOneCells": {"type": "object", "additionalProperties": _MAP},
        "onTwoCells": {"type": "object", "additionalProperties": _IDMAP},
    },
    "required": ["shape", "variance", "onObjects", "onOneCells", "onTwoCells"],
    "additionalProperties": False,
}

_WEDGE = {
    "type": "object",
    "properties": {
        "construction": {"enum": ["end", "descent", "coend"]},
        "mode": {"enum": ["strict", "pseudo", "lax", "oplax"]},
        "category": _CATEGORY,
        "components": {"type": "object", "additionalProperties": _MAP},
        "cells": {"type": "object", "additionalProperties": _IDMAP},
    },
    "required": ["construction", "mode", "category", "components", "cells"],
    "additionalProperties": False,
}

_COHERENCE = {
    "type": "object",
    "properties": {
        "x1": _CATEGORY,
        "x2": _CATEGORY,
        "x3": _CATEGORY,
        "functors": {
            "type": "object",
            "properties": {k: _MAP for k in "vwirst"},
            "required": list("vwirst"),
            "additionalProperties": False,
        },
    },
    "required": ["x1", "x2", "x3", "functors"],
    "additionalProperties": False,
}

_REPORT = {
    "type": "object",
    "properties": {"title": {"type": "string"}, "ok": {"type": "boolean"}, "data": {}},
    "required": ["title", "ok", "data"],
    "additionalProperties": False,
}

PAYLOAD_SCHEMAS = {
    "category": _CATEGORY,
    "twocategory": _TWOCATEGORY,
    "functor": _FUNCTOR,
    "diagram": _DIAGRAM,
    "wedge": _WEDGE,
    "coherence": _COHERENCE,
    "report": _REPORT,
}

ENVELOPE_SCHEMA = {
    "type": "object",
    "properties": {
        "formatVersion": {"type": "string"},
        "kind": {"enum": list(KINDS)},
        "payload": {"type": "object"},
    },
    "required": ["formatVersion", "kind", "payload"],
    "additionalProperties": False,
}


def _path(prefix, error):
    parts = [prefix] + [str(p) for p in error.absolute_path]
    if error.validator == "required":
        # name the missing field itself
        missing = error.message.split("'")[1] if "'" in error.message else ""
        parts.append(missing)
    elif error.validator == "additionalProperties" and "'" in error.message:
        parts.append(error.message.split("'")[1])
    return ".".join(p for p in parts if p)


def _schema_check(schema, doc, prefix):
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: (list(map(str, e.absolute_path)), e.message))
    if errors:
        e = errors[0]
        raise ParseError("schema", e.message, path=_path(prefix, e))


# ---------------------------------------------------------------------------
# encoding


def _cells(rows):
    return sorted(({"id": i, "src": s, "dst": d} for i, s, d in rows), key=lambda r: r["id"])


def _triples(table):
    return sorted([g, f, h] for (g, f), h in table.items())


def category_payload(c, construction=None):
    c = materialize(c)
    out = {
        "objects": sorted(c.objects),
        "morphisms": _cells((m, c.src(m), c.dst(m)) for m in c.morphisms),
        "identities": {o: c.identity(o) for o in c.objects},
        "compose": _triples(c.table),
    }
    if construction is not None:
        out["construction"] = construction
    return out


def twocategory_payload(a):
    return {
        "objects": sorted(a.objects),
        "oneCells": _cells((f, s, d) for f, (s, d) in a.one.items()),
        "twoCells": _cells((x, s, d) for x, (s, d) in a.two.items()),
        "identities": dict(a.id_one),
        "identityTwoCells": dict(a.id_two),
        "compose": _triples(a.comp_one),
        "vcomp": _triples(a.vcomp),
        "hcomp": _triples(a.hcomp),
    }


def _map_payload(f):
    d = f.domain
    return {"objects": {o: f.fobj(o) for o in d.objects}, "morphisms": {m: f.fmor(m) for m in d.morphisms}}


def functor_payload(f):
    return {"domain": category_payload(f.domain), "codomain": category_payload(f.codomain), **_map_payload(f)}


def diagram_payload(t):
    mixed = t.base is not None
    shape = t.base if mixed else t.shape
    return {
        "shape": twocategory_payload(shape),
        "variance": "mixed" if mixed else "covariant",
        "onObjects": {o: category_payload(t.value(o)) for o in t.shape.objects},
        "onOneCells": {f: _map_payload(t.one(f)) for f in t.shape.one},
        "onTwoCells": {x: {o: t.two(x).at(o) for o in t.two(x).source.domain.objects} for x in t.shape.two},
    }


def wedge_payload(category, components, cells, mode="lax", construction="end"):
    """``components[A]`` are functors out of (or into) ``category``; ``cells[f]`` transformations."""
    return {
        "construction": construction,
        "mode": mode,
        "category": category_payload(category),
        "components": {A: _map_payload(c) for A, c in components.items()},
        "cells": {f: {o: n.at(o) for o in n.source.domain.objects} for f, n in cells.items()},
    }


def end_payload(e, construction="end"):
    return wedge_payload(e.category, e.wedge.components, e.wedge.structure, e.mode, construction)


def coherence_payload(cd):
    """Tabulate the three products and six functors; only feasible for tiny diagrams."""
    def table(f):
        dom = f.domain
        return {"objects": {canon(o): canon(f.fobj(o)) for o in dom.objects},
                "morphisms": {canon(m): canon(f.fmor(m)) for a in dom.objects for b in dom.objects
                              for m in dom.hom(a, b)}}

    return {
        "x1": category_payload(cd.x1), "x2": category_payload(cd.x2), "x3": category_payload(cd.x3),
        "functors": {k: table(getattr(cd, k)) for k in "vwirst"},
    }


def report_payload(title, ok, data):
    return {"title": title, "ok": bool(ok), "data": data}


def to_document(kind, value, **kw):
    """Wrap an engine value as a :class:`DocumentEnvelope` of the given kind."""
    encoders = {
        "category": category_payload,
        "twocategory": twocategory_payload,
        "functor": functor_payload,
        "diagram": diagram_payload,
    }
    if kind == "report":
        return DocumentEnvelope(kind, report_payload(**kw))
    if kind == "wedge":
        return DocumentEnvelope(kind, end_payload(value, **kw), value)
    if kind == "coherence":
        return DocumentEnvelope(kind, coherence_payload(value), value)
    return DocumentEnvelope(kind, encoders[kind](value, **kw), value)


def serialize_document(doc):
    """Canonical JSON text of a document."""
    return json.dumps(doc.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def serialize(kind, value, **kw):
    return serialize_document(to_document(kind, value, **kw))


# ---------------------------------------------------------------------------
# decoding


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ValueError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _load(text):
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as e:
        raise ParseError("syntax", e.msg, line=e.lineno, column=e.colno) from None
    except ValueError as e:
        raise ParseError("syntax", str(e)) from None


def _refs(path, ids, known, what):
    for i in ids:
        if i not in known:
            raise ParseError("schema", f"unknown {what} {i!r}", path=path)


def decode_category(p, path="payload"):
    objs = p["objects"]
    mors = [(r["id"], r["src"], r["dst"]) for r in p["morphisms"]]
    oset = set(objs)
    mset = {m for m, _, _ in mors}
    for m, s, d in mors:
        _refs(f"{path}.morphisms", (s, d), oset, "object")
    for o in objs:
        if o not in p["identities"]:
            raise ParseError("schema", f"missing identity for object {o!r}", path=f"{path}.identities")
    _refs(f"{path}.identities", p["identities"], oset, "object")
    _refs(f"{path}.identities", p["identities"].values(), mset, "morphism")
    table = {}
    for g, f, h in p["compose"]:
        _refs(f"{path}.compose", (g, f, h), mset, "morphism")
        table[(g, f)] = h
    return FinCat(objs, mors, p["identities"], table)


def decode_twocategory(p, path="payload"):
    objs = p["objects"]
    ones = [(r["id"], r["src"], r["dst"]) for r in p["oneCells"]]
    twos = [(r["id"], r["src"], r["dst"]) for r in p["twoCells"]]
    oset = set(objs)
    fset = {f for f, _, _ in ones}
    xset = {x for x, _, _ in twos}
    for f, s, d in ones:
        _refs(f"{path}.oneCells", (s, d), oset, "object")
    for x, s, d in twos:
        _refs(f"{path}.twoCells", (s, d), fset, "1-cell")
    for o in objs:
        if o not in p["identities"]:
            raise ParseError("schema", f"missing identity for object {o!r}", path=f"{path}.identities")
    for f in fset:
        if f not in p["identityTwoCells"]:
            raise ParseError("schema", f"missing identity 2-cell for {f!r}", path=f"{path}.identityTwoCells")
    _refs(f"{path}.identities", p["identities"].values(), fset, "1-cell")
    _refs(f"{path}.identityTwoCells", p["identityTwoCells"].values(), xset, "2-cell")

    def table(rows, known, name):
        out = {}
        for g, f, h in rows:
            _refs(f"{path}.{name}", (g, f, h), known, "cell")
            out[(g, f)] = h
        return out

    return Fin2Cat(objs, ones, twos, p["identities"], p["identityTwoCells"], table(p["compose"], fset, "compose"),
                   table(p["vcomp"], xset, "vcomp"), table(p["hcomp"], xset, "hcomp"))


def _decode_map(p, dom, cod, path):
    _refs(f"{path}.objects", p["objects"].values(), set(cod.objects), "object")
    _refs(f"{path}.morphisms", p["morphisms"].values(), set(cod.morphisms), "morphism")
    for o in dom.objects:
        if o not in p["objects"]:
            raise ParseError("schema", f"no image for object {o!r}", path=f"{path}.objects")
    for m in dom.morphisms:
        if m not in p["morphisms"]:
            raise ParseError("schema", f"no image for morphism {m!r}", path=f"{path}.morphisms")
    return Funct(dom, cod, dict(p["objects"]), dict(p["morphisms"]))


def decode_functor(p, path="payload"):
    dom = decode_category(p["domain"], f"{path}.domain")
    cod = decode_category(p["codomain"], f"{path}.codomain")
    return _decode_map(p, dom, cod, path)


def decode_diagram(p, path="payload", resolve=None):
    shape_p = p["shape"]
    if isinstance(shape_p, str):
        if resolve is None:
            raise ParseError("schema", f"cannot resolve shape reference {shape_p!r}", path=f"{path}.shape")
        base = resolve(shape_p)
    else:
        base = decode_twocategory(shape_p, f"{path}.shape")
    mixed = p["variance"] == "mixed"
    shape = base.mixed() if mixed else base
    vals = {}
    for o in shape.objects:
        if o not in p["onObjects"]:
            raise ParseError("schema", f"no value for object {o!r}", path=f"{path}.onObjects")
        vals[o] = decode_category(p["onObjects"][o], f"{path}.onObjects.{o}")
    _refs(f"{path}.onObjects", p["onObjects"], set(shape.objects), "object")
    on_one = {}
    for f, (s, d) in shape.one.items():
        if f not in p["onOneCells"]:
            raise ParseError("schema", f"no value for 1-cell {f!r}", path=f"{path}.onOneCells")
        on_one[f] = _decode_map(p["onOneCells"][f], vals[s], vals[d], f"{path}.onOneCells.{f}")
    _refs(f"{path}.onOneCells", p["onOneCells"], set(shape.one), "1-cell")
    on_two = {}
    for x, (f, g) in shape.two.items():
        if x not in p["onTwoCells"]:
            raise ParseError("schema", f"no value for 2-cell {x!r}", path=f"{path}.onTwoCells")
        comps = p["onTwoCells"][x]
        dom = vals[shape.src(f)]
        for o in dom.objects:
            if o not in comps:
                raise ParseError("schema", f"no component at {o!r}", path=f"{path}.onTwoCells.{x}")
        _refs(f"{path}.onTwoCells.{x}", comps.values(), set(vals[shape.dst(f)].morphisms), "morphism")
        on_two[x] = NatT(on_one[f], on_one[g], dict(comps))
    _refs(f"{path}.onTwoCells", p["onTwoCells"], set(shape.two), "2-cell")
    return TwoFunctor(shape, vals, on_one, on_two, base if mixed else None), base


def _validated(what, violations):
    if violations:
        raise ParseError("validation", "; ".join(violations[:5]), laws=violations)


def parse_document(text, resolve=None):
    """Parse and validate a document.

    ``resolve(ref)`` returns the :class:`Fin2Cat` behind a shape reference in a
    diagram document.  Raises :class:`ParseError` on any problem.
    """
    doc = _load(text)
    if not isinstance(doc, dict):
        raise ParseError("schema", "a document must be a JSON object", path="")
    version = doc.get("formatVersion")
    if version is not None and version != FORMAT_VERSION:
        raise ParseError("schema", f"unsupported formatVersion {version!r}", path="formatVersion")
    _schema_check(ENVELOPE_SCHEMA, doc, "")
    kind, p = doc["kind"], doc["payload"]
    _schema_check(PAYLOAD_SCHEMAS[kind], p, "payload")
    value = None
    if kind == "category":
        value = decode_category(p)
        _validated(kind, check_fin_cat(value))
    elif kind == "twocategory":
        value = decode_twocategory(p)
        _validated(kind, check_2cat(value))
    elif kind == "functor":
        value = decode_functor(p)
        _validated("domain", check_fin_cat(value.domain))
        _validated("codomain", check_fin_cat(value.codomain))
        _validated(kind, check_functor(value))
    elif kind == "diagram":
        value, base = decode_diagram(p, resolve=resolve)
        _validated("shape", check_2cat(base))
        for o in value.shape.objects:
            _validated(f"value at {o}", check_fin_cat(value.value(o)))
        _validated(kind, check_2functor(value))
    elif kind in ("wedge", "coherence"):
        cat = decode_category(p["category"] if kind == "wedge" else p["x1"], "payload")
        _validated("category", check_fin_cat(cat))
        value = cat
    return DocumentEnvelope(kind, p, value, version)


def read_document(path, expect=None, shape_path=None):
    """Read a document from disk; shape references resolve relative to the file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError("syntax", f"not UTF-8: {e.reason}") from None

    def resolve(ref):
        target = Path(shape_path) if shape_path else path.parent / ref
        doc = read_document(target, expect="twocategory")
        return doc.value

    doc = parse_document(text, resolve)
    if expect is not None and doc.kind not in ((expect,) if isinstance(expect, str) else expect):
        raise ParseError("schema", f"expected a {expect} document, got {doc.kind}", path="kind")
    return doc


def export_dot(c, name="C"):
    """Graphviz text: a node per object and an edge per non-identity morphism, in sorted order."""
    c = materialize(c)
    q = json.dumps
    lines = [f"digraph {q(name)} {{"]
    for o in sorted(c.objects):
        lines.append(f"  {q(o)};")
    edges = sorted((c.src(m), c.dst(m), m) for m in c.morphisms if not c.is_identity(m))
    for s, d, m in edges:
        lines.append(f"  {q(s)} -> {q(d)} [label={q(m)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "FORMAT_VERSION", "KINDS", "ParseError", "DocumentEnvelope", "PAYLOAD_SCHEMAS", "ENVELOPE_SCHEMA",
    "category_payload", "twocategory_payload", "functor_payload", "diagram_payload", "wedge_payload",
    "end_payload", "coherence_payload", "report_payload", "to_document", "serialize_document", "serialize",
    "parse_document", "read_document", "decode_category", "decode_twocategory", "decode_functor",
    "decode_diagram", "export_dot", "ValidationError",
]
