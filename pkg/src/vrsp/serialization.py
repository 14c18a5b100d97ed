"""Graph and family file formats, plus DOT export.

The graph document is a small JSON object::

    {
      "name": "fig1",
      "vertices": ["u1", "u2"],
      "arcs": [
        {"id": "e1", "tail": "u1", "head": "u2", "action": "a", "weight": "1"}
      ]
    }

Weights are exact tokens: an optional minus sign, digits, optionally a
"/denominator" part ("1", "-2", "3/2").  JSON integers are accepted on input
for convenience; floats never are.  Emission is canonical: fixed key order,
vertices sorted, arcs sorted by id, two-space indent, trailing newline, so
emitting a parsed document reproduces it byte for byte.

Family files list one vertex set per line, ids comma-separated; blank lines
and lines starting with '#' are ignored.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import GraphFormatError, InvalidGraphError
from .graph import Arc, Graph, LabelPair, validate
from .quotient import VertexFamily

__all__ = [
    "parse_weight",
    "weight_token",
    "graph_to_document",
    "document_to_graph",
    "parse_graph",
    "emit_graph",
    "parse_family",
    "emit_family",
    "emit_dot",
]

_WEIGHT_RE = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def parse_weight(token: object) -> Fraction:
    """Parse an exact weight token; rejects floats and malformed strings."""
    if isinstance(token, bool):
        raise GraphFormatError(f"weight must be an exact number token, got {token!r}")
    if isinstance(token, int):
        return Fraction(token)
    if isinstance(token, str) and _WEIGHT_RE.match(token):
        return Fraction(token)
    raise GraphFormatError(f"weight must be an integer or 'p/q' token, got {token!r}")


def weight_token(w: Fraction) -> str:
    """Canonical string form of a weight ('1', '-2', '3/2')."""
    return str(w)


def _expect(value: object, kind: type, what: str):
    if not isinstance(value, kind) or isinstance(value, bool):
        raise GraphFormatError(f"{what} must be {kind.__name__}, got {type(value).__name__}")
    return value


def graph_to_document(g: Graph) -> dict:
    """The canonical JSON-ready document for a graph."""
    return {
        "name": g.name,
        "vertices": list(g.vertices),
        "arcs": [
            {
                "id": a.id,
                "tail": a.tail,
                "head": a.head,
                "action": a.label.action,
                "weight": weight_token(a.label.weight),
            }
            for a in g.arcs
        ],
    }


def document_to_graph(doc: object, *, check: bool = True) -> Graph:
    """Build a graph from a parsed JSON document.

    Schema violations raise ``GraphFormatError`` naming the offending field.
    With ``check=True`` (the default) graph invariants are enforced as well;
    ``check=False`` returns the raw value so callers can run
    :func:`vrsp.graph.validate` themselves and report diagnostics.
    """
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a JSON object")
    extra = set(doc) - {"name", "vertices", "arcs"}
    if extra:
        raise GraphFormatError(f"unknown graph fields: {sorted(extra)!r}")
    name = _expect(doc.get("name", ""), str, "'name'")
    vertices = _expect(doc.get("vertices"), list, "'vertices'")
    for v in vertices:
        _expect(v, str, "vertex id")
    raw_arcs = _expect(doc.get("arcs"), list, "'arcs'")

    arcs = []
    for i, entry in enumerate(raw_arcs):
        where = f"arc #{i + 1}"
        if not isinstance(entry, dict):
            raise GraphFormatError(f"{where} must be a JSON object")
        extra = set(entry) - {"id", "tail", "head", "action", "weight"}
        if extra:
            raise GraphFormatError(f"{where}: unknown fields {sorted(extra)!r}")
        missing = {"id", "tail", "head", "action", "weight"} - set(entry)
        if missing:
            raise GraphFormatError(f"{where}: missing fields {sorted(missing)!r}")
        arc_id = _expect(entry["id"], str, f"{where} 'id'")
        where = f"arc {arc_id!r}"
        action = _expect(entry["action"], str, f"{where} 'action'")
        if not action:
            raise GraphFormatError(f"{where}: 'action' must be non-empty")
        try:
            weight = parse_weight(entry["weight"])
        except GraphFormatError as e:
            raise GraphFormatError(f"{where}: {e}") from None
        arcs.append(
            Arc(
                arc_id,
                _expect(entry["tail"], str, f"{where} 'tail'"),
                _expect(entry["head"], str, f"{where} 'head'"),
                LabelPair(action, weight),
            )
        )

    g = Graph(tuple(vertices), tuple(arcs), name)
    if check:
        diags = validate(g)
        if diags:
            raise InvalidGraphError(diags)
    return g


def parse_graph(text: str | bytes, *, check: bool = True) -> Graph:
    """Parse UTF-8 JSON text into a validated graph."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"input is not valid UTF-8: {e}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    return document_to_graph(doc, check=check)


def emit_graph(g: Graph) -> str:
    """Canonical JSON text for a graph (byte-stable across runs)."""
    return json.dumps(graph_to_document(g), indent=2, ensure_ascii=False) + "\n"


def parse_family(text: str | bytes) -> VertexFamily:
    """Parse a family file: one comma-separated vertex set per line."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"input is not valid UTF-8: {e}") from None
    sets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        ids = [part.strip() for part in line.split(",")]
        if any(not part for part in ids):
            raise GraphFormatError(f"family line {lineno}: empty vertex id")
        if len(set(ids)) != len(ids):
            raise GraphFormatError(f"family line {lineno}: repeated vertex id")
        sets.append(frozenset(ids))
    try:
        return VertexFamily.of(sets)
    except Exception as e:
        raise GraphFormatError(f"invalid family: {e}") from None


def emit_family(fam: VertexFamily) -> str:
    """Family file text: one sorted comma-separated set per line."""
    return "".join(",".join(sorted(s)) + "\n" for s in fam.sets)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: Graph) -> str:
    """Render a graph as a Graphviz digraph, deterministically ordered."""
    lines = [f"digraph {_dot_quote(g.name or 'G')} {{"]
    for v in g.vertices:
        lines.append(f"  {_dot_quote(v)};")
    for a in sorted(g.arcs, key=lambda a: (a.tail, a.head, a.label, a.id)):
        lines.append(f"  {_dot_quote(a.tail)} -> {_dot_quote(a.head)} [label={_dot_quote(str(a.label))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
