"""JSON round-trips, family files, and DOT export."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from conftest import mk, random_dag

from vrsp.errors import GraphFormatError, InvalidGraphError
from vrsp.fixtures import fixture_path, load_graph
from vrsp.quotient import VertexFamily
from vrsp.serialization import (
    emit_dot,
    emit_family,
    emit_graph,
    parse_family,
    parse_graph,
    parse_weight,
    weight_token,
)


class TestWeights:
    def test_tokens(self):
        assert parse_weight("1") == 1
        assert parse_weight("-2") == -2
        assert parse_weight("3/2") == Fraction(3, 2)
        assert parse_weight(7) == 7
        assert weight_token(Fraction(4, 6)) == "2/3"

    @pytest.mark.parametrize("bad", ["", "1.5", "a", "1/0", "1/", "/2", "01", "1/02", " 1", True, 2.5, None])
    def test_rejects_inexact_or_malformed(self, bad):
        with pytest.raises(GraphFormatError):
            parse_weight(bad)


class TestGraphRoundTrip:
    def test_fixture_bytes_are_canonical(self):
        for name in ("fig1", "fig2", "fig2_g1", "fig2_g2", "fig3", "fig3_g1", "fig3_g2"):
            text = fixture_path(f"{name}.json").read_text()
            assert emit_graph(parse_graph(text)) == text

    def test_fig1_counts(self):
        g = load_graph("fig1")
        assert len(g.vertices) == 12 and len(g.arcs) == 17

    def test_random_graphs_round_trip(self):
        rng = random.Random(83)
        for _ in range(50):
            g = random_dag(rng, actions="pqr", weights=(1, 2, Fraction(3, 2)))
            assert parse_graph(emit_graph(g)) == g

    def test_weights_survive_exactly(self):
        g = mk("u v", [("e1", "u", "v", "a", Fraction(3, 2))])
        again = parse_graph(emit_graph(g))
        assert again.arcs[0].label.weight == Fraction(3, 2)


class TestParseErrors:
    def test_malformed_json(self):
        with pytest.raises(GraphFormatError, match="line"):
            parse_graph(b"{ not json")

    def test_dangling_head_names_arc(self):
        text = '{"name": "", "vertices": ["u"], "arcs": [{"id": "e9", "tail": "u", "head": "v", "action": "a", "weight": "1"}]}'
        with pytest.raises(InvalidGraphError, match="e9"):
            parse_graph(text)

    def test_missing_field_named(self):
        text = '{"name": "", "vertices": ["u"], "arcs": [{"id": "e1", "tail": "u", "head": "u", "action": "a"}]}'
        with pytest.raises(GraphFormatError, match="weight"):
            parse_graph(text)

    def test_unknown_field_rejected(self):
        with pytest.raises(GraphFormatError, match="unknown"):
            parse_graph('{"vertices": [], "arcs": [], "colour": 1}')

    def test_float_weight_rejected(self):
        text = '{"vertices": ["u", "v"], "arcs": [{"id": "e1", "tail": "u", "head": "v", "action": "a", "weight": 1.5}]}'
        with pytest.raises(GraphFormatError, match="weight"):
            parse_graph(text)

    def test_empty_action_rejected(self):
        text = '{"vertices": ["u", "v"], "arcs": [{"id": "e1", "tail": "u", "head": "v", "action": "", "weight": "1"}]}'
        with pytest.raises(GraphFormatError, match="action"):
            parse_graph(text)

    def test_invalid_utf8(self):
        with pytest.raises(GraphFormatError, match="UTF-8"):
            parse_graph(b"\xff\xfe{}")


class TestFamilies:
    def test_round_trip(self):
        fam = VertexFamily.of([{"u1", "u2"}, {"u3"}])
        assert parse_family(emit_family(fam)) == fam

    def test_comments_and_blanks_ignored(self):
        fam = parse_family("# top row\nu1,u2\n\nu3\n")
        assert fam.sets == (frozenset({"u1", "u2"}), frozenset({"u3"}))

    def test_overlap_rejected(self):
        with pytest.raises(GraphFormatError):
            parse_family("u1,u2\nu2,u3\n")

    def test_empty_id_rejected(self):
        with pytest.raises(GraphFormatError, match="line 1"):
            parse_family("u1,,u2\n")


class TestDot:
    def test_single_arc(self):
        g = mk("u v", [("e1", "u", "v", "a")])
        assert emit_dot(g) == 'digraph "G" {\n  "u";\n  "v";\n  "u" -> "v" [label="a,1"];\n}\n'

    def test_fig1_edge_lines(self):
        dot = emit_dot(load_graph("fig1"))
        assert dot.count(" -> ") == 17
        assert dot.splitlines()[0] == 'digraph "fig1" {'

    def test_deterministic(self):
        rng = random.Random(89)
        for _ in range(20):
            g = random_dag(rng)
            assert emit_dot(g) == emit_dot(parse_graph(emit_graph(g)))

    def test_quoting(self):
        g = mk('a"b c\\d', [("e1", 'a"b', "c\\d", "x")])
        dot = emit_dot(g)
        assert '"a\\"b"' in dot and '"c\\\\d"' in dot
