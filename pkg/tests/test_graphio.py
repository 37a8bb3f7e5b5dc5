from __future__ import annotations

import io
import math
import random

import networkx as nx
import pytest

from causemap.graphio import (COLOR_RGB, LayoutResult, export_gexf,
                              export_view_json, layout, parse_view_json)
from causemap.landscape import (OVERLAY, SHARED, USER_A, USER_B, BeliefGraph,
                                ViewSpec, build_graph)
from gexf_schema import validate_gexf_1_2
from test_landscape import make_statement, random_statements


def graph_of(*statements, colors=None):
    g = build_graph({s.statement_key: s for s in statements})
    g.colors = colors
    return g


def two_node_graph():
    a = make_statement({"coal", "smog"}, display="coal smog")
    b = make_statement({"smog", "haze"}, display="smog haze")
    return graph_of(a, b)


class TestLayout:
    def test_empty_graph(self):
        result = layout(BeliefGraph(nodes={}, edges=[]), seed=1)
        assert result.positions == {}

    def test_single_node_keeps_seeded_position(self):
        stmt = make_statement({"alone"})
        g = graph_of(stmt)
        with_forces = layout(g, seed=3, iterations=100)
        without = layout(g, seed=3, iterations=0)
        assert with_forces.positions == without.positions

    def test_deterministic_across_runs(self):
        rng = random.Random(11)
        statements = random_statements(rng, max_statements=100)
        g = build_graph(statements)
        a = layout(g, seed=42, iterations=200)
        b = layout(g, seed=42, iterations=200)
        assert a.positions == b.positions

    def test_seed_changes_positions(self):
        g = two_node_graph()
        a = layout(g, seed=1, iterations=0)
        b = layout(g, seed=2, iterations=0)
        assert a.positions != b.positions

    def test_coordinates_finite_and_total(self):
        rng = random.Random(13)
        statements = random_statements(rng)
        g = build_graph(statements)
        result = layout(g, seed=7, iterations=50)
        assert set(result.positions) == set(g.nodes)
        for x, y in result.positions.values():
            assert math.isfinite(x) and math.isfinite(y)

    def test_negative_iterations_rejected(self):
        with pytest.raises(ValueError):
            layout(BeliefGraph(nodes={}, edges=[]), seed=0, iterations=-1)


class TestExportGexf:
    def test_empty_graph_valid(self):
        data = export_gexf(BeliefGraph(nodes={}, edges=[]))
        validate_gexf_1_2(data)

    def test_two_node_golden(self, fixtures_dir):
        g = two_node_graph()
        data = export_gexf(g, layout(g, seed=42, iterations=10))
        golden = fixtures_dir / "golden_two_node.gexf"
        assert data == golden.read_bytes()

    def test_validates_and_roundtrips_through_networkx(self):
        rng = random.Random(19)
        statements = random_statements(rng, max_statements=30)
        g = build_graph(statements)
        data = export_gexf(g, layout(g, seed=1, iterations=20))
        validate_gexf_1_2(data)
        parsed = nx.read_gexf(io.BytesIO(data))
        assert set(parsed.nodes) == set(g.nodes)
        assert len(parsed.edges) == len(g.edges)
        for a, b, w in g.edges:
            assert parsed.has_edge(a, b)
            assert parsed[a][b]["weight"] == w

    def test_overlay_colors_on_every_node(self):
        a = make_statement({"coal"})
        b = make_statement({"wind"})
        colors = {a.statement_key: USER_A, b.statement_key: USER_B}
        data = export_gexf(graph_of(a, b, colors=colors))
        validate_gexf_1_2(data)
        text = data.decode("utf-8")
        assert text.count("<viz:color") == 2
        r, g_, b_ = COLOR_RGB[USER_A]
        assert f'<viz:color r="{r}" g="{g_}" b="{b_}"/>' in text

    def test_weights_serialized(self):
        data = export_gexf(two_node_graph()).decode("utf-8")
        assert 'weight="1"' in data


class TestExportViewJson:
    def view(self):
        return ViewSpec()

    def test_empty_graph_shape(self):
        data = export_view_json(BeliefGraph(nodes={}, edges=[]), None,
                                self.view())
        doc = parse_view_json(data)
        assert doc["nodes"] == []
        assert doc["edges"] == []
        assert doc["meta"]["nodeCount"] == 0

    def test_nodes_carry_display_text_and_frequency(self):
        g = two_node_graph()
        doc = parse_view_json(export_view_json(g, layout(g, seed=0), ViewSpec()))
        for node in doc["nodes"]:
            stmt = g.nodes[node["id"]]
            assert node["displayText"] == stmt.display_text
            assert node["frequency"] == stmt.frequency

    def test_round_trip_preserves_sets(self):
        rng = random.Random(23)
        statements = random_statements(rng, max_statements=40)
        g = build_graph(statements)
        doc = parse_view_json(export_view_json(g, layout(g, seed=5), ViewSpec()))
        assert {n["id"] for n in doc["nodes"]} == set(g.nodes)
        assert {(e["source"], e["target"], e["weight"])
                for e in doc["edges"]} == set(g.edges)

    def test_byte_deterministic(self):
        g = two_node_graph()
        view = ViewSpec(seed=9)
        a = export_view_json(g, layout(g, seed=9), view)
        b = export_view_json(g, layout(g, seed=9), view)
        assert a == b

    def test_overlay_color_field(self):
        a = make_statement({"coal"})
        b = make_statement({"x"})
        colors = {a.statement_key: SHARED, b.statement_key: USER_A}
        g = graph_of(a, b, colors=colors)
        view = ViewSpec(kind=OVERLAY, user_a="ua", user_b="ub")
        doc = parse_view_json(export_view_json(g, None, view))
        got = {n["id"]: n["color"] for n in doc["nodes"]}
        assert got == colors

    def test_meta_echoes_parameters(self):
        g = two_node_graph()
        view = ViewSpec(kind="MACRO", role="CAUSE", sample_fraction=0.25,
                        seed=7, min_weight=2)
        doc = parse_view_json(export_view_json(g, None, view))
        meta = doc["meta"]
        assert meta["kind"] == "MACRO"
        assert meta["sampleFraction"] == 0.25
        assert meta["seed"] == 7
        assert meta["minWeight"] == 2
