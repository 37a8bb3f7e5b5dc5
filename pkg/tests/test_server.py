from __future__ import annotations

import io
import urllib.parse

import pytest
from fastapi.testclient import TestClient

from causemap.corpus import IngestConfig, ingest_jsonl
from causemap.server import create_app
from causemap.snapshot import build_snapshot
from conftest import ER_SENTENCE, article_line, comment_line
from synth import make_corpus_bytes


def snapshot_from_bytes(data: bytes):
    corpus = ingest_jsonl(io.BytesIO(data), IngestConfig())
    return build_snapshot(corpus)


@pytest.fixture(scope="module")
def synth_client():
    snap = snapshot_from_bytes(make_corpus_bytes(4, 250, 10, seed=5))
    app = create_app(snap, iterations=20)
    return TestClient(app), snap


@pytest.fixture(scope="module")
def er_client():
    lines = (article_line() + "\n"
             + comment_line(text=ER_SENTENCE) + "\n").encode()
    snap = snapshot_from_bytes(lines)
    return TestClient(create_app(snap, iterations=10)), snap


class TestStats:
    def test_counts(self, synth_client):
        client, snap = synth_client
        body = client.get("/api/v1/corpus/stats").json()
        assert body == {
            "articles": len(snap.corpus.articles),
            "comments": len(snap.corpus.comments),
            "commenters": len({c.commenter_id
                               for c in snap.corpus.comments.values()}),
            "relations": len(snap.relations),
        }


class TestGraphEndpoints:
    def test_macro_deterministic_replay(self, synth_client):
        client, _ = synth_client
        url = "/api/v1/graph/macro?role=cause&sample=0.2&seed=42&minWeight=1"
        first = client.get(url)
        second = client.get(url)
        assert first.status_code == 200
        assert first.content == second.content

    def test_micro_nodes_trace_to_matching_causes(self, synth_client):
        client, snap = synth_client
        response = client.get("/api/v1/graph/micro?cause=nuclear+power")
        assert response.status_code == 200
        doc = response.json()
        from causemap.landscape import EFFECT, build_statements, \
            cause_matches_query
        matching = [r for r in snap.relations
                    if cause_matches_query(r.cause, "nuclear power")]
        expected = set(build_statements(matching, EFFECT))
        assert {n["id"] for n in doc["nodes"]} == expected

    def test_overlay_coloring(self, synth_client):
        client, snap = synth_client
        top = client.get("/api/v1/commenters/top?k=2").json()["commenters"]
        response = client.get(
            f"/api/v1/graph/overlay?userA={top[0]}&userB={top[1]}")
        assert response.status_code == 200
        colors = {n["color"] for n in response.json()["nodes"]}
        assert colors <= {"USER_A", "USER_B", "SHARED"}

    def test_invalid_sample_is_400(self, synth_client):
        client, _ = synth_client
        response = client.get("/api/v1/graph/macro?sample=0")
        assert response.status_code == 400
        assert response.json()["error"]["reason"] == "invalid_parameters"

    def test_missing_micro_query_is_400(self, synth_client):
        client, _ = synth_client
        assert client.get("/api/v1/graph/micro").status_code == 400

    def test_unknown_overlay_user_is_400(self, synth_client):
        client, _ = synth_client
        response = client.get(
            "/api/v1/graph/overlay?userA=ghost&userB=u0001")
        assert response.status_code == 400
        assert response.json()["error"]["reason"] == "unknown_user"

    def test_node_cap_gives_413(self, synth_client):
        _, snap = synth_client
        capped = TestClient(create_app(snap, node_cap=1, iterations=5))
        response = capped.get("/api/v1/graph/macro?sample=1.0")
        assert response.status_code == 413
        detail = response.json()["error"]
        assert detail["reason"] == "graph_too_large"
        assert "sample_fraction" in detail["detail"]

    def test_unknown_route_is_404(self, synth_client):
        client, _ = synth_client
        assert client.get("/api/v1/nope").status_code == 404


class TestStatements:
    def test_drill_down_returns_paper_utterance(self, er_client):
        client, snap = er_client
        rel = snap.relations[0]
        from causemap.landscape import EFFECT, build_statements
        key = next(iter(build_statements(snap.relations, EFFECT)))
        encoded = urllib.parse.quote(key, safe="")
        body = client.get(f"/api/v1/statements/{encoded}").json()
        assert body["displayText"] == "traffic jams"
        assert body["lemmas"] == ["jam", "traffic"]
        assert body["relations"] == [{
            "utterance": ER_SENTENCE,
            "commentId": rel.comment_id,
            "commenterId": rel.commenter_id,
        }]

    def test_every_graph_node_resolves(self, synth_client):
        client, _ = synth_client
        doc = client.get(
            "/api/v1/graph/macro?role=effect&sample=0.3&seed=1").json()
        for node in doc["nodes"]:
            encoded = urllib.parse.quote(node["id"], safe="")
            assert client.get(
                f"/api/v1/statements/{encoded}").status_code == 200

    def test_unknown_statement_is_404(self, synth_client):
        client, _ = synth_client
        assert client.get("/api/v1/statements/bogus").status_code == 404


class TestCliHttpEquivalence:
    def test_macro_bytes_equal(self, synth_client, tmp_path):
        client, snap = synth_client
        from causemap import snapshot as snapshot_mod
        from causemap.landscape import CAUSE, MACRO, ViewSpec
        view = ViewSpec(kind=MACRO, role=CAUSE, sample_fraction=0.25,
                        seed=9, min_weight=1)
        cli_bytes = snapshot_mod.render_view(snap, view, fmt="json",
                                             iterations=20)
        http = client.get(
            "/api/v1/graph/macro?role=cause&sample=0.25&seed=9&minWeight=1")
        assert http.content == cli_bytes
