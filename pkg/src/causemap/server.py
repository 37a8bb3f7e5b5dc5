"""Read-only HTTP API over a loaded snapshot.

Every response is a pure function of (snapshot, request): the graph
endpoints call the same view builder as the CLI, so replaying a request —
or diffing it against `causemap graph` output — is byte-stable. Errors
carry machine-readable reasons; graphs larger than the node cap return 413
with advice to lower the sample fraction.
"""

from __future__ import annotations

import json

from fastapi import FastAPI
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from . import graphio, landscape
from .landscape import (CAUSE, EFFECT, MACRO, MICRO, OVERLAY, ViewSpec,
                        build_statements)
from .snapshot import Snapshot, build_view

DEFAULT_NODE_CAP = 5000

_ROLES = {"cause": CAUSE, "effect": EFFECT}


def _error(status: int, reason: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"error": {"reason": reason,
                                           "detail": detail}})


class _StatementIndex:
    """Merged cause+effect statement lookup with relation provenance."""

    def __init__(self, snapshot: Snapshot):
        self.by_key: dict[str, dict] = {}
        relations_by_id = {r.relation_id: r for r in snapshot.relations}
        for role in (CAUSE, EFFECT):
            for key, stmt in build_statements(snapshot.relations,
                                              role).items():
                entry = self.by_key.setdefault(key, {
                    "displayText": stmt.display_text,
                    "lemmas": sorted(stmt.lemmas),
                    "relationIds": set(),
                })
                entry["relationIds"] |= stmt.relation_ids
        self.relations_by_id = relations_by_id

    def lookup(self, key: str) -> dict | None:
        entry = self.by_key.get(key)
        if entry is None:
            return None
        relations = [self.relations_by_id[rid]
                     for rid in sorted(entry["relationIds"])]
        return {
            "displayText": entry["displayText"],
            "lemmas": entry["lemmas"],
            "relations": [
                {
                    "utterance": r.utterance,
                    "commentId": r.comment_id,
                    "commenterId": r.commenter_id,
                }
                for r in relations
            ],
        }


def _canonical_json(payload: dict, status: int = 200) -> Response:
    body = (json.dumps(payload, sort_keys=True, separators=(",", ":"),
                       ensure_ascii=True) + "\n").encode("utf-8")
    return Response(content=body, status_code=status,
                    media_type="application/json")


def create_app(snapshot: Snapshot, node_cap: int = DEFAULT_NODE_CAP,
               static_dir: str | None = None,
               iterations: int = graphio.DEFAULT_ITERATIONS) -> FastAPI:
    app = FastAPI(title="causemap observatory", docs_url=None,
                  redoc_url=None)
    index = _StatementIndex(snapshot)
    commenters = {c.commenter_id for c in snapshot.corpus.comments.values()}

    def render(view: ViewSpec) -> Response:
        try:
            view.validate()
        except ValueError as exc:
            return _error(400, "invalid_parameters", str(exc))
        try:
            graph, layout_result = build_view(snapshot, view, iterations)
        except ValueError as exc:
            return _error(400, "invalid_parameters", str(exc))
        if len(graph.nodes) > node_cap:
            return _error(
                413, "graph_too_large",
                f"view has {len(graph.nodes)} nodes (cap {node_cap}); "
                f"request a smaller sample_fraction")
        body = graphio.export_view_json(graph, layout_result, view)
        return Response(content=body, media_type="application/json")

    @app.get("/api/v1/corpus/stats")
    def corpus_stats():
        return _canonical_json({
            "articles": len(snapshot.corpus.articles),
            "comments": len(snapshot.corpus.comments),
            "commenters": len(commenters),
            "relations": len(snapshot.relations),
        })

    @app.get("/api/v1/commenters/top")
    def commenters_top(k: int = 2):
        if k < 1:
            return _error(400, "invalid_parameters", "k must be >= 1")
        top = landscape.top_commenters(snapshot.corpus, snapshot.relations,
                                       k)
        return _canonical_json({"commenters": top})

    @app.get("/api/v1/graph/macro")
    def graph_macro(role: str = "cause", sample: float = 1.0, seed: int = 0,
                    minWeight: int = 1):
        if role not in _ROLES:
            return _error(400, "invalid_parameters",
                          "role must be cause or effect")
        return render(ViewSpec(kind=MACRO, role=_ROLES[role],
                               sample_fraction=sample, seed=seed,
                               min_weight=minWeight))

    @app.get("/api/v1/graph/micro")
    def graph_micro(cause: str = "", seed: int = 0, minWeight: int = 1):
        return render(ViewSpec(kind=MICRO, role=EFFECT, seed=seed,
                               cause_query=cause, min_weight=minWeight))

    @app.get("/api/v1/graph/overlay")
    def graph_overlay(userA: str = "", userB: str = "", role: str = "cause",
                      seed: int = 0, minWeight: int = 1):
        if role not in _ROLES:
            return _error(400, "invalid_parameters",
                          "role must be cause or effect")
        for user in (userA, userB):
            if user and user not in commenters:
                return _error(400, "unknown_user",
                              f"unknown commenter {user!r}")
        return render(ViewSpec(kind=OVERLAY, role=_ROLES[role], seed=seed,
                               user_a=userA or None, user_b=userB or None,
                               min_weight=minWeight))

    @app.get("/api/v1/statements/{key}")
    def statement(key: str):
        entry = index.lookup(key)
        if entry is None:
            return _error(404, "unknown_statement",
                          f"no statement with key {key!r}")
        return _canonical_json(entry)

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="explorer")
    return app
