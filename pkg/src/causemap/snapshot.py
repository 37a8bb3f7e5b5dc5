"""Snapshot files: one immutable bundle of corpus + extracted relations.

`causemap ingest` writes a snapshot; every other subcommand and the HTTP
service only ever read one. Relations are extracted once at ingest time and
bound to the corpus by a config digest, so a loaded snapshot is guaranteed
to be self-consistent. The single view-building entry point here is shared
by the CLI and the HTTP service, which is what makes their outputs
byte-identical for identical parameters.
"""

from __future__ import annotations

import gzip
import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__, graphio, landscape
from .corpus import (Article, Comment, CorpusHandle, IngestConfig,
                     IngestReport, ingest_jsonl)
from .framex import CausalRelation, Trigger, extract_corpus
from .graphio import LayoutResult
from .landscape import MACRO, MICRO, OVERLAY, BeliefGraph, ViewSpec

SNAPSHOT_VERSION = 1


class SnapshotError(Exception):
    pass


@dataclass
class BuildInfo:
    tool_version: str
    config_digest: str
    created_at: str


@dataclass
class Snapshot:
    corpus: CorpusHandle
    relations: list[CausalRelation]
    build_info: BuildInfo


def _corpus_digest(corpus: CorpusHandle, cap: int) -> str:
    hasher = hashlib.sha256()
    hasher.update(f"cap={cap};tool={__version__};".encode())
    for article_id in sorted(corpus.articles):
        a = corpus.articles[article_id]
        hasher.update(f"A|{a.article_id}|{a.published_at.isoformat()}"
                      .encode("utf-8"))
    for comment_id in sorted(corpus.comments):
        c = corpus.comments[comment_id]
        hasher.update(f"C|{c.comment_id}|{c.article_id}|{c.commenter_id}|"
                      f"{c.posted_at.isoformat()}|{c.text}".encode("utf-8"))
    return hasher.hexdigest()


def _iso(ts: datetime) -> str:
    return ts.astimezone(timezone.utc).isoformat().replace("+00:00", "Z")


def build_snapshot(corpus: CorpusHandle,
                   config: IngestConfig | None = None) -> Snapshot:
    config = config or IngestConfig()
    relations = extract_corpus(corpus)
    digest = _corpus_digest(corpus, config.max_comments_per_article)
    info = BuildInfo(tool_version=__version__, config_digest=digest,
                     created_at=_iso(datetime.now(timezone.utc)))
    return Snapshot(corpus=corpus, relations=relations, build_info=info)


def ingest_to_snapshot(stream, config: IngestConfig | None = None) -> Snapshot:
    corpus = ingest_jsonl(stream, config)
    return build_snapshot(corpus, config)


def save(snapshot: Snapshot, path: str) -> None:
    doc = {
        "version": SNAPSHOT_VERSION,
        "buildInfo": {
            "toolVersion": snapshot.build_info.tool_version,
            "configDigest": snapshot.build_info.config_digest,
            "createdAt": snapshot.build_info.created_at,
        },
        "ingestReport": {
            "lines": snapshot.corpus.ingest_report.lines,
            "acceptedArticles": snapshot.corpus.ingest_report.accepted_articles,
            "acceptedComments": snapshot.corpus.ingest_report.accepted_comments,
            "rejected": snapshot.corpus.ingest_report.rejected,
        },
        "articles": [
            {
                "articleId": a.article_id,
                "url": a.url,
                "title": a.title,
                "sectionPath": list(a.section_path),
                "publishedAt": _iso(a.published_at),
            }
            for a in sorted(snapshot.corpus.articles.values(),
                            key=lambda a: a.article_id)
        ],
        "comments": [
            {
                "commentId": c.comment_id,
                "articleId": c.article_id,
                "commenterId": c.commenter_id,
                "parentCommentId": c.parent_comment_id,
                "postedAt": _iso(c.posted_at),
                "text": c.text,
            }
            for c in sorted(snapshot.corpus.comments.values(),
                            key=lambda c: c.comment_id)
        ],
        "relations": [
            {
                "relationId": r.relation_id,
                "commentId": r.comment_id,
                "commenterId": r.commenter_id,
                "utterance": r.utterance,
                "cause": r.cause,
                "effect": r.effect,
                "trigger": {
                    "lexicalUnit": r.trigger.lexical_unit,
                    "tokenSpan": list(r.trigger.token_span),
                    "voice": r.trigger.voice,
                },
                "pronominal": r.pronominal,
            }
            for r in snapshot.relations
        ],
    }
    payload = json.dumps(doc, sort_keys=True,
                         separators=(",", ":")).encode("utf-8")
    with gzip.open(path, "wb", compresslevel=6) as fh:
        fh.write(payload)


def _parse_ts(value: str) -> datetime:
    return datetime.fromisoformat(value.replace("Z", "+00:00"))


def load(path: str) -> Snapshot:
    try:
        with gzip.open(path, "rb") as fh:
            doc = json.loads(fh.read().decode("utf-8"))
    except OSError as exc:
        raise SnapshotError(f"cannot read snapshot {path!r}: {exc}") from exc
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SnapshotError(f"corrupt snapshot {path!r}: {exc}") from exc
    if doc.get("version") != SNAPSHOT_VERSION:
        raise SnapshotError(f"unsupported snapshot version "
                            f"{doc.get('version')!r}")
    articles = {
        a["articleId"]: Article(
            article_id=a["articleId"], url=a["url"], title=a["title"],
            section_path=tuple(a["sectionPath"]),
            published_at=_parse_ts(a["publishedAt"]))
        for a in doc["articles"]
    }
    comments = {
        c["commentId"]: Comment(
            comment_id=c["commentId"], article_id=c["articleId"],
            commenter_id=c["commenterId"],
            parent_comment_id=c["parentCommentId"],
            posted_at=_parse_ts(c["postedAt"]), text=c["text"])
        for c in doc["comments"]
    }
    report_doc = doc.get("ingestReport", {})
    report = IngestReport(
        lines=report_doc.get("lines", 0),
        accepted_articles=report_doc.get("acceptedArticles", 0),
        accepted_comments=report_doc.get("acceptedComments", 0),
        rejected=dict(report_doc.get("rejected", {})))
    corpus = CorpusHandle(articles=articles, comments=comments,
                          ingest_report=report)
    relations = [
        CausalRelation(
            relation_id=r["relationId"], comment_id=r["commentId"],
            commenter_id=r["commenterId"], utterance=r["utterance"],
            cause=r["cause"], effect=r["effect"],
            trigger=Trigger(
                lexical_unit=r["trigger"]["lexicalUnit"],
                token_span=tuple(r["trigger"]["tokenSpan"]),
                voice=r["trigger"]["voice"]),
            pronominal=r.get("pronominal", False))
        for r in doc["relations"]
    ]
    info_doc = doc["buildInfo"]
    info = BuildInfo(tool_version=info_doc["toolVersion"],
                     config_digest=info_doc["configDigest"],
                     created_at=info_doc["createdAt"])
    return Snapshot(corpus=corpus, relations=relations, build_info=info)


def build_view(snapshot: Snapshot, view: ViewSpec,
               iterations: int = graphio.DEFAULT_ITERATIONS,
               ) -> tuple[BeliefGraph, LayoutResult]:
    """Assemble the graph for a view spec and lay it out. This is the one
    code path behind both `causemap graph ...` and the /graph endpoints."""
    view.validate()
    if view.kind == MICRO:
        graph = landscape.micro_view(snapshot.relations, view.cause_query,
                                     view.min_weight)
    elif view.kind == OVERLAY:
        commenters = {c.commenter_id
                      for c in snapshot.corpus.comments.values()}
        graph = landscape.overlay_users(snapshot.relations, view.user_a,
                                        view.user_b, view.role,
                                        view.min_weight,
                                        known_commenters=commenters)
    else:
        statements = landscape.build_statements(snapshot.relations, view.role)
        corpus_freq = landscape.lemma_frequencies(statements)
        sampled = landscape.subsample(statements, view.sample_fraction,
                                      view.seed)
        graph = landscape.build_graph(sampled, view.min_weight)
        graph.labels = landscape.macro_labels(graph, corpus_freq)
    layout_result = graphio.layout(graph, seed=view.seed,
                                   iterations=iterations)
    return graph, layout_result


def render_view(snapshot: Snapshot, view: ViewSpec, fmt: str = "json",
                iterations: int = graphio.DEFAULT_ITERATIONS) -> bytes:
    graph, layout_result = build_view(snapshot, view, iterations)
    if fmt == "gexf":
        return graphio.export_gexf(graph, layout_result)
    if fmt == "json":
        return graphio.export_view_json(graph, layout_result, view)
    raise ValueError(f"unknown format {fmt!r}")
