"""Belief graphs over extracted cause/effect statements.

Statements are aggregated by content-lemma identity: two spans whose
normalized content lemmas coincide are the same belief node. Edges carry the
size of the lemma-set overlap between two statements; views select a role
(cause or effect), optionally subsample, and optionally color nodes by which
of two commenters uttered them.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import textproc
from .corpus import CorpusHandle
from .framex import CausalRelation

CAUSE = "CAUSE"
EFFECT = "EFFECT"

MACRO = "MACRO"
MICRO = "MICRO"
OVERLAY = "OVERLAY"

USER_A = "USER_A"
USER_B = "USER_B"
SHARED = "SHARED"
NEUTRAL = "NEUTRAL"

KEY_SEPARATOR = "␟"


@dataclass
class Statement:
    statement_key: str
    role: str
    display_text: str
    lemmas: frozenset[str]
    commenter_ids: set[str] = field(default_factory=set)
    relation_ids: set[str] = field(default_factory=set)

    @property
    def frequency(self) -> int:
        return len(self.relation_ids)


@dataclass
class BeliefGraph:
    nodes: dict[str, Statement]
    edges: list[tuple[str, str, int]]
    labels: dict[str, str] = field(default_factory=dict)
    colors: dict[str, str] | None = None


@dataclass
class ViewSpec:
    kind: str = MACRO
    role: str = CAUSE
    sample_fraction: float = 1.0
    seed: int = 0
    cause_query: str | None = None
    user_a: str | None = None
    user_b: str | None = None
    min_weight: int = 1

    def validate(self) -> None:
        if self.kind not in (MACRO, MICRO, OVERLAY):
            raise ValueError(f"unknown view kind {self.kind!r}")
        if self.role not in (CAUSE, EFFECT):
            raise ValueError(f"unknown role {self.role!r}")
        if not 0 < self.sample_fraction <= 1:
            raise ValueError("sample_fraction must be in (0, 1]")
        if self.min_weight < 1:
            raise ValueError("min_weight must be >= 1")
        if self.kind == MICRO and not self.cause_query:
            raise ValueError("micro view requires cause_query")
        if self.kind == OVERLAY and not (self.user_a and self.user_b):
            raise ValueError("overlay view requires both users")


def statement_key(lemmas: Iterable[str]) -> str:
    return KEY_SEPARATOR.join(sorted(set(lemmas)))


def _selected_span(relation: CausalRelation, role: str) -> str:
    return relation.cause if role == CAUSE else relation.effect


def build_statements(relations: Sequence[CausalRelation], role: str,
                     ) -> dict[str, Statement]:
    """One Statement per distinct content-lemma set, in first-seen order.

    Relations whose selected span has no content lemmas are dropped; the
    count of dropped relations is available via
    :func:`count_dropped_relations` when callers need it.
    """
    statements: dict[str, Statement] = {}
    for relation in relations:
        span = _selected_span(relation, role)
        lemmas = textproc.text_lemmas(span)
        if not lemmas:
            continue
        key = statement_key(lemmas)
        stmt = statements.get(key)
        if stmt is None:
            stmt = Statement(statement_key=key, role=role, display_text=span,
                             lemmas=frozenset(lemmas))
            statements[key] = stmt
        stmt.commenter_ids.add(relation.commenter_id)
        stmt.relation_ids.add(relation.relation_id)
    return statements


def count_dropped_relations(relations: Sequence[CausalRelation],
                            role: str) -> int:
    return sum(1 for r in relations
               if not textproc.text_lemmas(_selected_span(r, role)))


def shared_lemma_weight(a: Statement, b: Statement) -> int:
    return len(a.lemmas & b.lemmas)


def build_graph(statements: dict[str, Statement],
                min_weight: int = 1) -> BeliefGraph:
    """Link every statement pair sharing >= min_weight lemmas.

    Uses an inverted lemma index so only pairs that actually share a lemma
    are touched; the result is identical to the naive double loop.
    """
    if min_weight < 1:
        raise ValueError("min_weight must be >= 1")
    by_lemma: dict[str, list[str]] = {}
    for key in sorted(statements):
        for lemma in statements[key].lemmas:
            by_lemma.setdefault(lemma, []).append(key)
    counts: dict[tuple[str, str], int] = {}
    for keys in by_lemma.values():
        for i, a in enumerate(keys):
            for b in keys[i + 1:]:
                pair = (a, b) if a < b else (b, a)
                counts[pair] = counts.get(pair, 0) + 1
    edges = [(a, b, w) for (a, b), w in counts.items() if w >= min_weight]
    edges.sort()
    return BeliefGraph(nodes=dict(statements), edges=edges)


def subsample(statements: dict[str, Statement], fraction: float,
              seed: int) -> dict[str, Statement]:
    """Pick ceil(fraction * N) statements in a seeded pseudo-random order.

    The order is a SHA-256 ranking over (seed, key), so the same inputs
    select the same statements on any platform or Python version.
    """
    if not 0 < fraction <= 1:
        raise ValueError("fraction must be in (0, 1]")
    if fraction == 1:
        return dict(statements)
    keys = sorted(statements)
    ranked = sorted(keys, key=lambda k: hashlib.sha256(
        f"{seed}:{k}".encode("utf-8")).hexdigest())
    take = math.ceil(fraction * len(keys))
    chosen = set(ranked[:take])
    return {k: statements[k] for k in keys if k in chosen}


def lemma_frequencies(statements: dict[str, Statement]) -> dict[str, int]:
    """Corpus-wide lemma counts for a role, weighted by how many relations
    contributed each statement (computed over all statements, not a
    sample)."""
    freq: dict[str, int] = {}
    for stmt in statements.values():
        for lemma in stmt.lemmas:
            freq[lemma] = freq.get(lemma, 0) + stmt.frequency
    return freq


def macro_labels(graph: BeliefGraph,
                 corpus_freq: dict[str, int]) -> dict[str, str]:
    """Label each node with its corpus-most-frequent lemma; ties break to
    the lexicographically smallest lemma."""
    labels = {}
    for key, stmt in graph.nodes.items():
        labels[key] = min(stmt.lemmas,
                          key=lambda lem: (-corpus_freq.get(lem, 0), lem))
    return labels


def _query_tokens(query: str) -> list[str]:
    return query.lower().split()


def cause_matches_query(cause: str, query: str) -> bool:
    """Token-boundary containment of the normalized query in the normalized
    cause ("nuclear power" matches "nuclear power plants" but not
    "nuclear powerlessness")."""
    needle = _query_tokens(query)
    haystack = cause.lower().split()
    if not needle:
        return False
    for i in range(len(haystack) - len(needle) + 1):
        if haystack[i:i + len(needle)] == needle:
            return True
    return False


def micro_view(relations: Sequence[CausalRelation], cause_query: str,
               min_weight: int = 1) -> BeliefGraph:
    """Effect statements of the relations whose cause contains the query;
    nodes keep their full display text as label."""
    if not cause_query or not cause_query.strip():
        raise ValueError("cause_query must be non-empty")
    matching = [r for r in relations
                if cause_matches_query(r.cause, cause_query)]
    statements = build_statements(matching, EFFECT)
    graph = build_graph(statements, min_weight)
    graph.labels = {key: stmt.display_text
                    for key, stmt in graph.nodes.items()}
    return graph


def overlay_users(relations: Sequence[CausalRelation], user_a: str,
                  user_b: str, role: str = CAUSE,
                  min_weight: int = 1,
                  known_commenters: set[str] | None = None) -> BeliefGraph:
    """Graph over the union of two commenters' statements, colored USER_A /
    USER_B / SHARED. The three classes partition the nodes."""
    known = (known_commenters if known_commenters is not None
             else {r.commenter_id for r in relations})
    for user in (user_a, user_b):
        if user not in known:
            raise ValueError(f"unknown commenter {user!r}")
    selected = [r for r in relations if r.commenter_id in (user_a, user_b)]
    statements = build_statements(selected, role)
    graph = build_graph(statements, min_weight)
    colors = {}
    for key, stmt in graph.nodes.items():
        has_a = user_a in stmt.commenter_ids
        has_b = user_b in stmt.commenter_ids
        colors[key] = SHARED if (has_a and has_b) else (
            USER_A if has_a else USER_B)
    graph.colors = colors
    graph.labels = {key: stmt.display_text
                    for key, stmt in graph.nodes.items()}
    return graph


def top_commenters(corpus: CorpusHandle,
                   relations: Sequence[CausalRelation],
                   k: int) -> list[str]:
    """Commenters ranked by extracted-relation count, ties broken by
    comment count and then by key."""
    if k < 1:
        raise ValueError("k must be >= 1")
    relation_counts: dict[str, int] = {}
    for relation in relations:
        relation_counts[relation.commenter_id] = \
            relation_counts.get(relation.commenter_id, 0) + 1
    comment_counts: dict[str, int] = {}
    for comment in corpus.comments.values():
        comment_counts[comment.commenter_id] = \
            comment_counts.get(comment.commenter_id, 0) + 1
    commenters = sorted(
        comment_counts,
        key=lambda c: (-relation_counts.get(c, 0), -comment_counts[c], c))
    return commenters[:k]
