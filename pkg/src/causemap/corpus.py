"""Comment-corpus ingestion, validation and iteration.

The input is line-delimited JSON with two record kinds, "article" and
"comment" (see README for the schema). Ingestion is single-writer and
per-line fault tolerant: a malformed line is rejected with a machine-readable
reason code, never fatally. A finished :class:`CorpusHandle` is immutable in
spirit and safe to share across readers.

Articles must precede the comments that reference them; validation is a pure
function of the record and the corpus state built so far.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import BinaryIO, Callable, Iterable, Iterator

DEFAULT_COMMENT_CAP = 200

OK = "ok"

# rejection reason codes
BAD_JSON = "bad_json"
UNKNOWN_KIND = "unknown_kind"
MISSING_FIELD = "missing_field"
BAD_TIMESTAMP = "bad_timestamp"
EMPTY_TEXT = "empty_text"
EMPTY_SECTION = "empty_section"
DUPLICATE_ID = "duplicate_id"
ORPHAN_COMMENT = "orphan_comment"
MISSING_PARENT = "missing_parent"
CAP_EXCEEDED = "cap_exceeded"


class IngestError(Exception):
    """Fatal ingest failure (unreadable stream, not a bad record)."""


@dataclass(frozen=True)
class Article:
    article_id: str
    url: str
    title: str
    section_path: tuple[str, ...]
    published_at: datetime


@dataclass(frozen=True)
class Comment:
    comment_id: str
    article_id: str
    commenter_id: str
    parent_comment_id: str | None
    posted_at: datetime
    text: str


@dataclass
class IngestReport:
    lines: int = 0
    accepted_articles: int = 0
    accepted_comments: int = 0
    rejected: dict[str, int] = field(default_factory=dict)

    def reject(self, reason: str) -> None:
        self.rejected[reason] = self.rejected.get(reason, 0) + 1

    @property
    def rejected_total(self) -> int:
        return sum(self.rejected.values())


@dataclass
class IngestConfig:
    max_comments_per_article: int = DEFAULT_COMMENT_CAP


@dataclass
class CorpusHandle:
    articles: dict[str, Article]
    comments: dict[str, Comment]
    ingest_report: IngestReport


def _parse_timestamp(value) -> datetime | None:
    if not isinstance(value, str):
        return None
    try:
        ts = datetime.fromisoformat(value.replace("Z", "+00:00"))
    except ValueError:
        return None
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def _require_str(record: dict, key: str) -> str | None:
    value = record.get(key)
    if isinstance(value, str) and value:
        return value
    return None


def validate_record(record: dict, articles: dict[str, Article],
                    comments: dict[str, Comment]) -> tuple[str, object]:
    """Classify one parsed record against the corpus built so far.

    Returns ``(OK, Article | Comment)`` or ``(reason_code, None)``. Pure:
    no mutation of the passed collections.
    """
    kind = record.get("kind")
    if kind == "article":
        article_id = _require_str(record, "article_id")
        url = _require_str(record, "url")
        title = _require_str(record, "title")
        if not (article_id and url and title):
            return MISSING_FIELD, None
        if article_id in articles:
            return DUPLICATE_ID, None
        section = record.get("section_path")
        if (not isinstance(section, list) or not section
                or not all(isinstance(s, str) and s for s in section)):
            return EMPTY_SECTION, None
        published = _parse_timestamp(record.get("published_at"))
        if published is None:
            return BAD_TIMESTAMP, None
        return OK, Article(article_id, url, title, tuple(section), published)
    if kind == "comment":
        comment_id = _require_str(record, "comment_id")
        article_id = _require_str(record, "article_id")
        commenter_id = _require_str(record, "commenter_id")
        if not (comment_id and article_id and commenter_id):
            return MISSING_FIELD, None
        if comment_id in comments:
            return DUPLICATE_ID, None
        if article_id not in articles:
            return ORPHAN_COMMENT, None
        text = record.get("text")
        if not isinstance(text, str) or not text.strip():
            return EMPTY_TEXT, None
        posted = _parse_timestamp(record.get("posted_at"))
        if posted is None:
            return BAD_TIMESTAMP, None
        parent = record.get("parent_comment_id")
        if parent is not None:
            if not isinstance(parent, str) or not parent:
                return MISSING_FIELD, None
            parent_comment = comments.get(parent)
            if parent_comment is None or parent_comment.article_id != article_id:
                return MISSING_PARENT, None
        return OK, Comment(comment_id, article_id, commenter_id, parent,
                           posted, text)
    return UNKNOWN_KIND, None


def _comment_order(c: Comment) -> tuple:
    return (c.posted_at, c.comment_id)


def _enforce_cap(comments: dict[str, Comment], cap: int,
                 report: IngestReport) -> dict[str, Comment]:
    """Keep at most ``cap`` comments per article (earliest first), then
    cascade-reject replies whose parent did not survive."""
    by_article: dict[str, list[Comment]] = {}
    for comment in comments.values():
        by_article.setdefault(comment.article_id, []).append(comment)
    kept: dict[str, Comment] = {}
    for article_comments in by_article.values():
        article_comments.sort(key=_comment_order)
        for i, comment in enumerate(article_comments):
            if i < cap:
                kept[comment.comment_id] = comment
            else:
                report.reject(CAP_EXCEEDED)
    # a parent can fall past the cap while a same-timestamp child survives
    changed = True
    while changed:
        changed = False
        for comment in list(kept.values()):
            if comment.parent_comment_id and comment.parent_comment_id not in kept:
                del kept[comment.comment_id]
                report.reject(MISSING_PARENT)
                changed = True
    return kept


def ingest_jsonl(stream: BinaryIO | Iterable[bytes],
                 config: IngestConfig | None = None) -> CorpusHandle:
    """Ingest a byte stream of line-delimited records into a fresh corpus.

    Raises :class:`IngestError` only when the stream itself is unreadable;
    every per-line problem is counted in the report instead.
    """
    config = config or IngestConfig()
    report = IngestReport()
    articles: dict[str, Article] = {}
    comments: dict[str, Comment] = {}
    try:
        lines = list(stream)
    except Exception as exc:  # unreadable stream, not a bad record
        raise IngestError(f"cannot read input stream: {exc}") from exc
    for raw in lines:
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError:
                report.lines += 1
                report.reject(BAD_JSON)
                continue
        if not raw.strip():
            continue
        report.lines += 1
        try:
            record = json.loads(raw)
        except json.JSONDecodeError:
            report.reject(BAD_JSON)
            continue
        if not isinstance(record, dict):
            report.reject(BAD_JSON)
            continue
        status, value = validate_record(record, articles, comments)
        if status != OK:
            report.reject(status)
        elif isinstance(value, Article):
            articles[value.article_id] = value
            report.accepted_articles += 1
        else:
            comments[value.comment_id] = value
            report.accepted_comments += 1
    before = len(comments)
    comments = _enforce_cap(comments, config.max_comments_per_article, report)
    report.accepted_comments -= before - len(comments)
    return CorpusHandle(articles=articles, comments=comments,
                        ingest_report=report)


def iter_comments(corpus: CorpusHandle,
                  commenter_id: str | None = None,
                  article_id: str | None = None,
                  since: datetime | None = None,
                  until: datetime | None = None,
                  predicate: Callable[[Comment], bool] | None = None,
                  ) -> Iterator[Comment]:
    """Yield comments in canonical (article_id, posted_at, comment_id) order,
    optionally filtered. The order is the corpus-wide canonical order every
    downstream artifact inherits."""
    selected = []
    for comment in corpus.comments.values():
        if commenter_id is not None and comment.commenter_id != commenter_id:
            continue
        if article_id is not None and comment.article_id != article_id:
            continue
        if since is not None and comment.posted_at < since:
            continue
        if until is not None and comment.posted_at >= until:
            continue
        if predicate is not None and not predicate(comment):
            continue
        selected.append(comment)
    selected.sort(key=lambda c: (c.article_id, c.posted_at, c.comment_id))
    yield from selected
