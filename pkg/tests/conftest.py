from __future__ import annotations

import io
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from causemap.corpus import IngestConfig, ingest_jsonl  # noqa: E402

ER_SENTENCE = ("Has anyone totted up the extra pollution on London streets "
               "emanating from traffic jams caused by Extinction Rebellion ?")


def article_line(article_id="a1", **overrides) -> str:
    record = {
        "kind": "article",
        "article_id": article_id,
        "url": f"https://news.example.org/{article_id}",
        "title": "Article " + article_id,
        "section_path": ["environment", "climate-change"],
        "published_at": "2019-04-01T12:00:00Z",
    }
    record.update(overrides)
    return json.dumps(record)


def comment_line(comment_id="c1", article_id="a1", commenter_id="u1",
                 text="Global warming causes floods.", **overrides) -> str:
    record = {
        "kind": "comment",
        "comment_id": comment_id,
        "article_id": article_id,
        "commenter_id": commenter_id,
        "parent_comment_id": None,
        "posted_at": "2019-04-01T13:00:00Z",
        "text": text,
    }
    record.update(overrides)
    return json.dumps(record)


def corpus_from_lines(lines, cap=200):
    stream = io.BytesIO(("\n".join(lines) + "\n").encode("utf-8"))
    return ingest_jsonl(stream, IngestConfig(max_comments_per_article=cap))


@pytest.fixture
def er_corpus():
    """One-article, one-comment corpus holding the Extinction Rebellion
    sentence."""
    return corpus_from_lines([
        article_line(),
        comment_line(text=ER_SENTENCE),
    ])


@pytest.fixture
def fixtures_dir() -> Path:
    return Path(__file__).parent / "data"
