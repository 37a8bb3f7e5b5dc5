"""Coarse part-of-speech tagging over an embedded lexicon.

Resolution order per token: punctuation/number/URL shape checks, then the
most-frequent-tag lexicon, then derivational suffix rules, then
capitalized-non-initial -> NOUN, then the NOUN default. Two Brill-style patch
rules run afterwards in a single left-to-right pass to separate nominal from
verbal uses of the frame-evoking words ("the cause" vs "it causes"); tagging
stays a pure function of the token sequence.
"""

from __future__ import annotations

import re
from importlib import resources

from .tokenizer import Token

TAGS = ("NOUN", "VERB", "ADJ", "ADV", "DET", "PRON", "ADP", "CONJ", "NUM",
        "PUNCT", "OTHER")

_NUM_RE = re.compile(r"[0-9]+(?:[.,][0-9]+)*%?$")
_URL_RE = re.compile(r"(?:https?://|www\.)", re.IGNORECASE)

_NOUN_SUFFIXES = ("tion", "tions", "ment", "ments", "ness")
_VERB_SUFFIXES = ("ize", "izes", "ized", "izing", "ify", "ifies", "ified",
                  "ifying")
_ADJ_SUFFIXES = ("ous", "able", "ful")

_ARTICLES = {"the", "a", "an"}


def _load_lexicon() -> dict[str, str]:
    lexicon: dict[str, str] = {}
    data = resources.files("causemap.textproc").joinpath("data/lexicon.txt")
    for line in data.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        surface, tag = line.split("\t")
        if tag not in TAGS:
            raise ValueError(f"unknown tag {tag!r} in lexicon for {surface!r}")
        lexicon[surface] = tag
    return lexicon


_LEXICON = _load_lexicon()


def _shape_tag(surface: str) -> str | None:
    if _URL_RE.match(surface):
        return "OTHER"
    if not any(ch.isalnum() for ch in surface):
        return "PUNCT"
    if _NUM_RE.match(surface):
        return "NUM"
    return None


def _base_tag(token: Token, position: int) -> str:
    surface = token.surface
    shape = _shape_tag(surface)
    if shape:
        return shape
    lower = surface.lower()
    tag = _LEXICON.get(lower)
    if tag:
        return tag
    if lower.endswith(_NOUN_SUFFIXES):
        return "NOUN"
    if lower.endswith(_VERB_SUFFIXES):
        return "VERB"
    if lower.endswith(_ADJ_SUFFIXES):
        return "ADJ"
    if lower.endswith("ly"):
        return "ADV"
    if position > 0 and surface[:1].isupper():
        return "NOUN"
    return "NOUN"


def pos_tag(tokens: list[Token]) -> list[Token]:
    """Assign a coarse tag to every token, in place, and return the list."""
    for i, tok in enumerate(tokens):
        tok.pos = _base_tag(tok, i)
    for i, tok in enumerate(tokens):
        if tok.pos != "VERB":
            continue
        prev = tokens[i - 1] if i > 0 else None
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        if prev is not None and (prev.surface.lower() in _ARTICLES
                                 or prev.pos == "ADJ"):
            tok.pos = "NOUN"
        elif nxt is not None and nxt.surface.lower() == "of":
            tok.pos = "NOUN"
    return tokens
