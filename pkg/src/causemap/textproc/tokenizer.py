"""Rule-based tokenization and sentence splitting.

Both operations are pure functions of the input string: no models, no
randomness, no locale dependence. Token offsets always index back into the
original text, so ``text[tok.start:tok.end] == tok.surface`` holds for every
token and the skipped separators reconstruct the input exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


@dataclass
class Token:
    surface: str
    start: int
    end: int
    pos: str | None = None
    lemma: str | None = None


@dataclass
class Sentence:
    tokens: list[Token] = field(default_factory=list)
    source_span: tuple[int, int] = (0, 0)


# URLs are kept whole so their fragments never leak into lemma sets; the
# tagger maps them to OTHER.
_URL_RE = re.compile(r"(?:https?://|www\.)[^\s<>\"]+")
_WORD_RE = re.compile(r"[^\W_]+(?:['’][^\W_]+)*", re.UNICODE)
_SPACE_RE = re.compile(r"\s+")

# Clitic suffixes produced by splitting a contraction at its apostrophe.
_CLITICS = {"s", "re", "ve", "ll", "d", "m"}


def _split_contraction(surface: str, start: int) -> list[Token]:
    """Split one word token at its final apostrophe when the tail is a known
    contraction ("don't" -> "do","n't"; "it's" -> "it","'s"). Unknown
    apostrophe words (O'Brien) stay whole."""
    idx = max(surface.rfind("'"), surface.rfind("’"))
    if idx <= 0:
        return [Token(surface, start, start + len(surface))]
    tail = surface[idx + 1 :].lower()
    if tail == "t" and idx >= 2 and surface[idx - 1].lower() == "n":
        cut = idx - 1
    elif tail in _CLITICS:
        cut = idx
    else:
        return [Token(surface, start, start + len(surface))]
    head, rest = surface[:cut], surface[cut:]
    if not head:
        return [Token(surface, start, start + len(surface))]
    return [
        Token(head, start, start + cut),
        Token(rest, start + cut, start + len(surface)),
    ]


def tokenize(text: str) -> list[Token]:
    """Tokenize ``text`` into words, clitics, URLs and single-character
    punctuation, with exact source offsets. pos/lemma are left unset."""
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        m = _SPACE_RE.match(text, i)
        if m:
            i = m.end()
            continue
        m = _URL_RE.match(text, i)
        if m:
            tokens.append(Token(m.group(), m.start(), m.end()))
            i = m.end()
            continue
        m = _WORD_RE.match(text, i)
        if m:
            tokens.extend(_split_contraction(m.group(), m.start()))
            i = m.end()
            continue
        tokens.append(Token(text[i], i, i + 1))
        i += 1
    return tokens


# Final-word abbreviations after which a period never ends a sentence.
_ABBREVIATIONS = {
    "e.g.", "i.e.", "cf.", "vs.", "mr.", "mrs.", "ms.", "dr.", "prof.",
    "st.", "no.", "fig.", "p.p.", "u.s.", "u.k.", "approx.",
}
_ABBREV_TAIL_RE = re.compile(r"[A-Za-z]+(?:\.[A-Za-z]+)*\.$")
_TERMINATOR_RE = re.compile(r"[.!?]+")


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Return (start, end) spans partitioning ``text`` into sentences.

    A run of ``.!?`` ends a sentence when it is followed by whitespace and an
    uppercase letter, or by end of text; a period directly after a known
    abbreviation never terminates. Inter-sentence whitespace attaches to the
    preceding sentence so the spans cover every character exactly once.
    """
    if not text:
        return []
    boundaries: list[int] = []
    for m in _TERMINATOR_RE.finditer(text):
        end = m.end()
        rest = text[end:]
        if rest.strip():
            stripped = rest.lstrip()
            if not (rest[0].isspace() and stripped[0].isupper()):
                continue
        if "." in m.group():
            tail = _ABBREV_TAIL_RE.search(text[: end])
            if tail and tail.group().lower() in _ABBREVIATIONS:
                continue
        boundaries.append(end)
    spans: list[tuple[int, int]] = []
    start = 0
    for b in boundaries:
        # extend through trailing whitespace
        while b < len(text) and text[b].isspace():
            b += 1
        if b >= len(text):
            break
        spans.append((start, b))
        start = b
    spans.append((start, len(text)))
    return spans
