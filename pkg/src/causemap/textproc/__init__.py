"""Deterministic text processing: tokens, sentences, tags, lemmas.

Everything in this package is a pure function over embedded data files, so
identical input text yields identical output on every run and platform.
"""

from __future__ import annotations

from .lemmatizer import STOP_VERBS, content_lemmas, lemmatize
from .tagger import TAGS, pos_tag
from .tokenizer import Sentence, Token, split_sentences, tokenize

__all__ = [
    "STOP_VERBS",
    "TAGS",
    "Sentence",
    "Token",
    "analyze",
    "content_lemmas",
    "lemmatize",
    "pos_tag",
    "split_sentences",
    "text_lemmas",
    "tokenize",
]


def analyze(text: str) -> list[Sentence]:
    """Run the full pipeline: split, tokenize, tag and lemmatize ``text``."""
    sentences = []
    for start, end in split_sentences(text):
        tokens = tokenize(text[start:end])
        for tok in tokens:
            tok.start += start
            tok.end += start
        pos_tag(tokens)
        for tok in tokens:
            tok.lemma = lemmatize(tok)
        sentences.append(Sentence(tokens=tokens, source_span=(start, end)))
    return sentences


def text_lemmas(text: str) -> set[str]:
    """Content-lemma set of a free-text span (used on extractor output)."""
    lemmas: set[str] = set()
    for sentence in analyze(text):
        lemmas |= content_lemmas(sentence.tokens)
    return lemmas
