"""Causation-frame extraction.

A sentence evokes the frame through one of seven lexical units (cause.v,
due to.prep, because.c, because of.prep, give rise to.v, lead to.v,
result in.v). Matching is done on lemma sequences, so inflected forms all
trigger; verbal units additionally require a VERB tag on their head word so
the noun "cause" never fires. Cause/effect spans are carved out of the
sentence with clause-boundary heuristics and normalized to lowercase,
determiner-stripped text.

Per-trigger span rules by construction:

    ACTIVE  verbal   X TRIGGER Y         cause=left,  effect=right
    PASSIVE verbal   Y TRIGGERed by X    effect=left, cause=after "by"
    due to / because of   Y TRIGGER X    effect=left, cause=right
    because.c             Y TRIGGER X    effect=left clause, cause=right

Argument spans run to the nearest clause boundary: sentence edge, comma,
";", ":", a coordinating or subordinating conjunction at parenthesis depth
zero, or another trigger.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable

from . import textproc
from .corpus import CorpusHandle, iter_comments
from .textproc import Sentence, Token

CAUSE_V = "CAUSE_V"
DUE_TO_PREP = "DUE_TO_PREP"
BECAUSE_C = "BECAUSE_C"
BECAUSE_OF_PREP = "BECAUSE_OF_PREP"
GIVE_RISE_TO_V = "GIVE_RISE_TO_V"
LEAD_TO_V = "LEAD_TO_V"
RESULT_IN_V = "RESULT_IN_V"

ACTIVE = "ACTIVE"
PASSIVE = "PASSIVE"
NA = "NA"

# lexical unit -> (lemma sequence, verbal?) ordered longest-first so that
# "because of" wins over "because" (maximal matches).
_LEXICAL_UNITS: list[tuple[str, tuple[str, ...], bool]] = [
    (GIVE_RISE_TO_V, ("give", "rise", "to"), True),
    (BECAUSE_OF_PREP, ("because", "of"), False),
    (DUE_TO_PREP, ("due", "to"), False),
    (LEAD_TO_V, ("lead", "to"), True),
    (RESULT_IN_V, ("result", "in"), True),
    (CAUSE_V, ("cause",), True),
    (BECAUSE_C, ("because",), False),
]

# wire names, after the FrameNet lexical-unit notation
TRIGGER_WIRE_NAMES = {
    CAUSE_V: "cause.v",
    DUE_TO_PREP: "due to.prep",
    BECAUSE_C: "because.c",
    BECAUSE_OF_PREP: "because of.prep",
    GIVE_RISE_TO_V: "give rise to.v",
    LEAD_TO_V: "lead to.v",
    RESULT_IN_V: "result in.v",
}

_COORDINATORS = {"and", "but", "or", "nor", "so", "yet"}
_SUBORDINATORS = {
    "if", "when", "while", "although", "though", "since", "unless",
    "whereas", "until", "once", "after", "before", "whether", "that",
}
# sentence-final marks matter when a lowercase continuation kept two
# sentences joined: spans must not leak across them
_BOUNDARY_PUNCT = {",", ";", ":", ".", "!", "?"}
_OPENERS = {"(", "[", "{"}
_CLOSERS = {")", "]", "}"}

# verb-group material skipped between a left argument and a verbal trigger
_AUX_LEMMAS = {"be", "do", "have", "will", "would", "can", "could", "may",
               "might", "must", "shall", "should", "not"}

_DETERMINERS = ("the", "a", "an", "this", "that", "such", "some", "any",
                "all")
_LEAD_INS = ("emanating", "arising")

_PRONOUN_SPANS = {
    "it", "this", "that", "they", "he", "she", "we", "you", "i", "them",
    "those", "these", "which", "what",
}


@dataclass(frozen=True)
class Trigger:
    lexical_unit: str
    token_span: tuple[int, int]
    voice: str


@dataclass(frozen=True)
class CausalRelation:
    relation_id: str
    comment_id: str
    commenter_id: str
    utterance: str
    cause: str
    effect: str
    trigger: Trigger
    pronominal: bool = False


@dataclass
class ExtractionReport:
    comments_processed: int = 0
    comments_failed: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)


def _is_be_form(tok: Token) -> bool:
    return tok.lemma == "be"


def _detect_voice(sentence: Sentence, start: int, end: int,
                  verbal: bool) -> str:
    if not verbal:
        return NA
    tokens = sentence.tokens
    head = tokens[start].surface.lower()
    if head.endswith("ing"):  # progressive, never passive
        return ACTIVE
    after = tokens[end] if end < len(tokens) else None
    if (after is not None and after.lemma == "by"
            and head.endswith(("ed", "en"))):
        return PASSIVE
    i = start - 1
    while i >= 0 and tokens[i].pos == "ADV":
        i -= 1
    if i >= 0 and _is_be_form(tokens[i]):
        return PASSIVE
    return ACTIVE


def find_triggers(sentence: Sentence) -> list[Trigger]:
    """All maximal, non-overlapping lexical-unit matches, left to right."""
    tokens = sentence.tokens
    triggers: list[Trigger] = []
    i = 0
    while i < len(tokens):
        matched = False
        for unit, lemmas, verbal in _LEXICAL_UNITS:
            n = len(lemmas)
            if i + n > len(tokens):
                continue
            if tuple(t.lemma for t in tokens[i:i + n]) != lemmas:
                continue
            if verbal and tokens[i].pos != "VERB":
                continue
            voice = _detect_voice(sentence, i, i + n, verbal)
            triggers.append(Trigger(unit, (i, i + n), voice))
            i += n
            matched = True
            break
        if not matched:
            i += 1
    return triggers


def normalize_span(tokens: list[Token]) -> str:
    """Lowercase a token span, trimming lead-ins ("emanating from ..."),
    edge punctuation and leading determiners; whitespace collapses to
    single spaces. May return ""."""
    toks = list(tokens)
    for i in range(len(toks) - 2, -1, -1):
        if (toks[i].surface.lower() in _LEAD_INS
                and toks[i + 1].surface.lower() == "from"):
            toks = toks[i + 2:]
            break
    while toks and toks[0].pos == "PUNCT":
        toks.pop(0)
    while toks and toks[-1].pos == "PUNCT":
        toks.pop()
    while toks and toks[0].surface.lower() in _DETERMINERS:
        toks.pop(0)
    while toks and toks[-1].pos == "PUNCT":
        toks.pop()
    return " ".join(t.surface.lower() for t in toks)


def _boundary(tok: Token, depth: int) -> bool:
    if depth > 0:
        return False
    surface = tok.surface.lower()
    if surface in _BOUNDARY_PUNCT:
        return True
    return surface in _COORDINATORS or surface in _SUBORDINATORS


def _scan_left(sentence: Sentence, start: int,
               trigger_spans: list[tuple[int, int]]) -> list[Token]:
    tokens = sentence.tokens
    depth = 0
    collected: list[Token] = []
    i = start - 1
    while i >= 0:
        tok = tokens[i]
        surface = tok.surface
        if surface in _CLOSERS:
            depth += 1
        elif surface in _OPENERS:
            depth = max(0, depth - 1)
        if any(s <= i < e for s, e in trigger_spans):
            break
        if _boundary(tok, depth):
            break
        collected.append(tok)
        i -= 1
    collected.reverse()
    return collected


def _scan_right(sentence: Sentence, start: int,
                trigger_spans: list[tuple[int, int]],
                stop_at_aux: bool = False) -> list[Token]:
    tokens = sentence.tokens
    depth = 0
    collected: list[Token] = []
    i = start
    while i < len(tokens):
        tok = tokens[i]
        surface = tok.surface
        if surface in _OPENERS:
            depth += 1
        elif surface in _CLOSERS:
            depth = max(0, depth - 1)
        if any(s <= i < e for s, e in trigger_spans):
            break
        if _boundary(tok, depth):
            break
        if stop_at_aux and depth == 0 and tok.lemma in _AUX_LEMMAS:
            break
        collected.append(tok)
        i += 1
    return collected


def _skip_verb_group(sentence: Sentence, start: int) -> int:
    """Move left over auxiliaries/adverbs so the left argument excludes the
    verb group ("are often caused by", "does not cause")."""
    tokens = sentence.tokens
    i = start
    while i > 0 and (tokens[i - 1].pos == "ADV"
                     or tokens[i - 1].lemma in _AUX_LEMMAS):
        i -= 1
    return i


def _is_pronominal(tokens: list[Token]) -> bool:
    return (len(tokens) == 1
            and tokens[0].surface.lower() in _PRONOUN_SPANS)


def _matrix_after(sentence: Sentence, cause_toks: list[Token],
                  cause_start: int,
                  others: list[tuple[int, int]]) -> list[Token]:
    """Matrix clause to the right of a sentence-initial subordinate
    ("Because X, Y" / "Due to X, Y"): the span after the boundary that
    closed the cause span."""
    i = cause_start + len(cause_toks)
    if i >= len(sentence.tokens):
        return []
    return _scan_right(sentence, i + 1, others)


def extract_relation(sentence: Sentence, trigger: Trigger,
                     comment_id: str = "", commenter_id: str = "",
                     utterance: str | None = None,
                     trigger_spans: list[tuple[int, int]] | None = None,
                     ) -> CausalRelation | None:
    """Fill the cause/effect slots for one trigger, or return None when
    either slot normalizes to empty."""
    if trigger_spans is None:
        trigger_spans = [trigger.token_span]
    start, end = trigger.token_span
    others = [s for s in trigger_spans if s != trigger.token_span]
    tokens = sentence.tokens
    unit = trigger.lexical_unit
    verbal = unit in (CAUSE_V, GIVE_RISE_TO_V, LEAD_TO_V, RESULT_IN_V)

    if verbal and trigger.voice == PASSIVE:
        left_edge = _skip_verb_group(sentence, start)
        effect_toks = _scan_left(sentence, left_edge, others)
        cause_start = end
        if cause_start < len(tokens) and tokens[cause_start].lemma == "by":
            cause_start += 1
            cause_toks = _scan_right(sentence, cause_start, others)
        else:
            cause_toks = []
    elif verbal:
        left_edge = _skip_verb_group(sentence, start)
        cause_toks = _scan_left(sentence, left_edge, others)
        effect_toks = _scan_right(sentence, end, others)
    else:
        prepositional = unit in (DUE_TO_PREP, BECAUSE_OF_PREP)
        if prepositional:
            left_edge = _skip_verb_group(sentence, start)
        else:  # BECAUSE_C keeps the whole matrix clause
            left_edge = start
        effect_toks = _scan_left(sentence, left_edge, others)
        # a prepositional complement is a noun phrase; auxiliaries bound it
        cause_toks = _scan_right(sentence, end, others,
                                 stop_at_aux=prepositional)
        if not effect_toks:
            effect_toks = _matrix_after(sentence, cause_toks, end, others)

    pronominal = _is_pronominal(cause_toks) or _is_pronominal(effect_toks)
    # a bare pronoun slot ("this causes ...") survives normalization so the
    # flag can carry it downstream
    cause = (cause_toks[0].surface.lower() if _is_pronominal(cause_toks)
             else normalize_span(cause_toks))
    effect = (effect_toks[0].surface.lower() if _is_pronominal(effect_toks)
              else normalize_span(effect_toks))
    if not cause or not effect:
        return None
    if utterance is None:
        utterance = " ".join(t.surface for t in tokens)
    return CausalRelation(
        relation_id=_relation_id(comment_id, sentence.source_span,
                                 trigger.token_span),
        comment_id=comment_id,
        commenter_id=commenter_id,
        utterance=utterance,
        cause=cause,
        effect=effect,
        trigger=trigger,
        pronominal=pronominal,
    )


def _relation_id(comment_id: str, sentence_span: tuple[int, int],
                 token_span: tuple[int, int]) -> str:
    key = f"{comment_id}:{sentence_span[0]}-{sentence_span[1]}:" \
          f"{token_span[0]}-{token_span[1]}"
    return hashlib.sha256(key.encode("utf-8")).hexdigest()[:16]


def extract_comment(comment_id: str, commenter_id: str,
                    text: str) -> list[CausalRelation]:
    relations: list[CausalRelation] = []
    for sentence in textproc.analyze(text):
        start, end = sentence.source_span
        utterance = text[start:end].strip()
        triggers = find_triggers(sentence)
        spans = [t.token_span for t in triggers]
        for trigger in triggers:
            relation = extract_relation(sentence, trigger, comment_id,
                                        commenter_id, utterance, spans)
            if relation is not None:
                relations.append(relation)
    return relations


def extract_corpus(corpus: CorpusHandle,
                   report: ExtractionReport | None = None,
                   ) -> list[CausalRelation]:
    """Extract every comment in canonical order. Per-comment failures are
    recorded in the report and skipped, never fatal."""
    report = report if report is not None else ExtractionReport()
    relations: list[CausalRelation] = []
    for comment in iter_comments(corpus):
        report.comments_processed += 1
        try:
            relations.extend(extract_comment(
                comment.comment_id, comment.commenter_id, comment.text))
        except Exception as exc:
            report.comments_failed += 1
            report.failures.append((comment.comment_id, str(exc)))
    return relations


def relations_to_json_obj(relations: Iterable[CausalRelation],
                          paper_shape: bool = False) -> dict:
    """The `causalRelations` wire object; with ``paper_shape`` only the
    three classic fields are emitted."""
    items = []
    for rel in relations:
        if paper_shape:
            items.append({
                "utterance": rel.utterance,
                "cause": rel.cause,
                "effect": rel.effect,
            })
        else:
            items.append({
                "utterance": rel.utterance,
                "cause": rel.cause,
                "effect": rel.effect,
                "trigger": TRIGGER_WIRE_NAMES[rel.trigger.lexical_unit],
                "commentId": rel.comment_id,
                "relationId": rel.relation_id,
                "commenterId": rel.commenter_id,
                "pronominal": rel.pronominal,
            })
    return {"causalRelations": items}
