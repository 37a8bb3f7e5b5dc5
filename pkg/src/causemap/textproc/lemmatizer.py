"""Lemmatization and content-word filtering.

The lemmatizer resolves irregular forms through an embedded exception table
and otherwise strips inflectional suffixes per POS, restoring silent "e" and
doubled consonants with an ending-class table. It is intentionally a
heuristic: the pipeline only needs dictionary forms stable enough for
counting shared lemmata, not treebank-grade morphology.
"""

from __future__ import annotations

from importlib import resources

from .tokenizer import Token

_VOWELS = set("aeiouy")

# Doubled consonants dropped after stripping -ed/-ing/-er/-est. ll/ss/zz/ff/dd
# stay ("falling", "passing", "adding" end in legitimate doubles).
_UNDOUBLE = {"bb", "gg", "kk", "mm", "nn", "pp", "rr", "tt"}

# Silent-e restoration, keyed by the stripped stem's final two letters. The
# value constrains the letter before that ending: "cons" = consonant required,
# "any" = always restore. Stems that were just undoubled skip this table.
_RESTORE_E = {
    "at": "cons", "ot": "cons", "ut": "any",
    "id": "cons", "ad": "cons",
    "ir": "any", "ur": "any", "or": "any", "ar": "cons",
    "in": "cons", "on": "cons",
    "am": "cons", "im": "cons", "om": "cons", "um": "cons",
    "ag": "any", "eg": "any", "ig": "any", "og": "any", "ug": "any",
    "rg": "any", "dg": "any",
    "nc": "any", "rc": "any",
    "ns": "any", "rs": "any", "ps": "any",
    "al": "cons", "il": "cons", "ul": "cons",
    "ak": "cons", "ik": "cons", "ok": "cons", "uk": "cons",
    "ap": "cons", "ip": "cons", "op": "cons", "ep": "cons",
    "ab": "cons", "ib": "cons", "ob": "cons", "ub": "cons",
}

_ES_STEM_ENDINGS = ("ss", "x", "z", "ch", "sh", "o")


def _load_exceptions() -> dict[tuple[str, str], str]:
    table: dict[tuple[str, str], str] = {}
    data = resources.files("causemap.textproc").joinpath(
        "data/lemma_exceptions.txt")
    for line in data.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        surface, pos, lemma = line.split("\t")
        table[(surface, pos)] = lemma
    return table


def _load_stop_verbs() -> frozenset[str]:
    data = resources.files("causemap.textproc").joinpath("data/stop_verbs.txt")
    verbs = set()
    for line in data.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            verbs.add(line)
    return frozenset(verbs)


_EXCEPTIONS = _load_exceptions()
STOP_VERBS = _load_stop_verbs()


def _has_vowel(s: str) -> bool:
    return any(ch in _VOWELS for ch in s)


def _restore(stem: str) -> str:
    """Undo consonant doubling or restore a silent 'e' on a stripped stem."""
    if len(stem) >= 3 and stem[-2:] in _UNDOUBLE:
        return stem[:-1]
    if len(stem) >= 3:
        rule = _RESTORE_E.get(stem[-2:])
        if rule == "any":
            return stem + "e"
        if rule == "cons" and stem[-3] not in _VOWELS:
            return stem + "e"
        # -le verbs: "doubl" -> "double", but "travel"/"fall" stay
        if (stem[-1] == "l" and stem[-2] not in _VOWELS
                and stem[-2] != "l"):
            return stem + "e"
    if stem.endswith(("u", "v", "z")):
        return stem + "e"
    if len(stem) >= 2 and stem[-1] in "cs" and stem[-2] in _VOWELS:
        return stem + "e"
    return stem


def _strip_plural(word: str) -> str:
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("es") and len(word) > 3 and word[:-2].endswith(
            _ES_STEM_ENDINGS):
        return word[:-2]
    if (word.endswith("s") and not word.endswith(("ss", "us", "is"))
            and len(word) >= 4):
        stem = word[:-1]
        if _has_vowel(stem):
            return stem
    return word


def _lemmatize_verb(word: str) -> str:
    if word.endswith("ied") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("ed") and len(word) >= 4 and not word.endswith("eed"):
        stem = word[:-2]
        if _has_vowel(stem):
            return _restore(stem)
    if word.endswith("ing") and len(word) >= 5:
        stem = word[:-3]
        if _has_vowel(stem):
            return _restore(stem)
    return _strip_plural(word)


def _lemmatize_adj(word: str) -> str:
    if word.endswith("iest") and len(word) > 5:
        return word[:-4] + "y"
    if word.endswith("ier") and len(word) > 4:
        return word[:-3] + "y"
    for suffix in ("est", "er"):
        if word.endswith(suffix) and len(word) - len(suffix) >= 3:
            stem = word[: -len(suffix)]
            if _has_vowel(stem):
                return _restore(stem)
    return word


def lemmatize(token: Token) -> str:
    """Return the lowercase dictionary form for a tagged token."""
    lower = token.surface.lower()
    if token.pos not in ("NOUN", "VERB", "ADJ"):
        return lower
    if not lower.isalpha() and not lower.startswith("'"):
        return lower
    exception = _EXCEPTIONS.get((lower, token.pos))
    if exception is not None:
        return exception
    if token.pos == "NOUN":
        return _strip_plural(lower)
    if token.pos == "VERB":
        return _lemmatize_verb(lower)
    return _lemmatize_adj(lower)


def content_lemmas(tokens: list[Token]) -> set[str]:
    """Lemma set of the NOUN/VERB/ADJ tokens, minus the stop verbs."""
    lemmas = set()
    for tok in tokens:
        if tok.pos in ("NOUN", "VERB", "ADJ") and tok.lemma:
            if tok.lemma in STOP_VERBS:
                continue
            lemmas.add(tok.lemma)
    return lemmas
