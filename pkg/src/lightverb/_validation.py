"""Input checks shared by the estimators."""

from collections.abc import Iterable

from .corpus_io import Sentence


def _materialize(X, what):
    if isinstance(X, (str, bytes)):
        raise TypeError(f"expected an iterable of {what}, got a string")
    if not isinstance(X, Iterable):
        raise TypeError(f"expected an iterable of {what}, got {type(X).__name__}")
    return list(X)


def check_sentences(X):
    """Return ``X`` as a list of :class:`Sentence` with unique ids."""
    sentences = _materialize(X, "Sentence")
    seen = set()
    for s in sentences:
        if not isinstance(s, Sentence):
            raise TypeError(f"expected Sentence, got {type(s).__name__}")
        if s.id in seen:
            raise ValueError(f"duplicate sentence id {s.id}")
        seen.add(s.id)
    return sentences


def check_pairs(X):
    from .extract import VerbObjectPair

    pairs = _materialize(X, "VerbObjectPair")
    for p in pairs:
        if not isinstance(p, VerbObjectPair):
            raise TypeError(f"expected VerbObjectPair, got {type(p).__name__}")
    return pairs


def check_lemmas(X):
    """Accept one lemma or an iterable of lemmas; always return a list."""
    if isinstance(X, str):
        return [X]
    lemmas = _materialize(X, "lemmas")
    for lemma in lemmas:
        if not isinstance(lemma, str) or not lemma:
            raise ValueError(f"invalid lemma {lemma!r}")
    return lemmas


def check_min_count(value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"min_count must be a positive integer, got {value!r}")
    return value
