"""Shallow verb / direct-object extraction over tagged sentences."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable

from joblib import Parallel, delayed
from sklearn.base import BaseEstimator, TransformerMixin

from .corpus_io import PENN_TAGS, Sentence, TagClasses
from .exceptions import ConfigurationError, InputFormatError


@dataclass(frozen=True)
class VerbObjectPair:
    verb_lemma: str
    object_lemma: str
    sentence_id: int
    verb_index: int
    object_index: int

    def __post_init__(self):
        if self.verb_index >= self.object_index:
            raise ValueError("verb must precede its object")
        if not self.verb_lemma or not self.object_lemma:
            raise ValueError("empty lemma")


@dataclass(frozen=True)
class ExtractionConfig:
    max_intervening: int = 5
    exclude_passive: bool = True
    require_nominal_filter: bool = False

    def __post_init__(self):
        if self.max_intervening < 0:
            raise ConfigurationError("max_intervening must be >= 0")


DEFAULT_CONFIG = ExtractionConfig()


def _is_passive(tokens, i, tags, be="be"):
    if tokens[i].tag != "VBN":
        return False
    for j in range(i - 1, -1, -1):
        if tokens[j].tag in tags.verb_tags:
            return tokens[j].lemma == be
    return False


def extract_pairs(sentence: Sentence, config: ExtractionConfig = DEFAULT_CONFIG,
                  tag_classes: TagClasses = PENN_TAGS) -> list[VerbObjectPair]:
    """Find the direct object (if any) of every verb in ``sentence``.

    From each verb, skip at most ``max_intervening`` determiners, possessives,
    adjectives, adverbs and cardinals; a run of nouns must follow, and its
    last noun is the object. Anything else ends the search for that verb.
    """
    tokens = sentence.tokens
    n = len(tokens)
    modifiers = tag_classes.modifier_tags
    nouns = tag_classes.noun_tags
    pairs = []
    for i, tok in enumerate(tokens):
        if tok.tag not in tag_classes.verb_tags:
            continue
        if config.exclude_passive and _is_passive(tokens, i, tag_classes):
            continue
        j = i + 1
        while j < n and tokens[j].tag in modifiers and j - i <= config.max_intervening:
            j += 1
        if j >= n or tokens[j].tag not in nouns:
            continue
        while j + 1 < n and tokens[j + 1].tag in nouns:
            j += 1
        pairs.append(VerbObjectPair(tok.lemma, tokens[j].lemma, sentence.id, i, j))
    return pairs


def _extract_chunk(sentences, config, tag_classes):
    return [pair for s in sentences for pair in extract_pairs(s, config, tag_classes)]


def scan_corpus(corpus: Iterable[Sentence], config: ExtractionConfig = DEFAULT_CONFIG,
                lexicon=None, *, tag_classes: TagClasses = PENN_TAGS, n_jobs=None,
                chunk_size=2000) -> list[VerbObjectPair]:
    """Extract pairs from every sentence, in sentence-id order.

    With ``config.require_nominal_filter`` only pairs whose object is a noun
    in ``lexicon`` are kept. ``n_jobs`` fans extraction out with joblib; the
    result is identical to the sequential one.
    """
    if config.require_nominal_filter and lexicon is None:
        raise ConfigurationError("nominal filter requested but no lexicon supplied")
    sentences = sorted(corpus, key=lambda s: s.id)
    if n_jobs in (None, 1) or len(sentences) <= chunk_size:
        pairs = _extract_chunk(sentences, config, tag_classes)
    else:
        chunks = [sentences[k:k + chunk_size] for k in range(0, len(sentences), chunk_size)]
        parts = Parallel(n_jobs=n_jobs)(
            delayed(_extract_chunk)(chunk, config, tag_classes) for chunk in chunks)
        pairs = [pair for part in parts for pair in part]
    if config.require_nominal_filter:
        keep = lexicon.nouns()
        pairs = [p for p in pairs if p.object_lemma in keep]
    return pairs


def write_pairs(pairs, fh):
    """Write the pair dump TSV, sorted by (sentence_id, verb_index)."""
    writer = csv.writer(fh, delimiter="\t", lineterminator="\n")
    for p in sorted(pairs, key=lambda p: (p.sentence_id, p.verb_index)):
        writer.writerow([p.sentence_id, p.verb_lemma, p.object_lemma, p.verb_index, p.object_index])


def read_pairs(path) -> list[VerbObjectPair]:
    out = []
    with open(path, encoding="utf-8", newline="") as fh:
        for number, row in enumerate(csv.reader(fh, delimiter="\t"), 1):
            if not row:
                continue
            try:
                sid, verb, obj, vi, oi = row
                out.append(VerbObjectPair(verb, obj, int(sid), int(vi), int(oi)))
            except ValueError as exc:
                raise InputFormatError(path, number, f"bad pair row: {exc}") from None
    return out


class PairExtractor(TransformerMixin, BaseEstimator):
    """Transform sentences into verb / direct-object pairs.

    Parameters mirror :class:`ExtractionConfig`; ``lexicon`` is only used
    when ``require_nominal_filter`` is set.
    """

    def __init__(self, max_intervening=5, exclude_passive=True, require_nominal_filter=False,
                 lexicon=None, tag_classes=None, n_jobs=None):
        self.max_intervening = max_intervening
        self.exclude_passive = exclude_passive
        self.require_nominal_filter = require_nominal_filter
        self.lexicon = lexicon
        self.tag_classes = tag_classes
        self.n_jobs = n_jobs

    def _config(self):
        return ExtractionConfig(self.max_intervening, self.exclude_passive,
                                self.require_nominal_filter)

    def fit(self, X=None, y=None):
        config = self._config()
        if config.require_nominal_filter and self.lexicon is None:
            raise ConfigurationError("nominal filter requested but no lexicon supplied")
        return self

    def transform(self, X):
        from ._validation import check_sentences

        return scan_corpus(check_sentences(X), self._config(), self.lexicon,
                           tag_classes=self.tag_classes or PENN_TAGS, n_jobs=self.n_jobs)
