"""Tagged-corpus ingestion: tokens, Penn tag classes, lemmatization, lexical density.

Input is Brill-tagger output, one sentence per line, tokens written as
``surface/TAG`` and separated by whitespace.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Mapping, Sequence

from sklearn.base import BaseEstimator, TransformerMixin

from ._irregulars import IRREGULAR_NOUNS, IRREGULAR_VERBS
from .exceptions import MalformedTokenError, UndefinedDensityError


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: str
    lemma: str

    def __str__(self):
        return f"{self.surface}/{self.tag}"


@dataclass(frozen=True)
class Sentence:
    id: int
    tokens: tuple[TaggedToken, ...] = ()

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


def _frozen(*tags):
    return frozenset(tags)


@dataclass(frozen=True)
class TagClasses:
    """Partition of the Penn Treebank tagset used by extraction and density."""

    verb_tags: frozenset = _frozen("VB", "VBD", "VBG", "VBN", "VBP", "VBZ")
    noun_tags: frozenset = _frozen("NN", "NNS", "NNP", "NNPS")
    determiner_tags: frozenset = _frozen("DT", "PDT")
    adjective_tags: frozenset = _frozen("JJ", "JJR", "JJS")
    adverb_tags: frozenset = _frozen("RB", "RBR", "RBS")
    possessive_tags: frozenset = _frozen("PRP$", "WP$")
    cardinal_tags: frozenset = _frozen("CD")
    content_tags: frozenset = _frozen(
        "NN", "NNS", "NNP", "NNPS",
        "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
        "JJ", "JJR", "JJS",
        "RB", "RBR", "RBS",
    )
    punctuation_tags: frozenset = _frozen(
        ".", ",", ":", ";", "``", "''", '"', "(", ")", "-LRB-", "-RRB-",
        "-LSB-", "-RSB-", "-LCB-", "-RCB-", "#", "$", "-NONE-",
    )
    proper_noun_tags: frozenset = _frozen("NNP", "NNPS")
    base_verb_tag: str = "VB"

    def __post_init__(self):
        if self.verb_tags & self.noun_tags:
            raise ValueError("verb and noun tag sets overlap")
        if not (self.noun_tags | self.adjective_tags) <= self.content_tags:
            raise ValueError("content tags must include every noun and adjective tag")

    @property
    def modifier_tags(self):
        """Tags allowed between a verb and its object noun."""
        return (self.determiner_tags | self.possessive_tags | self.adjective_tags
                | self.adverb_tags | self.cardinal_tags)

    def is_verb(self, tag):
        return tag in self.verb_tags

    def is_noun(self, tag):
        return tag in self.noun_tags

    def is_content(self, tag):
        return tag in self.content_tags

    def is_punctuation(self, tag):
        return tag in self.punctuation_tags


PENN_TAGS = TagClasses()


# Stems left after stripping -ed/-ing that take back a final e
# (decid -> decide, produc -> produce, resembl -> resemble).
_E_FINAL = (
    r"(?:[^aeiou](?:at|ut|ud|id|ir|ar|ur|in|ot|ok|ak|ik|ag|um|ap|ib|od)"
    r"|iat|uat|uir|creat|plet|elet|v|c|u|dg|rg|iz|yz|ys|is|os|us|as|ns|rs|ps|ls"
    r"|[bptdkgfzc]l|chang|rang|eng|ung)$"
)

_VBZ_RULES = (
    ("ies", "y"), ("sses", "ss"), ("shes", "sh"), ("ches", "ch"),
    ("xes", "x"), ("zzes", "zz"), ("oes", "o"), ("ss", "ss"), ("s", ""),
)
_VBD_RULES = (("ied", "y"), ("eed", "ee"), ("ed", ""))
_VBG_RULES = (("eeing", "ee"), ("ing", ""))

_DEFAULT_VERB_RULES = {
    "VBZ": _VBZ_RULES, "VBD": _VBD_RULES, "VBN": _VBD_RULES, "VBG": _VBG_RULES,
}
_DEFAULT_NOUN_RULES = (
    ("ies", "y"), ("sses", "ss"), ("shes", "sh"), ("ches", "ch"), ("xes", "x"),
    ("zzes", "zz"), ("ss", "ss"), ("us", "us"), ("is", "is"), ("s", ""),
)

_VOWELS = "aeiou"
_NO_UNDOUBLE = "lsfz" + _VOWELS
_REPAIRED = ("ed", "ing")


@dataclass(frozen=True)
class LemmaRules:
    """Lemmatization tables.

    ``verb_suffix_rules`` maps an inflected verb tag to an ordered list of
    ``(suffix, replacement)`` pairs; ``noun_suffix_rules`` applies to plural
    common nouns. The first matching rule wins. Stems exposed by stripping a
    bare ``-ed``/``-ing`` are repaired: doubled final consonants are undoubled
    and a final ``e`` is restored where the stem shape calls for one.
    """

    irregular_verb_map: Mapping[str, str] = field(default_factory=lambda: dict(IRREGULAR_VERBS))
    irregular_noun_map: Mapping[str, str] = field(default_factory=lambda: dict(IRREGULAR_NOUNS))
    verb_suffix_rules: Mapping[str, tuple] = field(default_factory=lambda: dict(_DEFAULT_VERB_RULES))
    noun_suffix_rules: tuple = _DEFAULT_NOUN_RULES
    plural_noun_tags: frozenset = _frozen("NNS")
    e_final_pattern: str = _E_FINAL
    min_stem: int = 2

    def __post_init__(self):
        for table in (self.irregular_verb_map, self.irregular_noun_map):
            for surface, lemma in table.items():
                if lemma != lemma.lower() or not lemma:
                    raise ValueError(f"irregular lemma for {surface!r} must be non-empty lowercase")
        object.__setattr__(self, "_e_final", re.compile(self.e_final_pattern))

    def with_overrides(self, verbs=None, nouns=None):
        """Return a copy whose irregular maps are extended by ``verbs``/``nouns``."""
        verb_map = dict(self.irregular_verb_map)
        verb_map.update({k.lower(): v.lower() for k, v in (verbs or {}).items()})
        noun_map = dict(self.irregular_noun_map)
        noun_map.update({k.lower(): v.lower() for k, v in (nouns or {}).items()})
        return replace(self, irregular_verb_map=verb_map,
                       irregular_noun_map=noun_map)

    def _apply(self, word, rules):
        for suffix, replacement in rules:
            if word.endswith(suffix) and len(word) - len(suffix) + len(replacement) >= self.min_stem:
                stem = word[: len(word) - len(suffix)]
                if not replacement and suffix in _REPAIRED:
                    return self._repair(stem, word)
                return stem + replacement
        return word

    def _repair(self, stem, word):
        if len(stem) < self.min_stem:
            return word
        last = stem[-1]
        if len(stem) >= 4 and last == stem[-2] and last not in _NO_UNDOUBLE:
            return stem[:-1]
        if last == "e":
            return stem
        if self._e_final.search(stem) or _short_cvc(stem):
            return stem + "e"
        return stem


def _short_cvc(stem):
    # One-syllable consonant-vowel-consonant stems were not doubled, so the base ends in e.
    s = stem.replace("qu", "q")
    if s[-1] in _VOWELS + "wxy":
        return False
    if _syllables(s) != 1:
        return False
    if len(s) == 2:
        return s[0] in _VOWELS
    return (s[-2] in _VOWELS or s[-2] == "y") and s[-3] not in _VOWELS


def _syllables(s):
    return len(re.findall(r"[aeiou]+|(?<=[^aeiou])y", s))


DEFAULT_RULES = LemmaRules()


def lemmatize_verb(surface, tag, rules=DEFAULT_RULES):
    """Lemma of a verb token: irregular table first, then tag-specific suffix rules."""
    word = surface.lower()
    if word in rules.irregular_verb_map:
        return rules.irregular_verb_map[word]
    return rules._apply(word, rules.verb_suffix_rules.get(tag, ()))


def lemmatize_noun(surface, tag, rules=DEFAULT_RULES, tag_classes=PENN_TAGS):
    """Lemma of a noun token. Proper nouns are only lowercased."""
    word = surface.lower()
    if tag in tag_classes.proper_noun_tags:
        return word
    if word in rules.irregular_noun_map:
        return rules.irregular_noun_map[word]
    if tag in rules.plural_noun_tags:
        return rules._apply(word, rules.noun_suffix_rules)
    return word


def lemmatize(surface, tag, rules=DEFAULT_RULES, tag_classes=PENN_TAGS):
    if tag in tag_classes.verb_tags:
        return lemmatize_verb(surface, tag, rules)
    if tag in tag_classes.noun_tags:
        return lemmatize_noun(surface, tag, rules, tag_classes)
    return surface.lower()


def split_token(raw, line_number=None, token_index=None):
    surface, sep, tag = raw.rpartition("/")
    if not sep or not surface or not tag:
        raise MalformedTokenError(raw, line_number, token_index)
    return surface, tag


def parse_tagged_line(line, sentence_id=0, *, rules=DEFAULT_RULES, tag_classes=PENN_TAGS,
                      line_number=None, skip_malformed=False, malformed=None):
    """Parse one ``surface/TAG`` line into a :class:`Sentence`.

    The last ``/`` of a token separates surface from tag. With
    ``skip_malformed`` bad tokens are dropped and appended to the
    ``malformed`` list (if given) instead of raising.
    """
    tokens = []
    for index, raw in enumerate(line.split()):
        try:
            surface, tag = split_token(raw, line_number, index)
        except MalformedTokenError as exc:
            if not skip_malformed:
                raise
            if malformed is not None:
                malformed.append(exc)
            continue
        tokens.append(TaggedToken(surface, tag, lemmatize(surface, tag, rules, tag_classes)))
    return Sentence(sentence_id, tuple(tokens))


def format_sentence(sentence):
    return " ".join(str(tok) for tok in sentence.tokens)


def iter_corpus(lines, *, rules=DEFAULT_RULES, tag_classes=PENN_TAGS, skip_malformed=False,
                malformed=None) -> Iterator[Sentence]:
    """Yield sentences with ids assigned from input order (0-based)."""
    for number, line in enumerate(lines):
        yield parse_tagged_line(line.rstrip("\n"), number, rules=rules, tag_classes=tag_classes,
                                line_number=number + 1, skip_malformed=skip_malformed,
                                malformed=malformed)


def read_corpus(path, **kwargs) -> list[Sentence]:
    with open(path, encoding="utf-8") as fh:
        return list(iter_corpus(fh, **kwargs))


def load_lemma_overrides(path, rules=DEFAULT_RULES):
    """Extend ``rules`` from a TSV of ``surface<TAB>verb|noun<TAB>lemma`` rows."""
    from .exceptions import InputFormatError

    verbs, nouns = {}, {}
    with open(path, encoding="utf-8", newline="") as fh:
        for number, row in enumerate(csv.reader(fh, delimiter="\t"), 1):
            if not row or row[0].startswith("#"):
                continue
            if len(row) != 3 or row[1] not in ("verb", "noun") or not row[0] or not row[2]:
                raise InputFormatError(path, number, "expected surface<TAB>verb|noun<TAB>lemma")
            (verbs if row[1] == "verb" else nouns)[row[0]] = row[2]
    return rules.with_overrides(verbs, nouns)


AUXILIARIES = frozenset({"be", "have", "do"})


def lexical_density(sentences: Iterable[Sentence], tag_classes=PENN_TAGS, auxiliaries=AUXILIARIES):
    """Proportion of content words among non-punctuation tokens.

    Content words are open-class tokens, except verb tokens whose lemma is
    an auxiliary.
    """
    content = total = 0
    for sentence in sentences:
        for tok in sentence.tokens:
            if tag_classes.is_punctuation(tok.tag):
                continue
            total += 1
            if not tag_classes.is_content(tok.tag):
                continue
            if tag_classes.is_verb(tok.tag) and tok.lemma in auxiliaries:
                continue
            content += 1
    if total == 0:
        raise UndefinedDensityError("no non-punctuation tokens")
    return content / total


class TaggedLineParser(TransformerMixin, BaseEstimator):
    """Transform raw tagged lines into :class:`Sentence` objects.

    Stateless; ``fit`` only validates parameters. After ``transform``,
    ``n_malformed_`` holds the number of skipped tokens.
    """

    def __init__(self, skip_malformed=False, rules=None, tag_classes=None):
        self.skip_malformed = skip_malformed
        self.rules = rules
        self.tag_classes = tag_classes

    def fit(self, X=None, y=None):
        return self

    def transform(self, X: Sequence[str]):
        if isinstance(X, (str, bytes)):
            raise TypeError("expected an iterable of lines, got a single string")
        bad = []
        out = list(iter_corpus(X, rules=self.rules or DEFAULT_RULES,
                               tag_classes=self.tag_classes or PENN_TAGS,
                               skip_malformed=self.skip_malformed, malformed=bad))
        self.n_malformed_ = len(bad)
        return out


__all__ = [
    "AUXILIARIES", "DEFAULT_RULES", "LemmaRules", "PENN_TAGS", "Sentence", "TagClasses",
    "TaggedLineParser", "TaggedToken", "format_sentence", "iter_corpus", "lemmatize",
    "lemmatize_noun", "lemmatize_verb", "lexical_density", "load_lemma_overrides",
    "parse_tagged_line", "read_corpus", "split_token",
]
