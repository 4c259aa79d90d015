"""Deverbal nominalization lexicon: builtin pairs plus an orthographic heuristic.

Heuristic candidates stay ``candidate`` until a filter file accepts or
rejects them. A lexicon is read through a view: ``"confirmed"`` (default)
or ``"all"``, which also admits unfiltered candidates.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass, replace
from typing import Iterable

from .exceptions import InputFormatError

BUILTIN, HEURISTIC = "builtin", "heuristic"
CONFIRMED, CANDIDATE, REJECTED = "confirmed", "candidate", "rejected"
VIEWS = ("confirmed", "all")


@dataclass(frozen=True)
class NominalEntry:
    noun_lemma: str
    stem_verb_lemma: str
    source: str = HEURISTIC
    status: str = CANDIDATE

    @property
    def key(self):
        return (self.noun_lemma, self.stem_verb_lemma)


@dataclass(frozen=True)
class OrthoRule:
    noun_suffix: str
    verb_replacement: str
    rule_id: str

    def stem(self, noun):
        if not noun.endswith(self.noun_suffix):
            return None
        base = noun[: len(noun) - len(self.noun_suffix)] if self.noun_suffix else noun
        return base + self.verb_replacement if base else None


def _rules(*specs):
    rules = [OrthoRule(suffix, repl, f"-{suffix or '0'}>{repl or '0'}") for suffix, repl in specs]
    return tuple(sorted(rules, key=lambda r: -len(r.noun_suffix)))


DEFAULT_ORTHO_RULES = _rules(
    ("ment", ""), ("ment", "e"),
    ("ion", ""), ("ion", "e"),
    ("ation", "ate"), ("ation", "e"),
    ("al", "e"), ("al", ""),
    ("ance", ""), ("ance", "e"),
    ("ence", ""), ("ence", "e"),
    ("ing", ""), ("ing", "e"),
    ("age", ""),
    ("ure", "e"),
    ("ery", ""),
    ("", ""),
)


def _read_tsv(path, width, what):
    with open(path, encoding="utf-8", newline="") as fh:
        for number, row in enumerate(csv.reader(fh, delimiter="\t"), 1):
            if not row or (len(row) == 1 and not row[0].strip()) or row[0].startswith("#"):
                continue
            row = [cell.strip() for cell in row]
            if len(row) != width or not all(row):
                raise InputFormatError(path, number, f"expected {what}")
            yield number, row


def load_builtin(path) -> list[NominalEntry]:
    """Read ``noun<TAB>verb`` rows as confirmed builtin entries; duplicates collapse."""
    seen = {}
    for _, (noun, verb) in _read_tsv(path, 2, "noun<TAB>verb"):
        entry = NominalEntry(noun.lower(), verb.lower(), BUILTIN, CONFIRMED)
        seen.setdefault(entry.key, entry)
    return sorted(seen.values(), key=lambda e: e.key)


def derive_candidates(nouns: Iterable[str], verbs: Iterable[str],
                      rules=DEFAULT_ORTHO_RULES) -> list[NominalEntry]:
    """Pair each noun with every verb in ``verbs`` that some suffix rule maps it to."""
    verb_set = set(verbs)
    found = set()
    for noun in set(nouns):
        for rule in rules:
            stem = rule.stem(noun)
            if stem and stem in verb_set:
                found.add((noun, stem))
    return [NominalEntry(noun, verb, HEURISTIC, CANDIDATE) for noun, verb in sorted(found)]


class NominalLexicon:
    """Immutable set of nominal entries keyed by ``(noun, stem verb)``."""

    def __init__(self, entries: Iterable[NominalEntry] = (), view="confirmed"):
        if view not in VIEWS:
            raise ValueError(f"view must be one of {VIEWS}, got {view!r}")
        table = {}
        for entry in entries:
            prior = table.get(entry.key)
            if prior is None or (prior.source != BUILTIN and entry.source == BUILTIN):
                table[entry.key] = entry
        self._entries = tuple(sorted(table.values(), key=lambda e: e.key))
        self.view = view

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __eq__(self, other):
        return (isinstance(other, NominalLexicon) and self._entries == other._entries
                and self.view == other.view)

    def __repr__(self):
        return f"NominalLexicon({len(self)} entries, view={self.view!r})"

    def with_view(self, view):
        return NominalLexicon(self._entries, view)

    def visible(self, view=None):
        view = view or self.view
        allowed = {CONFIRMED} if view == "confirmed" else {CONFIRMED, CANDIDATE}
        return [e for e in self._entries if e.status in allowed]

    def nouns(self, view=None) -> frozenset:
        return frozenset(e.noun_lemma for e in self.visible(view))

    def lookup(self, noun, view=None) -> frozenset:
        return frozenset(e.stem_verb_lemma for e in self.visible(view) if e.noun_lemma == noun)

    def union(self, other):
        return NominalLexicon(list(self) + list(other), self.view)


def lookup(lexicon: NominalLexicon, noun_lemma, view=None) -> frozenset:
    return lexicon.lookup(noun_lemma, view)


def apply_filter(candidates: Iterable[NominalEntry], filter_file, view="confirmed") -> NominalLexicon:
    """Mark candidates accepted/rejected per a ``noun<TAB>verb<TAB>accept|reject`` file.

    Filter rows naming a pair that is not among the candidates only warn.
    """
    entries = {e.key: e for e in candidates}
    for number, (noun, verb, decision) in _read_tsv(filter_file, 3, "noun<TAB>verb<TAB>accept|reject"):
        decision = decision.lower()
        if decision not in ("accept", "reject"):
            raise InputFormatError(filter_file, number, f"unknown decision {decision!r}")
        key = (noun.lower(), verb.lower())
        if key not in entries:
            warnings.warn(f"{filter_file}:{number}: no candidate {key[0]}/{key[1]}", stacklevel=2)
            continue
        entries[key] = replace(entries[key], status=CONFIRMED if decision == "accept" else REJECTED)
    return NominalLexicon(entries.values(), view)


def build_lexicon(builtin=(), candidates=(), filter_file=None, view="confirmed") -> NominalLexicon:
    filtered = apply_filter(candidates, filter_file) if filter_file else NominalLexicon(candidates)
    return NominalLexicon(list(builtin) + list(filtered), view)


def write_lexicon(lexicon: NominalLexicon, fh):
    writer = csv.writer(fh, delimiter="\t", lineterminator="\n")
    for e in lexicon:
        writer.writerow([e.noun_lemma, e.stem_verb_lemma, e.source, e.status])


def read_lexicon(path, view="confirmed") -> NominalLexicon:
    entries = []
    for number, (noun, verb, source, status) in _read_tsv(path, 4, "noun<TAB>verb<TAB>source<TAB>status"):
        if source not in (BUILTIN, HEURISTIC) or status not in (CONFIRMED, CANDIDATE, REJECTED):
            raise InputFormatError(path, number, "unknown source or status")
        entries.append(NominalEntry(noun, verb, source, status))
    return NominalLexicon(entries, view)


def read_wordlist(path) -> set[str]:
    with open(path, encoding="utf-8") as fh:
        return {line.strip().lower() for line in fh if line.strip() and not line.startswith("#")}
