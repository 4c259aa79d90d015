"""Local and global verb frequency tables and support-verb ranking.

Local information counts, for one nominal, the verbs taking it as direct
object. Global information counts each verb over all retained pairs. A
candidate verb's score is the product of its local and global relative
frequency.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_lemmas, check_min_count, check_pairs
from .exceptions import ConfigurationError, InputFormatError

GLOBAL_MODES = ("aggregate", "all-objects")


class LocalTable:
    """nominal -> verb -> pair count. Zero cells are never stored."""

    def __init__(self, counts: Mapping[str, Mapping[str, int]] | None = None):
        self.counts = {}
        for nominal, verbs in (counts or {}).items():
            row = {v: int(c) for v, c in verbs.items() if c}
            if any(c < 0 for c in row.values()):
                raise ValueError("negative count")
            if row:
                self.counts[nominal] = row

    @property
    def per_nominal_total(self):
        return {n: sum(row.values()) for n, row in self.counts.items()}

    def total(self, nominal):
        return sum(self.counts.get(nominal, {}).values())

    def __contains__(self, nominal):
        return nominal in self.counts

    def __len__(self):
        return len(self.counts)

    def __eq__(self, other):
        return isinstance(other, LocalTable) and self.counts == other.counts

    def __repr__(self):
        return f"LocalTable({self.counts!r})"


class GlobalTable:
    """verb -> count, with the grand total over all verbs."""

    def __init__(self, counts: Mapping[str, int] | None = None):
        self.counts = {v: int(c) for v, c in (counts or {}).items() if c}

    @property
    def grand_total(self):
        return sum(self.counts.values())

    def __eq__(self, other):
        return isinstance(other, GlobalTable) and self.counts == other.counts

    def __repr__(self):
        return f"GlobalTable({self.counts!r})"


@dataclass(frozen=True)
class Candidate:
    verb_lemma: str
    local_count: int
    local_rf: float
    global_rf: float
    adjusted: float
    rank: int


def build_local_table(pairs: Iterable, nominal_filter=None, min_count=1) -> LocalTable:
    """Count (object, verb) pairs, optionally restricted to ``nominal_filter``.

    An empty or ``None`` filter keeps every pair. Cells below ``min_count``
    are dropped.
    """
    keep = set(nominal_filter) if nominal_filter else None
    counts = {}
    for p in pairs:
        if keep is not None and p.object_lemma not in keep:
            continue
        row = counts.setdefault(p.object_lemma, Counter())
        row[p.verb_lemma] += 1
    return threshold(LocalTable(counts), min_count)


def threshold(local: LocalTable, min_count=1) -> LocalTable:
    if min_count <= 1:
        return local
    return LocalTable({n: {v: c for v, c in row.items() if c >= min_count}
                       for n, row in local.counts.items()})


def restrict(local: LocalTable, nominals) -> LocalTable:
    if not nominals:
        return local
    keep = set(nominals)
    return LocalTable({n: row for n, row in local.counts.items() if n in keep})


def aggregate_global(local: LocalTable) -> GlobalTable:
    """Sum each verb's counts over every nominal."""
    totals = Counter()
    for row in local.counts.values():
        totals.update(row)
    return GlobalTable(totals)


def merge_tables(a: LocalTable, b: LocalTable) -> LocalTable:
    merged = {n: Counter(row) for n, row in a.counts.items()}
    for n, row in b.counts.items():
        merged.setdefault(n, Counter()).update(row)
    return LocalTable(merged)


def rank_candidates(local: LocalTable, global_table: GlobalTable, nominal,
                    exclude=()) -> list[Candidate]:
    """Rank the verbs seen with ``nominal`` by local_rf * global_rf.

    Ties fall back to the higher local count, then alphabetical order.
    A nominal with no pairs yields an empty list.
    """
    row = {v: c for v, c in local.counts.get(nominal, {}).items() if v not in exclude}
    if not row:
        return []
    local_total = sum(row.values()) if exclude else local.total(nominal)
    grand_total = global_table.grand_total
    scored = []
    for verb, count in row.items():
        local_rf = count / local_total
        global_rf = global_table.counts.get(verb, 0) / grand_total if grand_total else 0.0
        scored.append((local_rf * global_rf, count, verb, local_rf, global_rf))
    scored.sort(key=lambda t: (-t[0], -t[1], t[2]))
    return [Candidate(verb, count, local_rf, global_rf, adjusted, rank)
            for rank, (adjusted, count, verb, local_rf, global_rf) in enumerate(scored, 1)]


def choice_ratio(ranked) -> float | None:
    """Adjusted score of the first choice over the second; ``None`` means N/A."""
    if len(ranked) < 2 or ranked[1].adjusted == 0:
        return None
    return ranked[0].adjusted / ranked[1].adjusted


# -- TSV dumps ------------------------------------------------------------

def _writer(fh):
    return csv.writer(fh, delimiter="\t", lineterminator="\n")


def write_local_table(local: LocalTable, fh):
    rows = [(n, v, c) for n, row in local.counts.items() for v, c in row.items()]
    rows.sort(key=lambda r: (r[0], -r[2], r[1]))
    _writer(fh).writerows(rows)


def write_global_table(table: GlobalTable, fh):
    _writer(fh).writerows(sorted(table.counts.items(), key=lambda r: (-r[1], r[0])))


def write_ranked(ranked_by_nominal: Mapping[str, list], fh):
    w = _writer(fh)
    for nominal in sorted(ranked_by_nominal):
        for c in ranked_by_nominal[nominal]:
            w.writerow([nominal, c.rank, c.verb_lemma, c.local_count,
                        repr(c.local_rf), repr(c.global_rf), repr(c.adjusted)])


def _rows(path, width):
    with open(path, encoding="utf-8", newline="") as fh:
        for number, row in enumerate(csv.reader(fh, delimiter="\t"), 1):
            if not row:
                continue
            if len(row) != width:
                raise InputFormatError(path, number, f"expected {width} columns")
            yield number, row


def read_local_table(path) -> LocalTable:
    counts = {}
    for number, (n, v, c) in _rows(path, 3):
        try:
            counts.setdefault(n, Counter())[v] += int(c)
        except ValueError:
            raise InputFormatError(path, number, f"bad count {c!r}") from None
    return LocalTable(counts)


def read_global_table(path) -> GlobalTable:
    counts = Counter()
    for number, (v, c) in _rows(path, 2):
        try:
            counts[v] += int(c)
        except ValueError:
            raise InputFormatError(path, number, f"bad count {c!r}") from None
    return GlobalTable(counts)


# -- estimator ------------------------------------------------------------

class SupportVerbRanker(BaseEstimator):
    """Rank support-verb candidates for nominals from verb-object pairs.

    ``fit`` counts pairs into ``local_table_`` and ``global_table_``;
    ``predict`` returns the top verb per nominal (``None`` when the nominal
    was never seen as a direct object).

    Parameters
    ----------
    nominals : iterable of str, optional
        Nominals whose pairs enter the local table. ``None`` keeps all.
    global_mode : {"aggregate", "all-objects"}
        ``aggregate`` sums the local table; ``all-objects`` counts verbs over
        every pair regardless of ``nominals``.
    min_count : int
        Drop (nominal, verb) cells seen fewer times.
    exclude_stem_verb : bool
        Skip a nominal's own stem verb(s) as candidates.
    lexicon : NominalLexicon, optional
        Source of stem verbs for ``exclude_stem_verb``.
    """

    def __init__(self, nominals=None, global_mode="aggregate", min_count=1,
                 exclude_stem_verb=False, lexicon=None):
        self.nominals = nominals
        self.global_mode = global_mode
        self.min_count = min_count
        self.exclude_stem_verb = exclude_stem_verb
        self.lexicon = lexicon

    def _validate_params(self):
        if self.global_mode not in GLOBAL_MODES:
            raise ConfigurationError(f"global_mode must be one of {GLOBAL_MODES}")
        check_min_count(self.min_count)

    def fit(self, X, y=None):
        self._validate_params()
        self.pair_counts_ = build_local_table(check_pairs(X))
        self._refresh()
        return self

    def partial_fit(self, X, y=None):
        if not hasattr(self, "pair_counts_"):
            return self.fit(X)
        self.pair_counts_ = merge_tables(self.pair_counts_, build_local_table(check_pairs(X)))
        self._refresh()
        return self

    def _refresh(self):
        self.local_table_ = threshold(restrict(self.pair_counts_, self.nominals), self.min_count)
        if self.global_mode == "aggregate":
            self.global_table_ = aggregate_global(self.local_table_)
        else:
            self.global_table_ = aggregate_global(threshold(self.pair_counts_, self.min_count))

    @classmethod
    def from_tables(cls, local: LocalTable, global_table: GlobalTable | None = None, **params):
        """Build a fitted ranker from precomputed tables."""
        ranker = cls(**params)
        ranker._validate_params()
        ranker.pair_counts_ = local
        ranker.local_table_ = threshold(restrict(local, ranker.nominals), ranker.min_count)
        ranker.global_table_ = global_table if global_table is not None else aggregate_global(ranker.local_table_)
        return ranker

    def _excluded(self, nominal, stem_verbs=()):
        if not self.exclude_stem_verb:
            return frozenset()
        out = set(stem_verbs)
        if self.lexicon is not None:
            out |= self.lexicon.lookup(nominal, "all")
        return frozenset(out)

    def rank(self, nominal, stem_verbs=()):
        check_is_fitted(self, "local_table_")
        return rank_candidates(self.local_table_, self.global_table_, nominal,
                               self._excluded(nominal, stem_verbs))

    def rank_all(self, nominals=None):
        check_is_fitted(self, "local_table_")
        names = sorted(self.local_table_.counts) if nominals is None else check_lemmas(nominals)
        return {n: self.rank(n) for n in names}

    def choice_ratio(self, nominal):
        return choice_ratio(self.rank(nominal))

    def predict(self, X):
        ranked = (self.rank(n) for n in check_lemmas(X))
        return [r[0].verb_lemma if r else None for r in ranked]

    def score(self, X, y):
        """Fraction of nominals whose top-ranked verb equals ``y``."""
        predicted = self.predict(X)
        expected = list(y)
        if len(expected) != len(predicted):
            raise ValueError("X and y differ in length")
        if not expected:
            return 0.0
        return sum(p == e for p, e in zip(predicted, expected)) / len(expected)
