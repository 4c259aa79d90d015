"""Support-verb test set, strict/lenient scoring and report rendering."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .exceptions import InputFormatError
from .stats import choice_ratio


@dataclass(frozen=True)
class TestCase:
    __test__ = False  # not a pytest class

    source_phrase: str
    nominal: str
    stem_verb: str
    expected_sv: str
    alternatives: frozenset = field(default_factory=frozenset)
    excluded_no_data: bool = False
    reference_tag: str = ""

    def __post_init__(self):
        object.__setattr__(self, "alternatives", frozenset(self.alternatives))
        if self.expected_sv in self.alternatives:
            raise ValueError(f"{self.nominal}: expected verb also listed as alternative")

    def accepts(self, verb):
        return verb == self.expected_sv or verb in self.alternatives


def _case(phrase, nominal, stem, sv, ref, alternatives=(), excluded=False):
    return TestCase(phrase, nominal, stem, sv, frozenset(alternatives), excluded, ref)


DEFAULT_TESTSET = (
    _case("make an attempt", "attempt", "attempt", "make", "DD"),
    _case("make a change", "change", "change", "make", "DD"),
    _case("make a concession", "concession", "concede", "make", "DD"),
    _case("make a demand", "demand", "demand", "make", "GT"),
    _case("make a distinction", "distinction", "distinguish", "make", "DD"),
    _case("have a drink (of)", "drink", "drink", "have", "W", excluded=True),
    _case("have an effect (on)", "effect", "affect", "have", "DD"),
    _case("have a feeling", "feeling", "feel", "have", "Ha"),
    _case("make a gift (of)", "gift", "give", "make", "Ha"),
    _case("do harm (to)", "harm", "harm", "do", "Hu", alternatives={"cause"}),
    _case("make a judgment", "judgment", "judge", "make", "DD"),
    _case("have a knowledge (of)", "knowledge", "know", "have", "K"),
    _case("make progress", "progress", "progress", "make", "Ha"),
    _case("make a proposal", "proposal", "propose", "make", "GT"),
    _case("bear a resemblance (to)", "resemblance", "resemble", "bear", "Hu"),
    _case("give a shove (to)", "shove", "shove", "give", "Ha", excluded=True),
    _case("have a snooze", "snooze", "snooze", "have", "Ha", excluded=True),
    _case("make use (of)", "use", "use", "make", "DD"),
)

TESTSET_COLUMNS = 7


def _parse_case(row, path, number):
    if len(row) != TESTSET_COLUMNS:
        raise InputFormatError(path, number, f"expected {TESTSET_COLUMNS} tab-separated columns")
    phrase, nominal, stem, sv, alts, excluded, ref = (c.strip() for c in row)
    if excluded not in ("0", "1"):
        raise InputFormatError(path, number, f"excluded flag must be 0 or 1, got {excluded!r}")
    if not (phrase and nominal and stem and sv):
        raise InputFormatError(path, number, "empty required column")
    alternatives = frozenset() if alts in ("", "-") else frozenset(a.strip() for a in alts.split(","))
    try:
        return TestCase(phrase, nominal, stem, sv, alternatives, excluded == "1", ref)
    except ValueError as exc:
        raise InputFormatError(path, number, str(exc)) from None


def load_testset(path=None) -> list[TestCase]:
    """Read a test-set TSV, or return the built-in 18 cases when ``path`` is None."""
    if path is None:
        return list(DEFAULT_TESTSET)
    cases = []
    with open(path, encoding="utf-8", newline="") as fh:
        for number, row in enumerate(csv.reader(fh, delimiter="\t"), 1):
            if not row or row[0].startswith("#"):
                continue
            cases.append(_parse_case(row, path, number))
    return cases


def save_testset(cases, fh):
    w = csv.writer(fh, delimiter="\t", lineterminator="\n")
    for c in cases:
        alts = ",".join(sorted(c.alternatives)) or "-"
        w.writerow([c.source_phrase, c.nominal, c.stem_verb, c.expected_sv, alts,
                    int(c.excluded_no_data), c.reference_tag])


@dataclass(frozen=True)
class CaseResult:
    case: TestCase
    choice1: str | None
    choice2: str | None
    ratio: float | None
    strict_hit: bool
    lenient_hit: bool | None  # None when the case is excluded from lenient scoring


@dataclass(frozen=True)
class EvalReport:
    per_case: tuple
    strict_score: tuple
    lenient_score: tuple


def score(cases: Sequence[TestCase], predictions: Mapping[str, list]) -> EvalReport:
    """Strict: first choice equals the source phrase's verb, over all cases.
    Lenient: first choice is that verb or a listed alternative, over cases
    not excluded for lack of data.
    """
    results = []
    for case in cases:
        ranked = predictions.get(case.nominal) or []
        first = ranked[0].verb_lemma if ranked else None
        second = ranked[1].verb_lemma if len(ranked) > 1 else None
        strict = first is not None and first == case.expected_sv
        lenient = None if case.excluded_no_data else (first is not None and case.accepts(first))
        results.append(CaseResult(case, first, second, choice_ratio(ranked), strict, lenient))
    strict_score = (sum(r.strict_hit for r in results), len(results))
    scored = [r for r in results if r.lenient_hit is not None]
    lenient_score = (sum(r.lenient_hit for r in scored), len(scored))
    return EvalReport(tuple(results), strict_score, lenient_score)


COLUMNS = ("Source Text", "Verb", "Choice 1", "Choice 2", "Ratio")
NA = "N/A"


def _ratio_text(ratio):
    return NA if ratio is None else f"{ratio:.2f}"


def format_report(report: EvalReport, style="pretty") -> str:
    if style == "tsv":
        return _format_tsv(report)
    if style != "pretty":
        raise ValueError(f"unknown style {style!r}")
    rows = [COLUMNS] + [
        (r.case.source_phrase, r.case.stem_verb, r.choice1 or NA, r.choice2 or NA, _ratio_text(r.ratio))
        for r in report.per_case
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(len(COLUMNS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    lines.append("")
    lines.append("strict:  {}/{}".format(*report.strict_score))
    lines.append("lenient: {}/{}".format(*report.lenient_score))
    return "\n".join(lines) + "\n"


def _flag(value):
    return "-" if value is None else str(int(value))


def _format_tsv(report):
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(["source_text", "verb", "choice1", "choice2", "ratio", "strict_hit", "lenient_hit"])
    for r in report.per_case:
        w.writerow([r.case.source_phrase, r.case.stem_verb, r.choice1 or NA, r.choice2 or NA,
                    NA if r.ratio is None else repr(r.ratio), _flag(r.strict_hit), _flag(r.lenient_hit)])
    w.writerow(["#strict", "{}/{}".format(*report.strict_score)])
    w.writerow(["#lenient", "{}/{}".format(*report.lenient_score)])
    return buf.getvalue()
