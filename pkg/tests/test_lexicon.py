import io
import random

import pytest

from lightverb.exceptions import InputFormatError
from lightverb.lexicon import (DEFAULT_ORTHO_RULES, NominalEntry, NominalLexicon, apply_filter,
                               build_lexicon, derive_candidates, load_builtin, lookup,
                               read_lexicon, write_lexicon)

# 18 test-set nominals plus 7 further regular derivations.
REGULAR = {
    "attempt": "attempt", "change": "change", "demand": "demand", "drink": "drink",
    "feeling": "feel", "harm": "harm", "judgment": "judge", "progress": "progress",
    "proposal": "propose", "resemblance": "resemble", "shove": "shove", "snooze": "snooze",
    "use": "use",
    "adjustment": "adjust", "creation": "create", "refusal": "refuse", "acceptance": "accept",
    "closure": "close", "breakage": "break", "preference": "prefer",
}
IRREGULAR = {
    "concession": "concede", "distinction": "distinguish", "gift": "give",
    "knowledge": "know", "effect": "affect",
}
FIXTURE = {**REGULAR, **IRREGULAR}
DISTRACTOR_VERBS = {"depart", "make", "have", "take", "bear", "do", "cause"}


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_fixture_size():
    assert len(FIXTURE) == 25


def test_rules_longest_suffix_first():
    lengths = [len(r.noun_suffix) for r in DEFAULT_ORTHO_RULES]
    assert lengths == sorted(lengths, reverse=True)


@pytest.mark.parametrize("noun, verb", [
    ("proposal", "propose"), ("resemblance", "resemble"), ("attempt", "attempt"),
    ("department", "depart"), ("judgment", "judge"), ("feeling", "feel"),
])
def test_derive_single(noun, verb):
    got = derive_candidates({noun, "table"}, {verb, "sit"})
    assert NominalEntry(noun, verb, "heuristic", "candidate") in got


def test_heuristic_recovers_regulars_only():
    verbs = set(FIXTURE.values()) | DISTRACTOR_VERBS
    found = {(e.noun_lemma, e.stem_verb_lemma) for e in derive_candidates(FIXTURE, verbs)}
    assert set(REGULAR.items()) <= found
    assert not set(IRREGULAR.items()) & found
    assert all(v in verbs for _, v in found)


def test_builtin_plus_heuristic_covers_fixture(tmp_path):
    builtin = load_builtin(write(tmp_path, "b.tsv", "".join(f"{n}\t{v}\n" for n, v in IRREGULAR.items())))
    candidates = derive_candidates(FIXTURE, set(FIXTURE.values()))
    lex = NominalLexicon(builtin + candidates, view="all")
    for noun, verb in FIXTURE.items():
        assert verb in lookup(lex, noun)


def test_derive_is_order_independent():
    nouns = list(FIXTURE) + ["department", "table"]
    verbs = list(FIXTURE.values()) + sorted(DISTRACTOR_VERBS)
    base = derive_candidates(nouns, verbs)
    rng = random.Random(1)
    for _ in range(10):
        rng.shuffle(nouns)
        rng.shuffle(verbs)
        assert derive_candidates(nouns, verbs) == base
    assert base == sorted(base, key=lambda e: (e.noun_lemma, e.stem_verb_lemma))


def test_noun_with_several_stems():
    got = derive_candidates({"creation"}, {"create", "creat"})
    assert {e.stem_verb_lemma for e in got} == {"create", "creat"}


def test_load_builtin(tmp_path):
    entries = load_builtin(write(tmp_path, "b.tsv", "adjustment\tadjust\nadjustment\tadjust\n"))
    assert entries == [NominalEntry("adjustment", "adjust", "builtin", "confirmed")]
    assert load_builtin(write(tmp_path, "e.tsv", "")) == []
    with pytest.raises(InputFormatError) as info:
        load_builtin(write(tmp_path, "bad.tsv", "adjustment\tadjust\nbroken\n"))
    assert info.value.line_number == 2
    with pytest.raises(FileNotFoundError):
        load_builtin(tmp_path / "missing.tsv")


def test_apply_filter(tmp_path):
    candidates = derive_candidates({"department", "proposal", "feeling"}, {"depart", "propose", "feel"})
    filt = write(tmp_path, "f.tsv", "department\tdepart\treject\nproposal\tpropose\taccept\n")
    lex = apply_filter(candidates, filt)
    status = {e.noun_lemma: e.status for e in lex}
    assert status == {"department": "rejected", "proposal": "confirmed", "feeling": "candidate"}
    assert {(e.noun_lemma, e.stem_verb_lemma) for e in lex} == {(e.noun_lemma, e.stem_verb_lemma) for e in candidates}
    assert lex.nouns() == {"proposal"}
    assert lex.nouns("all") == {"proposal", "feeling"}
    assert lookup(lex, "department", "all") == frozenset()


def test_filter_unknown_pair_warns(tmp_path):
    filt = write(tmp_path, "f.tsv", "zzz\tzz\taccept\n")
    with pytest.warns(UserWarning, match="no candidate"):
        lex = apply_filter([], filt)
    assert len(lex) == 0
    with pytest.raises(InputFormatError):
        apply_filter([], write(tmp_path, "g.tsv", "a\tb\tmaybe\n"))


def test_lookup_views():
    lex = NominalLexicon([
        NominalEntry("adjustment", "adjust", "builtin", "confirmed"),
        NominalEntry("change", "change", "heuristic", "candidate"),
        NominalEntry("use", "use", "heuristic", "confirmed"),
        NominalEntry("use", "utilize", "builtin", "confirmed"),
    ])
    assert lookup(lex, "adjustment") == {"adjust"}
    assert lookup(lex, "zzz") == frozenset()
    assert lookup(lex.with_view("all"), "zzz") == frozenset()
    assert lookup(lex, "use") == {"use", "utilize"}
    assert lookup(lex, "change") == frozenset()
    assert lookup(lex, "change", "all") == {"change"}
    with pytest.raises(ValueError):
        NominalLexicon(view="everything")


def test_builtin_wins_over_heuristic_duplicate():
    lex = NominalLexicon([NominalEntry("use", "use", "heuristic", "candidate"),
                          NominalEntry("use", "use", "builtin", "confirmed")])
    assert [e.source for e in lex] == ["builtin"]


def test_build_and_dump_round_trip(tmp_path, builtin_path):
    candidates = derive_candidates({"department", "proposal"}, {"depart", "propose"})
    filt = write(tmp_path, "f.tsv", "department\tdepart\treject\n")
    lex = build_lexicon(load_builtin(builtin_path), candidates, filt)
    buf = io.StringIO()
    write_lexicon(lex, buf)
    lines = buf.getvalue().splitlines()
    assert lines == sorted(lines)
    assert "department\tdepart\theuristic\trejected" in lines
    assert read_lexicon(write(tmp_path, "lex.tsv", buf.getvalue())) == lex
