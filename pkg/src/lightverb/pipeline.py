"""End-to-end run: parse, extract, build lexicon, count, rank, score."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .corpus_io import DEFAULT_RULES, load_lemma_overrides, read_corpus
from .evaluate import format_report, load_testset, score
from .extract import ExtractionConfig, scan_corpus, write_pairs
from .lexicon import (build_lexicon, derive_candidates, load_builtin, read_lexicon,
                      read_wordlist, write_lexicon)
from .stats import SupportVerbRanker, write_global_table, write_local_table, write_ranked


def bundled_path(name):
    """Path of a file shipped in ``lightverb/data`` (e.g. ``minicorpus.txt``)."""
    return Path(str(resources.files("lightverb") / "data" / name))


@dataclass
class RunConfig:
    corpus: str | os.PathLike
    out_dir: str | os.PathLike | None = None
    builtin: str | None = None
    filter: str | None = None
    nouns: str | None = None
    verbs: str | None = None
    lexicon: str | None = None
    view: str = "confirmed"
    testset: str | None = None
    lemma_overrides: str | None = None
    global_mode: str = "aggregate"
    min_count: int = 1
    max_intervening: int = 5
    exclude_passive: bool = True
    require_nominal_filter: bool = False
    exclude_stem_verb: bool = False
    skip_malformed: bool = False
    n_jobs: int | None = None
    chunk_size: int = 2000


@dataclass
class RunResult:
    pairs: list
    lexicon: object
    ranker: SupportVerbRanker
    ranked: dict
    report: object
    n_malformed: int = 0
    written: list = field(default_factory=list)


def load_configured_lexicon(config: RunConfig):
    """Lexicon from a dump, or from builtin/word lists/filter; ``None`` if none given."""
    if config.lexicon:
        return read_lexicon(config.lexicon, config.view)
    if not (config.builtin or config.nouns or config.verbs):
        return None
    builtin = load_builtin(config.builtin) if config.builtin else []
    candidates = []
    if config.nouns and config.verbs:
        candidates = derive_candidates(read_wordlist(config.nouns), read_wordlist(config.verbs))
    return build_lexicon(builtin, candidates, config.filter, config.view)


def run_pipeline(config: RunConfig) -> RunResult:
    rules = DEFAULT_RULES
    if config.lemma_overrides:
        rules = load_lemma_overrides(config.lemma_overrides, rules)
    malformed = []
    sentences = read_corpus(config.corpus, rules=rules, skip_malformed=config.skip_malformed,
                            malformed=malformed)
    lexicon = load_configured_lexicon(config)
    cases = load_testset(config.testset)

    extraction = ExtractionConfig(config.max_intervening, config.exclude_passive,
                                  config.require_nominal_filter)
    pairs = scan_corpus(sentences, extraction, lexicon, n_jobs=config.n_jobs,
                        chunk_size=config.chunk_size)

    nominals = None
    if lexicon is not None:
        nominals = sorted(lexicon.nouns() | {c.nominal for c in cases})
    ranker = SupportVerbRanker(nominals=nominals, global_mode=config.global_mode,
                               min_count=config.min_count,
                               exclude_stem_verb=config.exclude_stem_verb, lexicon=lexicon)
    ranker.fit(pairs)
    ranked = {n: ranker.rank(n) for n in sorted(ranker.local_table_.counts)}
    predictions = {c.nominal: ranker.rank(c.nominal, {c.stem_verb}) for c in cases}
    report = score(cases, predictions)

    result = RunResult(pairs, lexicon, ranker, ranked, report, len(malformed))
    if config.out_dir is not None:
        result.written = write_outputs(result, Path(config.out_dir))
    return result


def write_outputs(result: RunResult, out: Path):
    out.mkdir(parents=True, exist_ok=True)
    written = []

    def emit(name, writer, *args):
        path = out / name
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer(*args, fh)
        written.append(path)

    emit("pairs.tsv", write_pairs, result.pairs)
    if result.lexicon is not None:
        emit("lexicon.tsv", write_lexicon, result.lexicon)
    emit("local.tsv", write_local_table, result.ranker.local_table_)
    emit("global.tsv", write_global_table, result.ranker.global_table_)
    emit("ranked.tsv", write_ranked, result.ranked)
    emit("report.tsv", lambda fh: fh.write(format_report(result.report, "tsv")))
    emit("report.txt", lambda fh: fh.write(format_report(result.report, "pretty")))
    return written
