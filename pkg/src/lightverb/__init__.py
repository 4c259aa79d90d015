"""Support-verb identification for deverbal nominalizations.

Verbs taking a nominal as direct object are counted per nominal (local
information) and over all nominals (global information); candidates are
ranked by the product of the two relative frequencies.
"""

from .corpus_io import (PENN_TAGS, LemmaRules, Sentence, TagClasses, TaggedLineParser, TaggedToken,
                        lemmatize_noun, lemmatize_verb, lexical_density, parse_tagged_line,
                        read_corpus)
from .evaluate import DEFAULT_TESTSET, EvalReport, TestCase, format_report, load_testset, score
from .exceptions import (ConfigurationError, InputFormatError, LightVerbError, MalformedTokenError,
                         UndefinedDensityError)
from .extract import ExtractionConfig, PairExtractor, VerbObjectPair, extract_pairs, scan_corpus
from .lexicon import (NominalEntry, NominalLexicon, OrthoRule, apply_filter, derive_candidates,
                      load_builtin, lookup)
from .pipeline import RunConfig, bundled_path, run_pipeline
from .stats import (Candidate, GlobalTable, LocalTable, SupportVerbRanker, aggregate_global,
                    build_local_table, choice_ratio, merge_tables, rank_candidates)

__version__ = "0.1.0"

__all__ = [
    "Candidate", "ConfigurationError", "DEFAULT_TESTSET", "EvalReport", "ExtractionConfig",
    "GlobalTable", "InputFormatError", "LemmaRules", "LightVerbError", "LocalTable",
    "MalformedTokenError", "NominalEntry", "NominalLexicon", "OrthoRule", "PENN_TAGS",
    "PairExtractor", "RunConfig", "Sentence", "SupportVerbRanker", "TagClasses", "TaggedLineParser",
    "TaggedToken", "TestCase", "UndefinedDensityError", "VerbObjectPair", "aggregate_global",
    "apply_filter", "build_local_table", "bundled_path", "choice_ratio", "derive_candidates", "extract_pairs",
    "format_report", "lemmatize_noun", "lemmatize_verb", "lexical_density", "load_builtin",
    "load_testset", "lookup", "merge_tables", "parse_tagged_line", "rank_candidates",
    "read_corpus", "run_pipeline", "scan_corpus", "score",
]
