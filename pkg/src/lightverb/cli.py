"""Command-line driver.

Exit codes: 0 success, 1 usage, 2 unreadable or malformed input,
3 inconsistent configuration.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .corpus_io import DEFAULT_RULES, lexical_density, load_lemma_overrides, read_corpus
from .evaluate import format_report, load_testset, score
from .exceptions import ConfigurationError, InputFormatError, MalformedTokenError, UndefinedDensityError
from .extract import ExtractionConfig, read_pairs, scan_corpus, write_pairs
from .lexicon import read_lexicon, write_lexicon
from .pipeline import RunConfig, load_configured_lexicon, run_pipeline
from .stats import (GLOBAL_MODES, SupportVerbRanker, read_global_table, read_local_table,
                    write_global_table, write_local_table, write_ranked)

EXIT_USAGE, EXIT_INPUT, EXIT_CONFIG = 1, 2, 3

log = logging.getLogger("lightverb")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p):
    p.add_argument("--corpus", help="tagged corpus, one sentence per line")
    p.add_argument("--lexicon", help="lexicon dump (noun, verb, source, status)")
    p.add_argument("--builtin", help="builtin nominalizations (noun<TAB>verb)")
    p.add_argument("--filter", help="manual filter (noun<TAB>verb<TAB>accept|reject)")
    p.add_argument("--nouns", help="noun word list for the orthographic heuristic")
    p.add_argument("--verbs", help="verb word list for the orthographic heuristic")
    p.add_argument("--view", choices=("confirmed", "all"), default="confirmed")
    p.add_argument("--testset", help="test-set TSV (default: built-in 18 cases)")
    p.add_argument("--lemmas", help="lemma override TSV (surface<TAB>verb|noun<TAB>lemma)")
    p.add_argument("--global-mode", choices=GLOBAL_MODES, default="aggregate")
    p.add_argument("--min-count", type=int, default=1)
    p.add_argument("--max-intervening", type=int, default=5)
    p.add_argument("--keep-passive", action="store_true", help="do not skip passive participles")
    p.add_argument("--require-nominal", action="store_true",
                   help="keep only pairs whose object is in the lexicon")
    p.add_argument("--exclude-stem-verb", action="store_true")
    p.add_argument("--skip-malformed", action="store_true")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--format", choices=("tsv", "pretty"), default="pretty")
    p.add_argument("--out", help="output directory (default: stdout)")


def build_parser():
    parser = _Parser(prog="lightverb", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in [
        ("extract", "corpus -> verb/object pair dump"),
        ("lexicon", "word lists + builtin + filter -> lexicon dump"),
        ("tables", "pairs [+ lexicon] -> local/global tables"),
        ("rank", "tables + nominal -> ranked candidates"),
        ("eval", "corpus or tables + test set -> report"),
        ("density", "corpus -> lexical density"),
        ("run", "full pipeline, writing every artifact to --out"),
    ]:
        p = sub.add_parser(name, help=help_)
        _common(p)
        if name == "tables":
            p.add_argument("--pairs", help="pair dump from `extract`")
        if name in ("rank", "eval"):
            p.add_argument("--local", help="local table dump")
            p.add_argument("--global", dest="global_table", help="global table dump")
        if name == "rank":
            p.add_argument("--nominal", action="append", required=True,
                           help="nominal to rank (repeatable)")
    return parser


def _run_config(args):
    return RunConfig(
        corpus=args.corpus, out_dir=args.out, builtin=args.builtin, filter=args.filter,
        nouns=args.nouns, verbs=args.verbs, lexicon=args.lexicon, view=args.view,
        testset=args.testset, lemma_overrides=args.lemmas, global_mode=args.global_mode,
        min_count=args.min_count, max_intervening=args.max_intervening,
        exclude_passive=not args.keep_passive, require_nominal_filter=args.require_nominal,
        exclude_stem_verb=args.exclude_stem_verb, skip_malformed=args.skip_malformed,
        n_jobs=args.jobs,
    )


def _emit(args, name, writer, *payload):
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / name, "w", encoding="utf-8", newline="") as fh:
            writer(*payload, fh)
    else:
        writer(*payload, sys.stdout)


def _sentences(args):
    if not args.corpus:
        raise ConfigurationError("--corpus is required")
    rules = load_lemma_overrides(args.lemmas) if args.lemmas else DEFAULT_RULES
    bad = []
    sentences = read_corpus(args.corpus, rules=rules, skip_malformed=args.skip_malformed, malformed=bad)
    if bad:
        log.warning("skipped %d malformed tokens", len(bad))
    return sentences


def _ranker(args, nominals=None):
    lexicon = load_configured_lexicon(_run_config(args))
    params = dict(global_mode=args.global_mode, min_count=args.min_count,
                  exclude_stem_verb=args.exclude_stem_verb, lexicon=lexicon)
    if args.local:
        glob = read_global_table(args.global_table) if args.global_table else None
        return SupportVerbRanker.from_tables(read_local_table(args.local), glob, nominals=nominals, **params)
    if getattr(args, "pairs", None):
        pairs = read_pairs(args.pairs)
    else:
        pairs = scan_corpus(_sentences(args), ExtractionConfig(args.max_intervening, not args.keep_passive),
                            n_jobs=args.jobs)
    return SupportVerbRanker(nominals=nominals, **params).fit(pairs)


def cmd_extract(args):
    config = ExtractionConfig(args.max_intervening, not args.keep_passive, args.require_nominal)
    lexicon = load_configured_lexicon(_run_config(args))
    pairs = scan_corpus(_sentences(args), config, lexicon, n_jobs=args.jobs)
    _emit(args, "pairs.tsv", write_pairs, pairs)


def cmd_lexicon(args):
    lexicon = load_configured_lexicon(_run_config(args))
    if lexicon is None:
        raise ConfigurationError("give --lexicon, --builtin, or --nouns with --verbs")
    _emit(args, "lexicon.tsv", write_lexicon, lexicon)


def cmd_tables(args):
    if not args.pairs:
        raise ConfigurationError("--pairs is required")
    lexicon = read_lexicon(args.lexicon, args.view) if args.lexicon else None
    nominals = sorted(lexicon.nouns()) if lexicon is not None else None
    ranker = SupportVerbRanker(nominals=nominals, global_mode=args.global_mode,
                               min_count=args.min_count).fit(read_pairs(args.pairs))
    if args.out:
        _emit(args, "local.tsv", write_local_table, ranker.local_table_)
        _emit(args, "global.tsv", write_global_table, ranker.global_table_)
    else:
        write_local_table(ranker.local_table_, sys.stdout)
        sys.stdout.write("\n")
        write_global_table(ranker.global_table_, sys.stdout)


def cmd_rank(args):
    args.pairs = None
    ranker = _ranker(args)
    ranked = {n: ranker.rank(n) for n in args.nominal}
    for n, r in ranked.items():
        if not r:
            log.warning("%s: no candidates (N/A)", n)
    _emit(args, "ranked.tsv", write_ranked, ranked)


def cmd_eval(args):
    if args.local:
        args.pairs = None
        cases = load_testset(args.testset)
        ranker = _ranker(args)
        report = score(cases, {c.nominal: ranker.rank(c.nominal, {c.stem_verb}) for c in cases})
        text = format_report(report, args.format)
        _emit(args, "report." + ("tsv" if args.format == "tsv" else "txt"), lambda fh: fh.write(text))
        return
    if not args.corpus:
        raise ConfigurationError("give --corpus or --local")
    result = run_pipeline(_run_config(args))
    sys.stdout.write(format_report(result.report, args.format))


def cmd_density(args):
    print(f"{lexical_density(_sentences(args)):.6f}")


def cmd_run(args):
    if not args.corpus:
        raise ConfigurationError("--corpus is required")
    if not args.out:
        raise ConfigurationError("--out is required for `run`")
    result = run_pipeline(_run_config(args))
    sys.stdout.write(format_report(result.report, args.format))


COMMANDS = {
    "extract": cmd_extract, "lexicon": cmd_lexicon, "tables": cmd_tables, "rank": cmd_rank,
    "eval": cmd_eval, "density": cmd_density, "run": cmd_run,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        if args.min_count < 1 or args.max_intervening < 0:
            raise ConfigurationError("--min-count must be >= 1 and --max-intervening >= 0")
        COMMANDS[args.command](args)
    except (OSError, MalformedTokenError, InputFormatError, UnicodeDecodeError,
            UndefinedDensityError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except ConfigurationError as exc:
        log.error("%s", exc)
        return EXIT_CONFIG
    return 0


if __name__ == "__main__":
    sys.exit(main())
