"""
Command-line entry point.

    grammar-rules extract --config run.json [--task word-order --key adjective-noun ...]
    grammar-rules cross-eval --config cross.json
    grammar-rules ablation --config run.json
    grammar-rules synth --n 2000 --seed 7 --out planted.conllu

Exit codes: 0 on success, 2 for configuration errors, 3 when a stage has no data to
work on, 1 for anything else.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .config import CrossEvalConfig, ExtractConfig, load_config
from .exceptions import ConfigError, ConfigurationError, EmptyDataError
from .pipeline import (
    ABLATION_FILE,
    CROSS_EVAL_FILE,
    run_ablation,
    run_cross_eval,
    run_extraction,
    write_artifacts,
    write_document,
)
from .treebank import PlantedRule, generate_synthetic, serialize_conllu

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_CONFIG = 2
EXIT_EMPTY = 3


def _absolute(value: Optional[str]) -> Optional[str]:
    # Flag paths are relative to the working directory, not to the config file.
    return str(Path(value).resolve()) if value is not None else None


def _overrides(args: argparse.Namespace) -> dict:
    return {
        "task": args.task,
        "key": args.key,
        "features": args.features,
        "lexicon": _absolute(args.lexicon),
        "alpha": args.alpha,
        "tau": args.tau,
        "seed": args.seed,
        "out": _absolute(args.out),
        "formats": args.format,
    }


def cmd_extract(args: argparse.Namespace) -> int:
    config = load_config(args.config, _overrides(args), ExtractConfig)
    result = run_extraction(config)
    written = write_artifacts(result, config.out, config.formats)

    evaluation = result.evaluation
    significant = sum(1 for rule in result.rules if rule.significant)
    print(
        f"{evaluation.task}/{evaluation.task_key}: "
        f"accuracy {evaluation.model_accuracy:.4f} "
        f"(baseline {evaluation.baseline_accuracy:.4f}), "
        f"{significant} significant rule(s) of {len(result.rules)}"
    )
    for path in written:
        print("Saved:", path)
    return EXIT_OK


def cmd_cross_eval(args: argparse.Namespace) -> int:
    config = load_config(args.config, _overrides(args), CrossEvalConfig)
    document = run_cross_eval(config)
    path = write_document(document, Path(config.out) / CROSS_EVAL_FILE)
    print("Saved:", path)
    return EXIT_OK


def cmd_ablation(args: argparse.Namespace) -> int:
    config = load_config(args.config, _overrides(args), ExtractConfig)
    document = run_ablation(config)
    for row in document["rows"]:
        print(f"  {row['features']:<12} {row['accuracy']:.4f}")
    path = write_document(document, Path(config.out) / ABLATION_FILE)
    print("Saved:", path)
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    attribute, _, value = args.attribute.partition("=")
    if not attribute or not value:
        raise ConfigError(
            [f"--attribute must look like Attr=Value, got {args.attribute!r}"]
        )
    rule = PlantedRule(
        relation=args.relation,
        dependent_upos=args.dependent_upos,
        head_upos=args.head_upos,
        deprel=args.deprel,
        attribute=attribute,
        value=value,
        order_if_marked=args.if_marked,
        order_otherwise=args.otherwise,
        marked_share=args.marked_share,
    )
    if not 0.0 <= rule.marked_share <= 1.0:
        raise ConfigError([f"--marked-share must be in [0, 1], got {rule.marked_share}"])

    corpus = generate_synthetic(rule, args.n, args.seed)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(serialize_conllu(corpus), encoding="utf-8")
    logger.info("Planted rule: %s", rule.description)
    print(f"Saved {len(corpus.sentences)} sentences to:", out)
    return EXIT_OK


def _add_run_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config", "-c", required=True, help="Path to the JSON run config"
    )
    parser.add_argument(
        "--task", choices=["word-order", "case", "agreement"], help="Override 'task'"
    )
    parser.add_argument(
        "--key", help="Relation name, POS tag or agreement attribute (overrides 'key')"
    )
    parser.add_argument("--features", help="Comma list of feature families: syn,lex,sem")
    parser.add_argument("--lexicon", help="Path to a sparse lexicon file")
    parser.add_argument("--alpha", type=float, help="Significance threshold for leaves")
    parser.add_argument("--tau", type=float, help="Agreement threshold for ARM")
    parser.add_argument("--seed", type=int, help="Random seed")
    parser.add_argument("--out", "-o", help="Output directory")
    parser.add_argument(
        "--format", help="Comma list of report formats: json,md,html,xlsx,pptx or all"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grammar-rules",
        description="Extract readable grammar rules from dependency treebanks.",
    )
    parser.add_argument(
        "--verbose", "-v", action="count", default=0, help="-v for info, -vv for debug"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    extract = commands.add_parser("extract", help="Train a model and write rule reports")
    _add_run_arguments(extract)
    extract.set_defaults(handler=cmd_extract)

    cross = commands.add_parser(
        "cross-eval", help="Apply each treebank's model to every treebank's test split"
    )
    _add_run_arguments(cross)
    cross.set_defaults(handler=cmd_cross_eval)

    ablation = commands.add_parser("ablation", help="Compare feature families")
    _add_run_arguments(ablation)
    ablation.set_defaults(handler=cmd_ablation)

    synth = commands.add_parser("synth", help="Write a corpus with a planted order rule")
    defaults = PlantedRule()
    synth.add_argument("--relation", default=defaults.relation)
    synth.add_argument("--dependent-upos", default=defaults.dependent_upos)
    synth.add_argument("--head-upos", default=defaults.head_upos)
    synth.add_argument("--deprel", default=defaults.deprel)
    synth.add_argument(
        "--attribute",
        default=f"{defaults.attribute}={defaults.value}",
        help="Controlling morphological value (default: %(default)s)",
    )
    synth.add_argument(
        "--if-marked", choices=["before", "after"], default=defaults.order_if_marked
    )
    synth.add_argument(
        "--otherwise", choices=["before", "after"], default=defaults.order_otherwise
    )
    synth.add_argument("--marked-share", type=float, default=defaults.marked_share)
    synth.add_argument("--n", type=int, default=2000, help="Number of sentences")
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--out", "-o", required=True, help="Output CoNLL-U path")
    synth.set_defaults(handler=cmd_synth)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.handler(args)
    except ConfigError as e:
        print("Aborted due to the following errors:", file=sys.stderr)
        for err in e.errors:
            print("  -", err, file=sys.stderr)
        return EXIT_CONFIG
    except ConfigurationError as e:
        print("Configuration error:", e, file=sys.stderr)
        return EXIT_CONFIG
    except EmptyDataError as e:
        print("No data:", e, file=sys.stderr)
        return EXIT_EMPTY
    except Exception as e:
        logger.debug("Unhandled error", exc_info=True)
        print(f"Error: {e.__class__.__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
