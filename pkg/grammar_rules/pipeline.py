"""
End-to-end runs: treebank to datasets, features, tree, labeled rules and reports.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .config import ExtractConfig
from .dtree import DecisionTree, GridResult, grid_search, tree_to_dict
from .evaluation import EvalReport, baseline_accuracy, cross_eval, evaluate
from .exceptions import EmptyDataError
from .features import (
    FeatureFamily,
    FeatureSpace,
    SparseLexicon,
    build_matrix,
    family_names,
    load_sparse_lexicon,
    vectorize,
)
from .report import EMITTERS, FILE_NAMES
from .ruleset import Rule, attach_examples, extract_rules, label_leaves, null_distribution
from .taskgen import Dataset, build_dataset
from .treebank import Corpus

logger = logging.getLogger(__name__)

TREE_FILE = "tree.json"
EVAL_FILE = "eval.json"
CROSS_EVAL_FILE = "cross_eval.json"
ABLATION_FILE = "ablation.json"

ABLATION_FAMILIES = (
    ("syn",),
    ("syn", "lex"),
    ("syn", "sem"),
    ("syn", "lex", "sem"),
)


@dataclass(frozen=True)
class ExtractionResult:
    tree: DecisionTree
    space: FeatureSpace
    rules: tuple[Rule, ...]
    evaluation: EvalReport
    search: GridResult
    metadata: dict


def load_lexicon(config: ExtractConfig) -> Optional[SparseLexicon]:
    if config.lexicon is None:
        return None
    return load_sparse_lexicon(config.lexicon, k=config.top_k)


def build_datasets(
    config: ExtractConfig, corpora: tuple[Corpus, Corpus, Corpus]
) -> tuple[Dataset, Dataset, Dataset]:
    return tuple(
        build_dataset(corpus, config.task, config.key, config.relations)
        for corpus in corpora
    )


def run_extraction(
    config: ExtractConfig,
    corpora: Optional[tuple[Corpus, Corpus, Corpus]] = None,
    lexicon: Optional[SparseLexicon] = None,
    families: Optional[Iterable[str]] = None,
) -> ExtractionResult:
    """
    Train, label and evaluate one model.

    Args:
      config: Validated configuration.
      corpora: (train, valid, test); loaded from config.treebank when omitted.
      lexicon: Sparse lexicon; loaded from config.lexicon when omitted.
      families: Feature families overriding config.features.
    """
    if corpora is None:
        corpora = config.treebank.load(config.seed)
    if lexicon is None:
        lexicon = load_lexicon(config)
    families = list(families) if families is not None else list(config.features)

    train_corpus = corpora[0]
    train, valid, test = build_datasets(config, corpora)

    space, train_matrix = build_matrix(train, train_corpus, families, lexicon)
    labels = train_matrix.labels
    valid_matrix = vectorize(valid, corpora[1], space, families, lexicon, labels)
    test_matrix = vectorize(test, corpora[2], space, families, lexicon, labels)

    search = grid_search(train_matrix, valid_matrix, config.grid)
    tree = label_leaves(
        search.tree, null_distribution(config.task, train), alpha=config.alpha
    )
    rules = attach_examples(
        extract_rules(tree, space),
        tree,
        train_matrix,
        train_corpus,
        seed=config.seed,
        limit=config.examples_per_rule,
    )
    evaluation = evaluate(
        tree,
        train,
        test,
        test_matrix,
        params=search.params,
        validation_accuracy=search.accuracy,
        tau=config.tau,
    )

    metadata = {
        "task": config.task.value,
        "task_key": config.key,
        "treebank": train_corpus.treebank_id,
        "language": train_corpus.language,
        "features": family_names(families),
        "alpha": config.alpha,
        "seed": config.seed,
        "n_train_instances": len(train),
    }
    return ExtractionResult(
        tree=tree,
        space=space,
        rules=tuple(rules),
        evaluation=evaluation,
        search=search,
        metadata=metadata,
    )


def _write_json(path: Path, document) -> Path:
    text = json.dumps(document, ensure_ascii=False, indent=2) + "\n"
    path.write_text(text, encoding="utf-8")
    return path


def write_artifacts(
    result: ExtractionResult,
    out_dir: str | Path,
    formats: Iterable[str],
) -> list[Path]:
    """Write tree.json, eval.json and one rules file per format; return the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    written = [
        _write_json(out_dir / TREE_FILE, tree_to_dict(result.tree, result.space)),
    ]
    rules = list(result.rules)
    for fmt in formats:
        path = out_dir / FILE_NAMES[fmt]
        path.write_bytes(EMITTERS[fmt](rules, result.evaluation, result.metadata))
        written.append(path)
    written.append(_write_json(out_dir / EVAL_FILE, result.evaluation.to_dict()))

    for path in written:
        logger.info("Wrote %s", path)
    return written


def run_cross_eval(config: ExtractConfig) -> dict:
    """
    Train one model per treebank and evaluate it on every treebank's test split.

    Returns:
      {"task", "task_key", "features", "treebanks", "matrix"} where matrix[source][target]
      is an accuracy, or None when the target has no instances (or the source could not
      be trained).
    """
    lexicon = load_lexicon(config)
    names = [name for name, _ in config.treebanks]
    corpora = {name: paths.load(config.seed) for name, paths in config.treebanks}
    test_sets = {}
    for name in names:
        test_corpus = corpora[name][2]
        dataset = build_dataset(test_corpus, config.task, config.key, config.relations)
        test_sets[name] = (dataset, test_corpus)

    matrix: dict[str, Optional[dict[str, Optional[float]]]] = {}
    for source in names:
        try:
            result = run_extraction(config, corpora[source], lexicon)
        except EmptyDataError as e:
            logger.warning("Cannot train a model on %s: %s", source, e)
            matrix[source] = None
            continue
        matrix[source] = cross_eval(
            result.tree, result.space, test_sets, config.features, lexicon
        )

    return {
        "task": config.task.value,
        "task_key": config.key,
        "features": config.feature_names,
        "treebanks": names,
        "matrix": matrix,
    }


def run_ablation(config: ExtractConfig) -> dict:
    """
    Compare feature families on one treebank: the frequency baseline, then one model per
    family set (semantic sets only when a lexicon is configured).
    """
    corpora = config.treebank.load(config.seed)
    lexicon = load_lexicon(config)
    train, _, test = build_datasets(config, corpora)

    rows = [{"features": "baseline", "accuracy": baseline_accuracy(train, test)}]
    for families in ABLATION_FAMILIES:
        if FeatureFamily.SEMANTIC.value in families and lexicon is None:
            continue
        result = run_extraction(config, corpora, lexicon, families)
        rows.append(
            {
                "features": "+".join(families),
                "accuracy": result.evaluation.model_accuracy,
                "validation_accuracy": result.search.accuracy,
                "params": result.search.params.to_dict(),
                "significant_rules": sum(1 for rule in result.rules if rule.significant),
            }
        )

    return {
        "task": config.task.value,
        "task_key": config.key,
        "treebank": corpora[0].treebank_id,
        "rows": rows,
    }


def write_document(document: dict, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return _write_json(path, document)

