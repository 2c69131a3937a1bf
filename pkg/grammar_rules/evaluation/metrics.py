"""
Automated rule metrics.

Accuracy compares the raw leaf majority with the gold label and ignores significance
verdicts. Prediction entropy and ARM read the verdicts, so they need a labeled tree.
"""

import math
from collections import Counter
from typing import Iterable

import numpy as np

from ..dtree import DecisionTree, apply, score
from ..features import FeatureMatrix
from ..taskgen import AFTER, AGREE, BEFORE, Dataset, Task
from .exceptions import EmptyEvaluationSetError, EvaluationError

DEFAULT_TAU = 0.9

# max of -p log2 p is at p = 1/e; two such terms bound binary entropy with abstentions
ENTROPY_BOUND = 2 * math.log2(math.e) / math.e


def frequency_baseline(train: Dataset) -> str:
    """Most frequent training label; ties go to the lexicographically smallest label."""
    counts = train.label_counts()
    if not counts:
        raise EmptyEvaluationSetError(
            "cannot compute a frequency baseline without training data"
        )
    return min(counts, key=lambda label: (-counts[label], label))


def baseline_accuracy(train: Dataset, test: Dataset) -> float:
    """Accuracy of always predicting the training baseline on the test set."""
    if not test.instances:
        raise EmptyEvaluationSetError("empty test set")
    baseline = frequency_baseline(train)
    return sum(1 for instance in test if instance.label == baseline) / len(test)


def accuracy(tree: DecisionTree, test: FeatureMatrix) -> float:
    if len(test) == 0:
        raise EmptyEvaluationSetError("empty test set")
    return score(tree, test)


def _require_labeled(tree: DecisionTree):
    if not tree.is_labeled:
        raise EvaluationError(
            "tree leaves carry no significance verdicts; run label_leaves"
        )


def _require_task(matrix: FeatureMatrix, task: Task, metric: str):
    if matrix.task is not None and matrix.task != task:
        raise EvaluationError(
            f"{metric} is only defined for {task.value}, not {matrix.task.value}"
        )


def verdict_entropy(verdicts: Iterable[str]) -> float:
    """
    Entropy (bits) of before/after predictions; cannot-decide only adds to the total.
    """
    counts = Counter(verdicts)
    total = sum(counts.values())
    if not total:
        raise EmptyEvaluationSetError("no predictions")
    entropy = 0.0
    for label in (BEFORE, AFTER):
        p = counts[label] / total
        if p > 0:
            entropy -= p * math.log2(p)
    return entropy


def prediction_entropy(tree: DecisionTree, test: FeatureMatrix) -> float:
    _require_task(test, Task.WORD_ORDER, "prediction entropy")
    _require_labeled(tree)
    if len(test) == 0:
        raise EmptyEvaluationSetError("empty test set")
    return verdict_entropy(tree.nodes[leaf].verdict for leaf in apply(tree, test))


def arm(tree: DecisionTree, test: FeatureMatrix, tau: float = DEFAULT_TAU) -> float:
    """
    Fraction of test instances whose required/not-required verdict matches the leaf's.

    Ground truth for an instance is "required" iff the training agree-fraction of its
    leaf is at least tau; the prediction is "required" iff the leaf verdict is agree.
    """
    _require_task(test, Task.AGREEMENT, "ARM")
    _require_labeled(tree)
    if len(test) == 0:
        raise EmptyEvaluationSetError("empty test set")
    if AGREE not in tree.label_order:
        raise EvaluationError("ARM needs an agreement tree with an 'agree' label")

    agree = tree.label_order.index(AGREE)
    required = np.zeros(len(tree.nodes), dtype=bool)
    predicted = np.zeros(len(tree.nodes), dtype=bool)
    for leaf in tree.leaves:
        fraction = leaf.counts[agree] / leaf.n if leaf.n else 0.0
        required[leaf.id] = fraction >= tau
        predicted[leaf.id] = leaf.verdict == AGREE

    leaves = apply(tree, test)
    return float(np.mean(required[leaves] == predicted[leaves]))


def resource_setting(n_train_sentences: int) -> str:
    if n_train_sentences < 500:
        return "low"
    if n_train_sentences <= 5000:
        return "mid"
    return "high"
