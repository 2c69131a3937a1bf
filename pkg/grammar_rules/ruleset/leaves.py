"""
Leaf labeling by significance testing.

A leaf keeps its majority label only if its label distribution differs significantly
from the null distribution of the task; otherwise it is marked cannot-decide.
"""

import logging
from collections import Counter
from dataclasses import dataclass, replace

import numpy as np

from ..dtree import DecisionTree
from ..taskgen import AGREE, DISAGREE, Dataset, Task
from .exceptions import EmptyDatasetError
from .stats import chi2_pvalue

logger = logging.getLogger(__name__)

CANNOT_DECIDE = "cannot-decide"
DEFAULT_ALPHA = 0.01


@dataclass(frozen=True)
class NullDistribution:
    labels: tuple[str, ...]
    probabilities: tuple[float, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.probabilities):
            raise ValueError("labels and probabilities must have the same length")
        if any(p < 0 for p in self.probabilities):
            raise ValueError("probabilities must be non-negative")
        if self.labels and not np.isclose(sum(self.probabilities), 1.0):
            raise ValueError(
                f"probabilities must sum to 1, got {sum(self.probabilities)}"
            )

    def expected(self, label_order: tuple[str, ...]) -> tuple[float, ...]:
        """Probabilities aligned with a label order; labels outside the null get 0."""
        lookup = dict(zip(self.labels, self.probabilities))
        return tuple(lookup.get(label, 0.0) for label in label_order)

    @classmethod
    def uniform(cls, labels: tuple[str, ...]) -> "NullDistribution":
        return cls(tuple(labels), tuple(1.0 / len(labels) for _ in labels))


def chance_agreement(dataset: Dataset) -> float:
    """Probability that two values drawn from the pooled member marginal are equal."""
    values = Counter(value for instance in dataset for value in instance.member_values)
    total = sum(values.values())
    if not total:
        return 0.5
    return sum((count / total) ** 2 for count in values.values())


def null_distribution(task: Task | str, dataset: Dataset) -> NullDistribution:
    """
    Null distribution of a task over the training labels.

    Word order and case marking are uniform over the dataset's labels. Agreement uses
    chance agreement: (p, 1 - p) over (agree, disagree), with p = sum of squared pooled
    value frequencies of both members.

    Raises:
      EmptyDatasetError: If the dataset has no instances.
    """
    task = Task.parse(task)
    if not dataset.instances:
        raise EmptyDatasetError(
            f"cannot build a null distribution for {task.value}/{dataset.task_key}: "
            "no training instances"
        )

    if task == Task.AGREEMENT:
        p = chance_agreement(dataset)
        return NullDistribution((AGREE, DISAGREE), (p, 1.0 - p))
    return NullDistribution.uniform(dataset.labels)


def label_leaves(
    tree: DecisionTree,
    null: NullDistribution,
    alpha: float = DEFAULT_ALPHA,
) -> DecisionTree:
    """Return a copy of the tree whose leaves carry a verdict and a p-value."""
    expected = null.expected(tree.label_order)
    labeled = {}
    for leaf in tree.leaves:
        p_value = chi2_pvalue(leaf.counts, expected) if leaf.n else 1.0
        if leaf.n and p_value < alpha:
            verdict = tree.label_order[leaf.majority]
        else:
            verdict = CANNOT_DECIDE
        labeled[leaf.id] = replace(leaf, verdict=verdict, p_value=p_value)

    significant = sum(1 for leaf in labeled.values() if leaf.verdict != CANNOT_DECIDE)
    logger.info(
        "Labeled %d leaves at alpha=%g: %d significant", len(labeled), alpha, significant
    )
    return tree.with_leaves(labeled)
