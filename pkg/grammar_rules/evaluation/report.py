import logging
from dataclasses import asdict, dataclass
from typing import Iterable, Mapping, Optional

from ..dtree import DecisionTree, TrainParams
from ..features import FeatureMatrix, FeatureSpace, SparseLexicon, vectorize
from ..taskgen import Dataset, Task
from ..treebank import Corpus
from .metrics import (
    DEFAULT_TAU,
    accuracy,
    arm,
    baseline_accuracy,
    frequency_baseline,
    prediction_entropy,
    resource_setting,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalReport:
    task: str
    task_key: str
    model_accuracy: float
    baseline_accuracy: float
    baseline_label: str
    n_test: int
    n_train_sentences: int
    resource: str
    params: Optional[dict] = None
    validation_accuracy: Optional[float] = None
    entropy: Optional[float] = None
    arm: Optional[float] = None
    tau: Optional[float] = None

    @property
    def gain(self) -> float:
        return self.model_accuracy - self.baseline_accuracy

    def to_dict(self) -> dict:
        data = asdict(self)
        data["gain"] = self.gain
        return data

    @classmethod
    def from_dict(cls, data: Mapping) -> "EvalReport":
        return cls(**{k: v for k, v in data.items() if k != "gain"})


def evaluate(
    tree: DecisionTree,
    train: Dataset,
    test: Dataset,
    test_matrix: FeatureMatrix,
    params: Optional[TrainParams] = None,
    validation_accuracy: Optional[float] = None,
    tau: float = DEFAULT_TAU,
) -> EvalReport:
    """
    Assemble every metric that applies to the task of a labeled tree.

    Args:
      tree: Tree after label_leaves.
      train: Training dataset (baseline label and resource setting).
      test: Test dataset, aligned with `test_matrix`.
      test_matrix: Test rows vectorized into the tree's feature space.
    """
    word_order = train.task == Task.WORD_ORDER
    agreement = train.task == Task.AGREEMENT
    report = EvalReport(
        task=train.task.value,
        task_key=train.task_key,
        model_accuracy=accuracy(tree, test_matrix),
        baseline_accuracy=baseline_accuracy(train, test),
        baseline_label=frequency_baseline(train),
        n_test=len(test),
        n_train_sentences=train.n_sentences,
        resource=resource_setting(train.n_sentences),
        params=params.to_dict() if params is not None else None,
        validation_accuracy=validation_accuracy,
        entropy=prediction_entropy(tree, test_matrix) if word_order else None,
        arm=arm(tree, test_matrix, tau) if agreement else None,
        tau=tau if agreement else None,
    )
    logger.info(
        "%s/%s: accuracy %.4f vs baseline %.4f (%+.4f)",
        report.task,
        report.task_key,
        report.model_accuracy,
        report.baseline_accuracy,
        report.gain,
    )
    return report


def cross_eval(
    tree: DecisionTree,
    space: FeatureSpace,
    targets: Mapping[str, tuple[Dataset, Corpus]],
    families: Iterable[str],
    lexicon: Optional[SparseLexicon] = None,
) -> dict[str, Optional[float]]:
    """
    Accuracy of one trained tree on the test sets of other treebanks.

    Each target is vectorized into the tree's own feature space; features the source
    treebank never produced are dropped. Targets without task instances map to None.
    """
    families = list(families)
    results: dict[str, Optional[float]] = {}
    for name, (dataset, corpus) in targets.items():
        if not dataset.instances:
            logger.info("Cross-evaluation target %s has no instances", name)
            results[name] = None
            continue
        matrix = vectorize(dataset, corpus, space, families, lexicon, tree.label_order)
        results[name] = accuracy(tree, matrix)
    return results
