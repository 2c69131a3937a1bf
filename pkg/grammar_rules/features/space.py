"""
Feature space and sparse feature matrices.

The space is built once from the training split, with feature ids assigned in sorted
name order, and is read-only afterwards: valid/test instances are vectorized into it and
silently lose every feature name the training data never produced.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from scipy import sparse

from ..taskgen import Dataset, Task, TaskInstance
from ..treebank import Corpus
from .exceptions import FeatureSelectionError, NoInstancesError
from .extractors import (
    BINARY,
    Feature,
    FeatureFamily,
    lexical_features,
    parse_families,
    semantic_features,
    syntactic_features,
)
from .focus import collect_focus
from .lexicon import SparseLexicon

logger = logging.getLogger(__name__)

UNKNOWN_LABEL = -1


@dataclass(frozen=True)
class FeatureSpace:
    names: tuple[str, ...]
    kinds: tuple[str, ...]
    display: tuple[str, ...]

    def __post_init__(self):
        # dict lookup built once; frozen, so bypass __setattr__
        object.__setattr__(self, "_ids", {name: i for i, name in enumerate(self.names)})

    def __len__(self):
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._ids

    def id_of(self, name: str) -> Optional[int]:
        return self._ids.get(name)

    def is_binary(self, feature_id: int) -> bool:
        return self.kinds[feature_id] == BINARY

    @classmethod
    def from_features(cls, features: Iterable[Feature]) -> "FeatureSpace":
        seen: dict[str, Feature] = {}
        for feature in features:
            seen.setdefault(feature.name, feature)
        names = tuple(sorted(seen))
        return cls(
            names=names,
            kinds=tuple(seen[name].kind for name in names),
            display=tuple(seen[name].label for name in names),
        )


@dataclass(frozen=True)
class FeatureVector:
    entries: tuple[tuple[int, float], ...]

    def as_dict(self) -> dict[int, float]:
        return dict(self.entries)


@dataclass(frozen=True)
class FeatureMatrix:
    X: sparse.csr_matrix
    y: np.ndarray
    labels: tuple[str, ...]
    instances: tuple[TaskInstance, ...]
    space: FeatureSpace
    task: Optional[Task] = None

    def __len__(self):
        return self.X.shape[0]

    def row(self, i: int) -> FeatureVector:
        start, end = self.X.indptr[i], self.X.indptr[i + 1]
        return FeatureVector(
            tuple(
                (int(j), float(v))
                for j, v in zip(self.X.indices[start:end], self.X.data[start:end])
            )
        )

    def label_of(self, i: int) -> Optional[str]:
        index = int(self.y[i])
        return None if index == UNKNOWN_LABEL else self.labels[index]


def _check_families(
    families: Iterable[str],
    lexicon: Optional[SparseLexicon],
) -> frozenset[FeatureFamily]:
    families = parse_families(families)
    if not families:
        raise FeatureSelectionError("no feature families selected")
    if FeatureFamily.SEMANTIC in families and lexicon is None:
        raise FeatureSelectionError("semantic features require a sparse lexicon")
    return families


def _excluded_attributes(dataset: Dataset) -> dict[str, set[str]]:
    if dataset.task == Task.CASE:
        return {"dep": {"Case"}}
    if dataset.task == Task.AGREEMENT:
        return {"dep": {dataset.task_key}, "head": {dataset.task_key}}
    return {}


def instance_features(
    instance: TaskInstance,
    corpus: Corpus,
    families: frozenset[FeatureFamily],
    lexicon: Optional[SparseLexicon] = None,
    excluded_attributes: Optional[dict[str, set[str]]] = None,
) -> list[Feature]:
    focus = collect_focus(corpus.sentences[instance.sentence_ref], instance)
    features = []
    if FeatureFamily.SYNTACTIC in families:
        features.extend(syntactic_features(focus, excluded_attributes))
    if FeatureFamily.LEXICAL in families:
        features.extend(lexical_features(focus))
    if FeatureFamily.SEMANTIC in families and lexicon is not None:
        features.extend(semantic_features(focus, lexicon))
    return features


def build_matrix(
    dataset: Dataset,
    corpus: Corpus,
    families: Iterable[str],
    lexicon: Optional[SparseLexicon] = None,
) -> tuple[FeatureSpace, FeatureMatrix]:
    """
    Build the feature space from a training dataset and vectorize it.

    Raises:
      NoInstancesError: If the dataset is empty.
      FeatureSelectionError: If no family is selected, or semantic without a lexicon.
    """
    families = _check_families(families, lexicon)
    if not dataset.instances:
        raise NoInstancesError("no instances")

    excluded = _excluded_attributes(dataset)
    per_instance = [
        instance_features(instance, corpus, families, lexicon, excluded)
        for instance in dataset.instances
    ]
    space = FeatureSpace.from_features(f for features in per_instance for f in features)
    logger.info(
        "Feature space for %s/%s: %d features from %d instances",
        dataset.task.value,
        dataset.task_key,
        len(space),
        len(dataset),
    )
    return space, _to_matrix(dataset, per_instance, space, dataset.labels)


def vectorize(
    dataset: Dataset,
    corpus: Corpus,
    space: FeatureSpace,
    families: Iterable[str],
    lexicon: Optional[SparseLexicon] = None,
    labels: Optional[tuple[str, ...]] = None,
) -> FeatureMatrix:
    """
    Vectorize a dataset into an existing feature space without changing the space.

    Args:
      labels: Label order of the model (usually the training labels). Labels outside
        it are encoded as UNKNOWN_LABEL.
    """
    families = _check_families(families, lexicon)
    excluded = _excluded_attributes(dataset)
    per_instance = [
        instance_features(instance, corpus, families, lexicon, excluded)
        for instance in dataset.instances
    ]
    return _to_matrix(dataset, per_instance, space, labels or dataset.labels)


def _to_matrix(
    dataset: Dataset,
    per_instance: list[list[Feature]],
    space: FeatureSpace,
    labels: tuple[str, ...],
) -> FeatureMatrix:
    rows, cols, values = [], [], []
    for row, features in enumerate(per_instance):
        # A name can repeat within one instance only if two roles collide; keep the first.
        seen = set()
        for feature in features:
            feature_id = space.id_of(feature.name)
            if feature_id is None or feature_id in seen:
                continue
            seen.add(feature_id)
            rows.append(row)
            cols.append(feature_id)
            values.append(feature.value)

    X = _csr(rows, cols, values, (len(per_instance), len(space)))

    label_index = {label: i for i, label in enumerate(labels)}
    y = np.array(
        [label_index.get(i.label, UNKNOWN_LABEL) for i in dataset.instances],
        dtype=np.int64,
    )
    return FeatureMatrix(
        X=X,
        y=y,
        labels=tuple(labels),
        instances=dataset.instances,
        space=space,
        task=dataset.task,
    )


def matrix_from_vectors(
    vectors: list[FeatureVector],
    y: list[int],
    labels: tuple[str, ...],
    space: FeatureSpace,
    task: Optional[Task] = None,
) -> FeatureMatrix:
    """Assemble a matrix directly from feature vectors (no corpus involved)."""
    rows, cols, values = [], [], []
    for row, vector in enumerate(vectors):
        for feature_id, value in vector.entries:
            rows.append(row)
            cols.append(feature_id)
            values.append(value)
    X = _csr(rows, cols, values, (len(vectors), len(space)))
    instances = tuple(
        TaskInstance(sentence_ref=i, focus_a=1, focus_b=None, label=labels[label])
        for i, label in enumerate(y)
    )
    return FeatureMatrix(
        X=X,
        y=np.asarray(y, dtype=np.int64),
        labels=tuple(labels),
        instances=instances,
        space=space,
        task=task,
    )


def _csr(
    rows: list[int], cols: list[int], values: list[float], shape
) -> sparse.csr_matrix:
    X = sparse.csr_matrix(
        (
            np.asarray(values, dtype=float),
            (np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64)),
        ),
        shape=shape,
    )
    X.sort_indices()
    return X
