"""
Greedy split search.

Binary features are tested for presence; numeric features are tested against thresholds
placed at midpoints between consecutive distinct values observed in the node. Every
candidate is scored by weighted impurity decrease, and candidates within GAIN_TOLERANCE
of the best are considered tied: the lowest feature id wins, then the lowest threshold.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..features import BINARY, FeatureMatrix
from .impurity import row_impurity
from .params import GINI

GAIN_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Split:
    feature: int
    # None for a presence test on a binary feature.
    threshold: Optional[float]
    decrease: float

    def passes(self, values: np.ndarray) -> np.ndarray:
        """Boolean mask of the rows that take the pass (right) branch."""
        if self.threshold is None:
            return values != 0
        return values >= self.threshold


def binary_mask(matrix: FeatureMatrix) -> np.ndarray:
    return np.array([kind == BINARY for kind in matrix.space.kinds], dtype=bool)


def best_split(
    matrix: FeatureMatrix,
    rows: Optional[np.ndarray] = None,
    criterion: str = GINI,
    min_leaf: int = 1,
    binary: Optional[np.ndarray] = None,
) -> Optional[Split]:
    """
    Find the split of the given rows with the largest impurity decrease.

    Args:
      matrix: Feature matrix with known labels for every row in `rows`.
      rows: Row indices of the node. Defaults to every row.
      criterion: Impurity criterion.
      min_leaf: Minimum number of rows on each side of a split.
      binary: Precomputed per-feature binary mask (see binary_mask).

    Returns:
      The best split, or None if the node is pure, no candidate respects min_leaf, or
      the best decrease is not positive.
    """
    rows = np.arange(len(matrix)) if rows is None else np.asarray(rows, dtype=np.int64)
    if len(rows) == 0:
        return None
    binary = binary_mask(matrix) if binary is None else binary

    n_labels = len(matrix.labels)
    y_node = matrix.y[rows]
    n = len(rows)
    parent = np.bincount(y_node, minlength=n_labels).astype(float)
    parent_impurity = row_impurity(parent[np.newaxis, :], criterion)[0]
    if parent_impurity <= GAIN_TOLERANCE:
        return None

    X_node = matrix.X[rows]
    onehot = np.zeros((n, n_labels))
    onehot[np.arange(n), y_node] = 1.0

    decreases, features, thresholds = [], [], []

    binary_ids = np.nonzero(binary)[0]
    if len(binary_ids):
        present = (X_node[:, binary_ids] != 0).astype(float)
        pass_counts = np.asarray(present.T @ onehot)
        fail_counts = parent[np.newaxis, :] - pass_counts
        decrease, valid = _score(
            parent_impurity, fail_counts, pass_counts, criterion, min_leaf
        )
        decreases.append(decrease[valid])
        features.append(binary_ids[valid])
        thresholds.append(np.full(int(valid.sum()), -np.inf))

    numeric_ids = np.nonzero(~binary)[0]
    if len(numeric_ids):
        dense = X_node[:, numeric_ids].toarray()
        for column, feature in enumerate(numeric_ids):
            values = dense[:, column]
            order = np.argsort(values, kind="stable")
            ordered = values[order]
            boundaries = np.nonzero(np.diff(ordered) > 0)[0]
            if not len(boundaries):
                continue
            below = np.cumsum(onehot[order], axis=0)[boundaries]
            above = parent[np.newaxis, :] - below
            decrease, valid = _score(parent_impurity, below, above, criterion, min_leaf)
            midpoints = (ordered[boundaries] + ordered[boundaries + 1]) / 2.0
            decreases.append(decrease[valid])
            features.append(np.full(int(valid.sum()), feature))
            thresholds.append(midpoints[valid])

    if not decreases:
        return None
    decreases = np.concatenate(decreases)
    if not len(decreases):
        return None
    features = np.concatenate(features)
    thresholds = np.concatenate(thresholds)

    best = decreases.max()
    if best <= GAIN_TOLERANCE:
        return None
    tied = np.nonzero(decreases >= best - GAIN_TOLERANCE)[0]
    # lexsort: last key is primary
    chosen = tied[np.lexsort((thresholds[tied], features[tied]))[0]]
    threshold = thresholds[chosen]
    return Split(
        feature=int(features[chosen]),
        threshold=None if np.isneginf(threshold) else float(threshold),
        decrease=float(decreases[chosen]),
    )


def _score(
    parent_impurity: float,
    fail_counts: np.ndarray,
    pass_counts: np.ndarray,
    criterion: str,
    min_leaf: int,
) -> tuple[np.ndarray, np.ndarray]:
    n_fail = fail_counts.sum(axis=1)
    n_pass = pass_counts.sum(axis=1)
    n = n_fail + n_pass
    weighted = (
        n_fail * row_impurity(fail_counts, criterion)
        + n_pass * row_impurity(pass_counts, criterion)
    ) / n
    valid = (n_fail >= min_leaf) & (n_pass >= min_leaf)
    return parent_impurity - weighted, valid
