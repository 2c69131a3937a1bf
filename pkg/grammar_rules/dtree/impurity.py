import numpy as np

from .exceptions import EmptyNodeError
from .params import ENTROPY, GINI


def impurity(counts, criterion: str = GINI) -> float:
    """
    Impurity of a node given its per-label counts.

    Args:
      counts: Non-negative per-label counts.
      criterion: "gini" (1 - sum p^2) or "entropy" (bits).

    Raises:
      EmptyNodeError: If the counts sum to zero.
    """
    counts = np.asarray(counts, dtype=float)
    total = counts.sum()
    if total <= 0:
        raise EmptyNodeError("empty node")
    return float(row_impurity(counts[np.newaxis, :], criterion)[0])


def row_impurity(counts: np.ndarray, criterion: str) -> np.ndarray:
    """Vectorized impurity over the rows of a (candidates, labels) count matrix.

    Rows summing to zero get impurity 0; callers weight them by their size anyway.
    """
    counts = np.asarray(counts, dtype=float)
    totals = counts.sum(axis=1, keepdims=True)
    p = np.divide(counts, totals, out=np.zeros_like(counts), where=totals > 0)

    if criterion == GINI:
        values = 1.0 - np.square(p).sum(axis=1)
        values[totals[:, 0] == 0] = 0.0
    elif criterion == ENTROPY:
        logs = np.log2(p, out=np.zeros_like(p), where=p > 0)
        values = -(p * logs).sum(axis=1)
    else:
        raise ValueError(f"Unknown criterion '{criterion}'")

    # -0.0 and rounding noise below zero
    return np.maximum(values, 0.0)
