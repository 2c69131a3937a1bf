import logging
from dataclasses import dataclass
from typing import Iterable

from ..features import FeatureMatrix
from .exceptions import GridSearchError
from .params import TrainParams
from .tree import DecisionTree, grow, score

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridResult:
    tree: DecisionTree
    params: TrainParams
    accuracy: float
    scores: tuple[tuple[TrainParams, float], ...] = ()


def grid_search(
    train: FeatureMatrix,
    valid: FeatureMatrix,
    grid: Iterable[TrainParams],
) -> GridResult:
    """
    Train one tree per configuration and keep the best on the validation set.

    Ties in validation accuracy go to the smaller max_depth, then gini before entropy,
    then the smaller min_leaf.

    Raises:
      GridSearchError: If the grid or the validation set is empty.
    """
    grid = list(grid)
    if not grid:
        raise GridSearchError("empty hyperparameter grid")
    if len(valid) == 0:
        raise GridSearchError("empty validation set")

    results = []
    for params in grid:
        tree = grow(train, params)
        accuracy = score(tree, valid)
        logger.debug(
            "%s depth=%d min_leaf=%d: validation accuracy %.4f",
            params.criterion,
            params.max_depth,
            params.min_leaf,
            accuracy,
        )
        results.append((tree, params, accuracy))

    tree, params, accuracy = min(results, key=lambda r: (-r[2], r[1].sort_key))
    logger.info(
        "Selected %s depth=%d (validation accuracy %.4f of %d configurations)",
        params.criterion,
        params.max_depth,
        accuracy,
        len(grid),
    )
    return GridResult(
        tree=tree,
        params=params,
        accuracy=accuracy,
        scores=tuple((p, a) for _, p, a in results),
    )
