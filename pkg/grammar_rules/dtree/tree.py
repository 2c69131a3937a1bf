"""
Decision trees over feature matrices.

Nodes are stored in preorder in a flat tuple; a node's id is its position. Every
internal node has a fail branch (`left`: feature absent, or value below the threshold)
and a pass branch (`right`: feature present, or value at or above the threshold).
"""

import logging
from dataclasses import dataclass, replace
from typing import Any, Mapping, NamedTuple, Optional

import numpy as np

from ..features import FeatureMatrix, FeatureSpace, FeatureVector
from .exceptions import EmptyTrainingSetError
from .params import GINI, TrainParams, baseline_params
from .split import Split, best_split, binary_mask

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Node:
    id: int
    depth: int
    counts: tuple[int, ...]
    # None on leaves, and on splits whose feature is unknown to the current space.
    feature: Optional[int] = None
    feature_name: Optional[str] = None
    threshold: Optional[float] = None
    left: Optional[int] = None
    right: Optional[int] = None
    verdict: Optional[str] = None
    p_value: Optional[float] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def majority(self) -> int:
        """Index of the most frequent label; ties go to the lowest index."""
        return int(np.argmax(self.counts))

    def passes(self, value: float) -> bool:
        if self.feature is None:
            return False
        if self.threshold is None:
            return value != 0
        return value >= self.threshold


class Prediction(NamedTuple):
    leaf_id: int
    label: str
    distribution: tuple[float, ...]


@dataclass(frozen=True)
class DecisionTree:
    nodes: tuple[Node, ...]
    label_order: tuple[str, ...]
    params: Optional[TrainParams] = None

    @property
    def root(self) -> Node:
        return self.nodes[0]

    @property
    def leaves(self) -> list[Node]:
        return [node for node in self.nodes if node.is_leaf]

    @property
    def depth(self) -> int:
        return max(node.depth for node in self.nodes)

    @property
    def is_labeled(self) -> bool:
        return all(node.verdict is not None for node in self.leaves)

    def leaf_label(self, leaf_id: int) -> str:
        return self.label_order[self.nodes[leaf_id].majority]

    def path(self, leaf_id: int) -> list[tuple[Node, bool]]:
        """(internal node, took pass branch) pairs from the root down to a leaf."""
        parents = {}
        for node in self.nodes:
            if not node.is_leaf:
                parents[node.left] = (node, False)
                parents[node.right] = (node, True)
        steps = []
        current = leaf_id
        while current in parents:
            node, passed = parents[current]
            steps.append((node, passed))
            current = node.id
        return steps[::-1]

    def with_leaves(self, leaves: Mapping[int, Node]) -> "DecisionTree":
        nodes = tuple(leaves.get(node.id, node) for node in self.nodes)
        return replace(self, nodes=nodes)


def grow(matrix: FeatureMatrix, params: TrainParams) -> DecisionTree:
    """
    Grow a tree greedily, splitting until purity, max_depth, min_leaf or no gain.

    Rows whose label is unknown to the matrix are ignored.

    Raises:
      EmptyTrainingSetError: If the matrix has no labeled rows.
    """
    rows = np.nonzero(matrix.y >= 0)[0]
    if len(rows) == 0:
        raise EmptyTrainingSetError("cannot grow a tree from an empty training set")

    binary = binary_mask(matrix)
    n_labels = len(matrix.labels)
    nodes: list[Optional[Node]] = []

    def build(rows: np.ndarray, depth: int) -> int:
        counts = tuple(int(c) for c in np.bincount(matrix.y[rows], minlength=n_labels))
        node_id = len(nodes)
        nodes.append(None)

        split = None
        if depth < params.max_depth and len(rows) >= 2 * params.min_leaf:
            split = best_split(matrix, rows, params.criterion, params.min_leaf, binary)
        if split is None:
            nodes[node_id] = Node(id=node_id, depth=depth, counts=counts)
            return node_id

        passed = _split_values(matrix, split, rows)
        left = build(rows[~passed], depth + 1)
        right = build(rows[passed], depth + 1)
        nodes[node_id] = Node(
            id=node_id,
            depth=depth,
            counts=counts,
            feature=split.feature,
            feature_name=matrix.space.names[split.feature],
            threshold=split.threshold,
            left=left,
            right=right,
        )
        return node_id

    build(rows, 0)
    tree = DecisionTree(
        nodes=tuple(nodes), label_order=tuple(matrix.labels), params=params
    )
    logger.debug(
        "Grew tree (%s, depth %d): %d nodes, %d leaves",
        params.criterion,
        params.max_depth,
        len(tree.nodes),
        len(tree.leaves),
    )
    return tree


def _split_values(matrix: FeatureMatrix, split: Split, rows: np.ndarray) -> np.ndarray:
    return split.passes(matrix.X[rows][:, split.feature].toarray().ravel())


def predict(
    tree: DecisionTree, vector: FeatureVector | Mapping[int, float]
) -> Prediction:
    """Route one vector to its leaf. Absent features count as 0 (the fail side)."""
    values = vector.as_dict() if isinstance(vector, FeatureVector) else dict(vector)
    node = tree.root
    while not node.is_leaf:
        value = values.get(node.feature, 0.0) if node.feature is not None else 0.0
        node = tree.nodes[node.right if node.passes(value) else node.left]

    total = node.n
    distribution = tuple(c / total if total else 0.0 for c in node.counts)
    return Prediction(node.id, tree.label_order[node.majority], distribution)


def apply(tree: DecisionTree, matrix: FeatureMatrix) -> np.ndarray:
    """Leaf id of every row of the matrix."""
    leaf_ids = np.zeros(len(matrix), dtype=np.int64)
    X = matrix.X.tocsc()
    stack = [(tree.root, np.arange(len(matrix)))]
    while stack:
        node, rows = stack.pop()
        if node.is_leaf:
            leaf_ids[rows] = node.id
            continue
        if node.feature is None or len(rows) == 0:
            passed = np.zeros(len(rows), dtype=bool)
        else:
            values = X[:, node.feature].toarray().ravel()[rows]
            passed = values != 0 if node.threshold is None else values >= node.threshold
        stack.append((tree.nodes[node.left], rows[~passed]))
        stack.append((tree.nodes[node.right], rows[passed]))
    return leaf_ids


def predict_matrix(tree: DecisionTree, matrix: FeatureMatrix) -> np.ndarray:
    """Majority label index (in tree.label_order) of every row's leaf."""
    majorities = np.array([node.majority for node in tree.nodes], dtype=np.int64)
    return majorities[apply(tree, matrix)]


def score(tree: DecisionTree, matrix: FeatureMatrix) -> float:
    """Fraction of rows whose leaf majority equals the row label."""
    if len(matrix) == 0:
        return 0.0
    return float(np.mean(predict_matrix(tree, matrix) == _aligned_labels(tree, matrix)))


def _aligned_labels(tree: DecisionTree, matrix: FeatureMatrix) -> np.ndarray:
    """Matrix labels re-indexed into the tree's label order (-1 when unknown)."""
    if tuple(matrix.labels) == tree.label_order:
        return matrix.y
    index = {label: i for i, label in enumerate(tree.label_order)}
    remap = np.array([index.get(label, -1) for label in matrix.labels] + [-1])
    # y == -1 maps to the trailing -1
    return remap[matrix.y]


def tree_to_dict(tree: DecisionTree, space: Optional[FeatureSpace] = None) -> dict:
    """Serialize a tree with splits keyed by feature name."""
    nodes = []
    for node in tree.nodes:
        data: dict[str, Any] = {
            "id": node.id,
            "depth": node.depth,
            "counts": list(node.counts),
        }
        if not node.is_leaf:
            data["feature"] = node.feature_name
            if space is not None and node.feature_name in space:
                data["display"] = space.display[space.id_of(node.feature_name)]
            data["threshold"] = node.threshold
            data["left"] = node.left
            data["right"] = node.right
        else:
            data["label"] = tree.label_order[node.majority]
            if node.verdict is not None:
                data["verdict"] = node.verdict
                data["p_value"] = node.p_value
        nodes.append(data)

    return {
        "schema_version": SCHEMA_VERSION,
        "labels": list(tree.label_order),
        "params": tree.params.to_dict() if tree.params is not None else None,
        "nodes": nodes,
    }


def tree_from_dict(document: Mapping[str, Any], space: FeatureSpace) -> DecisionTree:
    """
    Rebuild a tree against a feature space.

    Split features missing from the space keep their name but route every row to the
    fail side.
    """
    nodes = []
    missing = set()
    for data in document["nodes"]:
        name = data.get("feature")
        feature = space.id_of(name) if name is not None else None
        if name is not None and feature is None:
            missing.add(name)
        nodes.append(
            Node(
                id=int(data["id"]),
                depth=int(data["depth"]),
                counts=tuple(int(c) for c in data["counts"]),
                feature=feature,
                feature_name=name,
                threshold=data.get("threshold"),
                left=data.get("left"),
                right=data.get("right"),
                verdict=data.get("verdict"),
                p_value=data.get("p_value"),
            )
        )
    if missing:
        logger.warning(
            "%d split feature(s) unknown to the feature space: %s",
            len(missing),
            ", ".join(sorted(missing)),
        )

    params = document.get("params")
    if params and params.get("max_depth") == 0:
        params = baseline_params(params.get("criterion", GINI))
    elif params:
        params = TrainParams.from_dict(params)
    else:
        params = None
    return DecisionTree(
        nodes=tuple(nodes), label_order=tuple(document["labels"]), params=params
    )
