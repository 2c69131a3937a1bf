"""
Rules read off the root-to-leaf paths of a labeled tree.
"""

from dataclasses import dataclass
from typing import Optional

from ..dtree import DecisionTree
from ..features import FeatureSpace
from .leaves import CANNOT_DECIDE

PRESENT = "present"
ABSENT = "absent"
AT_LEAST = "ge"
BELOW = "lt"


@dataclass(frozen=True)
class Condition:
    feature: str
    display: str
    test: str
    threshold: Optional[float] = None

    @property
    def text(self) -> str:
        if self.test == PRESENT:
            return self.display
        if self.test == ABSENT:
            return f"NOT ({self.display})"
        symbol = "≥" if self.test == AT_LEAST else "<"
        return f"{self.display} {symbol} {self.threshold:.4g}"


@dataclass(frozen=True)
class ExampleRef:
    sentence_index: int
    forms: tuple[str, ...]
    focus_ids: tuple[int, ...]
    label: str
    sent_id: Optional[str] = None

    @property
    def text(self) -> str:
        return " ".join(self.forms)


@dataclass(frozen=True)
class Rule:
    conditions: tuple[Condition, ...]
    label: str
    majority_label: str
    p_value: float
    # (label, training count) in the tree's label order
    support: tuple[tuple[str, int], ...]
    leaf_id: int
    positives: tuple[ExampleRef, ...] = ()
    negatives: tuple[ExampleRef, ...] = ()

    @property
    def significant(self) -> bool:
        return self.label != CANNOT_DECIDE

    @property
    def n(self) -> int:
        return sum(count for _, count in self.support)

    @property
    def condition_text(self) -> str:
        if not self.conditions:
            return "(always)"
        return " AND ".join(condition.text for condition in self.conditions)

    @property
    def text(self) -> str:
        return f"{self.condition_text} → {self.label}"


def extract_rules(tree: DecisionTree, space: FeatureSpace) -> list[Rule]:
    """One rule per leaf, in preorder, including cannot-decide leaves."""
    rules = []
    for leaf in tree.leaves:
        conditions = tuple(
            _condition(node.feature_name, node.threshold, passed, space)
            for node, passed in tree.path(leaf.id)
        )
        majority = tree.label_order[leaf.majority]
        rules.append(
            Rule(
                conditions=conditions,
                label=leaf.verdict if leaf.verdict is not None else majority,
                majority_label=majority,
                p_value=leaf.p_value if leaf.p_value is not None else 1.0,
                support=tuple(zip(tree.label_order, leaf.counts)),
                leaf_id=leaf.id,
            )
        )
    return rules


def _condition(
    name: str,
    threshold: Optional[float],
    passed: bool,
    space: FeatureSpace,
) -> Condition:
    feature_id = space.id_of(name)
    display = space.display[feature_id] if feature_id is not None else name
    if threshold is None:
        return Condition(name, display, PRESENT if passed else ABSENT)
    return Condition(name, display, AT_LEAST if passed else BELOW, threshold)
