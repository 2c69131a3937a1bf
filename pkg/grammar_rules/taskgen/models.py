from collections import Counter
from dataclasses import dataclass
from enum import StrEnum
from typing import Optional

from .exceptions import TaskConfigurationError

BEFORE = "before"
AFTER = "after"
AGREE = "agree"
DISAGREE = "disagree"

WORD_ORDER_LABELS = (AFTER, BEFORE)
AGREEMENT_LABELS = (AGREE, DISAGREE)
AGREEMENT_ATTRIBUTES = ("Gender", "Person", "Number")


class Task(StrEnum):
    WORD_ORDER = "word_order"
    CASE = "case"
    AGREEMENT = "agreement"

    @classmethod
    def parse(cls, value: "str | Task") -> "Task":
        """Accept both "word_order" and the command-line spelling "word-order"."""
        try:
            return cls(str(value).strip().lower().replace("-", "_"))
        except ValueError:
            choices = ", ".join(t.value.replace("_", "-") for t in cls)
            raise TaskConfigurationError(
                f"Unknown task '{value}', expected one of: {choices}."
            )


@dataclass(frozen=True)
class TaskInstance:
    sentence_ref: int
    focus_a: int
    focus_b: Optional[int]
    label: str
    # Attribute values of (dependent, head); only filled for agreement.
    member_values: tuple[str, ...] = ()

    @property
    def focus_ids(self) -> tuple[int, ...]:
        if self.focus_b is None:
            return (self.focus_a,)
        return (self.focus_a, self.focus_b)


@dataclass(frozen=True)
class Dataset:
    instances: tuple[TaskInstance, ...]
    labels: tuple[str, ...]
    task: Task
    task_key: str
    split: str = "train"
    treebank_id: str = ""
    n_sentences: int = 0

    def __len__(self):
        return len(self.instances)

    def __iter__(self):
        return iter(self.instances)

    def label_counts(self) -> Counter:
        return Counter(instance.label for instance in self.instances)


def make_labels(
    instances: list[TaskInstance], configured: tuple[str, ...] = ()
) -> tuple[str, ...]:
    """Sorted union of the configured label set and the labels actually observed."""
    return tuple(sorted(set(configured) | {i.label for i in instances}))
