"""
Turning a parsed corpus into labeled classification datasets.

One dataset is built per (task, key): per relation for word order, per POS tag for
case marking and per morphological attribute for agreement.
"""

import logging
from typing import Mapping, Optional

from ..treebank import Corpus
from .exceptions import TaskConfigurationError
from .models import (
    AFTER,
    AGREE,
    AGREEMENT_ATTRIBUTES,
    AGREEMENT_LABELS,
    BEFORE,
    DISAGREE,
    WORD_ORDER_LABELS,
    Dataset,
    Task,
    TaskInstance,
    make_labels,
)
from .relations import RelationSpec, load_relation_specs

logger = logging.getLogger(__name__)


def extract_word_order(corpus: Corpus, spec: RelationSpec) -> Dataset:
    """One instance per matching (dependent, head) pair, labeled before/after."""
    instances = []
    for sentence_ref, sentence in enumerate(corpus.sentences):
        for dependent in sentence.tokens:
            if dependent.is_root:
                continue
            head = sentence.token(dependent.head)
            if not spec.matches(dependent, head):
                continue
            label = BEFORE if spec.is_before(dependent, head) else AFTER
            instances.append(
                TaskInstance(
                    sentence_ref=sentence_ref,
                    focus_a=dependent.id,
                    focus_b=head.id,
                    label=label,
                )
            )

    return _dataset(corpus, instances, Task.WORD_ORDER, spec.name, WORD_ORDER_LABELS)


def extract_case(corpus: Corpus, pos: str) -> Dataset:
    """One instance per token of the given POS that carries a Case value."""
    instances = [
        TaskInstance(
            sentence_ref=sentence_ref,
            focus_a=token.id,
            focus_b=None,
            label=token.feature("Case"),
        )
        for sentence_ref, sentence in enumerate(corpus.sentences)
        for token in sentence.tokens
        if token.upos == pos and token.has_feature("Case")
    ]
    return _dataset(corpus, instances, Task.CASE, pos)


def extract_agreement(corpus: Corpus, attribute: str) -> Dataset:
    """
    One instance per (dependent, head) pair where both members mark the attribute.

    Raises:
      TaskConfigurationError: If the attribute is not Gender, Person or Number.
    """
    if attribute not in AGREEMENT_ATTRIBUTES:
        raise TaskConfigurationError(
            f"Agreement attribute must be one of {', '.join(AGREEMENT_ATTRIBUTES)}, "
            f"got '{attribute}'."
        )

    instances = []
    for sentence_ref, sentence in enumerate(corpus.sentences):
        for dependent in sentence.tokens:
            if dependent.is_root:
                continue
            head = sentence.token(dependent.head)
            dependent_value = dependent.feature(attribute)
            head_value = head.feature(attribute)
            if dependent_value is None or head_value is None:
                continue
            instances.append(
                TaskInstance(
                    sentence_ref=sentence_ref,
                    focus_a=dependent.id,
                    focus_b=head.id,
                    label=AGREE if dependent_value == head_value else DISAGREE,
                    member_values=(dependent_value, head_value),
                )
            )

    return _dataset(corpus, instances, Task.AGREEMENT, attribute, AGREEMENT_LABELS)


def build_dataset(
    corpus: Corpus,
    task: Task | str,
    key: str,
    relations: Optional[Mapping[str, RelationSpec]] = None,
) -> Dataset:
    """Dispatch to the extractor of the given task."""
    task = Task.parse(task)

    if task == Task.WORD_ORDER:
        relations = relations if relations is not None else load_relation_specs()
        if key not in relations:
            raise TaskConfigurationError(
                f"Unknown relation '{key}', expected one of: {', '.join(sorted(relations))}"
            )
        return extract_word_order(corpus, relations[key])

    if task == Task.CASE:
        return extract_case(corpus, key)

    return extract_agreement(corpus, key)


def _dataset(
    corpus: Corpus,
    instances: list[TaskInstance],
    task: Task,
    task_key: str,
    configured_labels: tuple[str, ...] = (),
) -> Dataset:
    logger.info(
        "%s/%s on %s (%s): %d instances",
        task.value,
        task_key,
        corpus.treebank_id or "corpus",
        corpus.split,
        len(instances),
    )
    return Dataset(
        instances=tuple(instances),
        labels=make_labels(instances, configured_labels),
        task=task,
        task_key=task_key,
        split=corpus.split,
        treebank_id=corpus.treebank_id,
        n_sentences=len(corpus.sentences),
    )
