"""
Illustrative examples for a rule.

Instances at a rule's leaf are grouped by the lemmas of their focus words (forms when a
lemma is missing). Each group contributes its shortest sentence; groups are shuffled with
the seed and the first `limit` kept. Positives follow the leaf's majority label,
negatives carry any other label.
"""

import random
from dataclasses import replace
from typing import Iterable

from ..dtree import DecisionTree, apply
from ..features import FeatureMatrix
from ..taskgen import TaskInstance
from ..treebank import Corpus
from .rules import ExampleRef, Rule

DEFAULT_EXAMPLES_PER_RULE = 10


def select_examples(
    rule: Rule,
    instances: Iterable[TaskInstance],
    corpus: Corpus,
    seed: int,
    limit: int = DEFAULT_EXAMPLES_PER_RULE,
) -> tuple[tuple[ExampleRef, ...], tuple[ExampleRef, ...]]:
    instances = list(instances)
    rng = random.Random(seed)
    positives = [i for i in instances if i.label == rule.majority_label]
    negatives = [i for i in instances if i.label != rule.majority_label]
    return (
        _pick(positives, corpus, rng, limit),
        _pick(negatives, corpus, rng, limit),
    )


def _focus_key(instance: TaskInstance, corpus: Corpus) -> tuple[str, ...]:
    sentence = corpus.sentences[instance.sentence_ref]
    return tuple(
        sentence.token(token_id).lemma or sentence.token(token_id).form
        for token_id in instance.focus_ids
    )


def _pick(
    instances: list[TaskInstance],
    corpus: Corpus,
    rng: random.Random,
    limit: int,
) -> tuple[ExampleRef, ...]:
    shortest: dict[tuple[str, ...], TaskInstance] = {}
    for instance in instances:
        key = _focus_key(instance, corpus)
        best = shortest.get(key)
        if best is None or _length_key(instance, corpus) < _length_key(best, corpus):
            shortest[key] = instance

    keys = sorted(shortest)
    rng.shuffle(keys)
    return tuple(_reference(shortest[key], corpus) for key in keys[:limit])


def _length_key(instance: TaskInstance, corpus: Corpus) -> tuple:
    return (
        len(corpus.sentences[instance.sentence_ref]),
        instance.sentence_ref,
        instance.focus_ids,
    )


def _reference(instance: TaskInstance, corpus: Corpus) -> ExampleRef:
    sentence = corpus.sentences[instance.sentence_ref]
    return ExampleRef(
        sentence_index=instance.sentence_ref,
        forms=tuple(token.form for token in sentence.tokens),
        focus_ids=instance.focus_ids,
        label=instance.label,
        sent_id=sentence.sent_id,
    )


def attach_examples(
    rules: list[Rule],
    tree: DecisionTree,
    matrix: FeatureMatrix,
    corpus: Corpus,
    seed: int,
    limit: int = DEFAULT_EXAMPLES_PER_RULE,
) -> list[Rule]:
    """Fill positives and negatives of every rule from the training rows at its leaf."""
    leaf_ids = apply(tree, matrix)
    result = []
    for rule in rules:
        at_leaf = [matrix.instances[i] for i in (leaf_ids == rule.leaf_id).nonzero()[0]]
        positives, negatives = select_examples(rule, at_leaf, corpus, seed, limit)
        result.append(replace(rule, positives=positives, negatives=negatives))
    return result
