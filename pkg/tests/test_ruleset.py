import random
import unittest

from grammar_rules.dtree import DecisionTree, Node, TrainParams, grow
from grammar_rules.features import FeatureSpace, build_matrix
from grammar_rules.features.extractors import BINARY, NUMERIC
from grammar_rules.ruleset import (
    ABSENT,
    AT_LEAST,
    BELOW,
    CANNOT_DECIDE,
    PRESENT,
    Condition,
    EmptyDatasetError,
    NullDistribution,
    attach_examples,
    chance_agreement,
    chi2_statistic,
    extract_rules,
    label_leaves,
    null_distribution,
    select_examples,
)
from grammar_rules.taskgen import (
    AGREE,
    DISAGREE,
    Dataset,
    Task,
    TaskInstance,
    build_dataset,
)

from tests.utils import (
    binary_space,
    corpus,
    matrix_from_rows,
    planted_corpus,
    random_binary_matrix,
    sentence,
    token,
)


def separable_matrix(n=40, noise=0):
    """f0 present -> b, absent -> a; `noise` rows of each side flipped."""
    rows = [{0: 1.0}] * n + [{}] * n
    y = [1] * (n - noise) + [0] * noise + [0] * (n - noise) + [1] * noise
    return matrix_from_rows(rows, y, space=binary_space(2))


def agreement_dataset(values):
    instances = tuple(
        TaskInstance(
            sentence_ref=0,
            focus_a=1,
            focus_b=2,
            label=AGREE if a == b else DISAGREE,
            member_values=(a, b),
        )
        for a, b in values
    )
    return Dataset(
        instances=instances,
        labels=(AGREE, DISAGREE),
        task=Task.AGREEMENT,
        task_key="Number",
    )


class TestNullDistribution(unittest.TestCase):
    def test_uniform_for_word_order_and_case(self):
        dataset = Dataset(
            instances=(TaskInstance(0, 1, None, "Nom"),),
            labels=("Acc", "Dat", "Nom"),
            task=Task.CASE,
            task_key="NOUN",
        )
        null = null_distribution(Task.CASE, dataset)
        self.assertEqual(null.labels, ("Acc", "Dat", "Nom"))
        for p in null.probabilities:
            self.assertAlmostEqual(p, 1 / 3)

    def test_chance_agreement(self):
        dataset = agreement_dataset([("Sing", "Sing"), ("Sing", "Plur")])
        # pooled values: Sing x3, Plur x1
        self.assertAlmostEqual(chance_agreement(dataset), 0.625)
        null = null_distribution("agreement", dataset)
        self.assertEqual(null.labels, (AGREE, DISAGREE))
        self.assertAlmostEqual(null.probabilities[0], 0.625)
        self.assertAlmostEqual(null.probabilities[1], 0.375)

    def test_expected_aligns_with_label_order(self):
        null = NullDistribution(("agree", "disagree"), (0.7, 0.3))
        self.assertEqual(null.expected(("disagree", "agree", "other")), (0.3, 0.7, 0.0))
        with self.assertRaises(ValueError):
            NullDistribution(("a", "b"), (0.7, 0.7))

    def test_empty_dataset(self):
        empty = Dataset(instances=(), labels=(), task=Task.WORD_ORDER, task_key="x")
        with self.assertRaises(EmptyDatasetError):
            null_distribution(Task.WORD_ORDER, empty)


class TestLabelLeaves(unittest.TestCase):
    def test_significant_leaves_keep_their_majority(self):
        tree = grow(separable_matrix(), TrainParams())
        labeled = label_leaves(tree, NullDistribution.uniform(("a", "b")), alpha=0.01)
        self.assertTrue(labeled.is_labeled)
        verdicts = {leaf.id: leaf.verdict for leaf in labeled.leaves}
        self.assertEqual(verdicts, {1: "a", 2: "b"})
        for leaf in labeled.leaves:
            self.assertLess(leaf.p_value, 1e-6)

    def test_weak_leaf_cannot_decide(self):
        matrix = matrix_from_rows([{}] * 5, [0, 0, 0, 1, 1], space=binary_space(1))
        tree = grow(matrix, TrainParams())
        labeled = label_leaves(tree, NullDistribution.uniform(("a", "b")))
        leaf = labeled.leaves[0]
        self.assertEqual(leaf.verdict, CANNOT_DECIDE)
        self.assertAlmostEqual(leaf.p_value, 0.6547, delta=1e-4)
        # the majority is still readable
        self.assertEqual(labeled.leaf_label(leaf.id), "a")

    def test_alpha_is_strict(self):
        matrix = matrix_from_rows([{}] * 5, [0, 0, 0, 1, 1], space=binary_space(1))
        tree = grow(matrix, TrainParams())
        null = NullDistribution.uniform(("a", "b"))
        p_value = label_leaves(tree, null).leaves[0].p_value
        relabeled = label_leaves(tree, null, alpha=p_value)
        self.assertEqual(relabeled.leaves[0].verdict, CANNOT_DECIDE)

    def test_alpha_extremes(self):
        rng = random.Random(9)
        null = NullDistribution.uniform(("a", "b"))
        for _ in range(50):
            matrix = random_binary_matrix(rng, rng.randint(4, 60), 3)
            tree = grow(matrix, TrainParams())
            for leaf in label_leaves(tree, null, alpha=0.0).leaves:
                self.assertEqual(leaf.verdict, CANNOT_DECIDE)
            for leaf in label_leaves(tree, null, alpha=1.0).leaves:
                statistic, _ = chi2_statistic(leaf.counts, (0.5, 0.5))
                if statistic > 0:
                    self.assertNotEqual(leaf.verdict, CANNOT_DECIDE)

    def test_empty_leaf(self):
        tree = DecisionTree(
            nodes=(Node(id=0, depth=0, counts=(0, 0)),), label_order=("a", "b")
        )
        leaf = label_leaves(tree, NullDistribution.uniform(("a", "b"))).leaves[0]
        self.assertEqual(leaf.verdict, CANNOT_DECIDE)
        self.assertEqual(leaf.p_value, 1.0)


class TestRules(unittest.TestCase):
    def test_one_rule_per_leaf(self):
        matrix = separable_matrix(noise=2)
        null = NullDistribution.uniform(("a", "b"))
        tree = label_leaves(grow(matrix, TrainParams()), null)
        rules = extract_rules(tree, matrix.space)
        self.assertEqual([rule.leaf_id for rule in rules], [1, 2])

        absent, present = rules
        self.assertEqual(absent.conditions, (Condition("f00", "f00", ABSENT),))
        self.assertEqual(absent.text, "NOT (f00) → a")
        self.assertEqual(present.condition_text, "f00")
        self.assertEqual(present.label, "b")
        self.assertEqual(present.support, (("a", 2), ("b", 38)))
        self.assertEqual(present.n, 40)
        self.assertTrue(present.significant)
        self.assertEqual(present.conditions[0].test, PRESENT)

    def test_display_names_and_thresholds(self):
        space = FeatureSpace(
            names=("dep-dim3", "dep-is-adj"),
            kinds=(NUMERIC, BINARY),
            display=("dep-word-is-like={mesa,silla}", "dep-is-adj"),
        )
        rows = [{0: 0.8}, {0: 0.9}, {0: 0.1}, {}]
        matrix = matrix_from_rows(rows, [1, 1, 0, 0], space=space)
        tree = grow(matrix, TrainParams())
        rules = extract_rules(tree, space)
        self.assertEqual(rules[0].conditions[0].test, BELOW)
        self.assertEqual(rules[1].conditions[0].test, AT_LEAST)
        display = "dep-word-is-like={mesa,silla}"
        self.assertEqual(rules[1].condition_text, f"{display} ≥ 0.45")
        self.assertEqual(rules[0].condition_text, f"{display} < 0.45")

    def test_unlabeled_tree_uses_majority(self):
        tree = grow(separable_matrix(), TrainParams())
        rules = extract_rules(tree, binary_space(2))
        self.assertEqual([rule.label for rule in rules], ["a", "b"])
        self.assertEqual(rules[0].p_value, 1.0)

    def test_root_leaf_has_no_conditions(self):
        matrix = matrix_from_rows([{}] * 4, [0, 0, 0, 1], space=binary_space(1))
        rule = extract_rules(grow(matrix, TrainParams()), matrix.space)[0]
        self.assertEqual(rule.condition_text, "(always)")


class TestExamples(unittest.TestCase):
    def setUp(self):
        self.corpus = corpus(
            sentence(
                token(1, "el", "DET", 2, "det"),
                token(2, "gato", "NOUN", 0, "root"),
                token(3, "ya", "ADV", 2, "mod"),
            ),
            sentence(
                token(1, "gato", "NOUN", 0, "root"),
                token(2, "no", "ADV", 1, "mod"),
            ),
            sentence(token(1, "perro", "NOUN", 0, "root")),
            sentence(token(1, "casa", "NOUN", 0, "root")),
        )
        self.instances = [
            TaskInstance(0, 2, None, "Nom"),
            TaskInstance(1, 1, None, "Nom"),
            TaskInstance(2, 1, None, "Nom"),
            TaskInstance(3, 1, None, "Acc"),
        ]
        matrix = matrix_from_rows([{}] * 4, [1, 1, 1, 0], labels=("Acc", "Nom"))
        self.rule = extract_rules(grow(matrix, TrainParams()), matrix.space)[0]

    def test_groups_by_lemma_and_keeps_the_shortest_sentence(self):
        positives, negatives = select_examples(
            self.rule, self.instances, self.corpus, seed=0
        )
        self.assertEqual(len(positives), 2)
        by_lemma = {ex.forms[ex.focus_ids[0] - 1]: ex for ex in positives}
        self.assertEqual(by_lemma["gato"].sentence_index, 1)
        self.assertEqual(by_lemma["gato"].text, "gato no")
        self.assertIn("perro", by_lemma)
        self.assertEqual([example.label for example in negatives], ["Acc"])

    def test_limit_and_determinism(self):
        first = select_examples(self.rule, self.instances, self.corpus, seed=3, limit=1)
        second = select_examples(self.rule, self.instances, self.corpus, seed=3, limit=1)
        self.assertEqual(first, second)
        self.assertEqual(len(first[0]), 1)

    def test_attach_examples_on_planted_corpus(self):
        planted = planted_corpus(200, seed=1)
        dataset = build_dataset(planted, Task.WORD_ORDER, "adjective-noun")
        space, matrix = build_matrix(dataset, planted, ["syn"])
        tree = label_leaves(
            grow(matrix, TrainParams()), null_distribution(Task.WORD_ORDER, dataset)
        )
        rules = attach_examples(
            extract_rules(tree, space), tree, matrix, planted, seed=0, limit=3
        )
        for rule in rules:
            self.assertTrue(0 < len(rule.positives) <= 3)
            self.assertEqual(rule.negatives, ())
            for example in rule.positives:
                self.assertEqual(example.label, rule.majority_label)
                self.assertEqual(len(example.focus_ids), 2)
