import json
import tempfile
import unittest
from pathlib import Path

from grammar_rules.config import CrossEvalConfig, ExtractConfig
from grammar_rules.dtree import GINI, DEFAULT_GRID
from grammar_rules.pipeline import (
    EVAL_FILE,
    TREE_FILE,
    run_ablation,
    run_cross_eval,
    run_extraction,
    write_artifacts,
)
from grammar_rules.ruleset import ABSENT, PRESENT
from grammar_rules.taskgen import AFTER, BEFORE

from tests.utils import write_planted_treebank

ORDINAL = "dep-numtype-is-ord"


class PlantedRuleTestCase(unittest.TestCase):
    """A 2000-sentence corpus whose adjective order is decided by NumType=Ord alone."""

    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = Path(cls.tmp.name)
        write_planted_treebank(cls.tmp.name, "planted.conllu", n_sentences=2000, seed=7)
        cls.config = ExtractConfig.from_dict(
            {
                "treebank": {"path": "planted.conllu", "split": [0.8, 0.1, 0.1]},
                "task": "word-order",
                "key": "adjective-noun",
                "features": "syn",
                "seed": 7,
                "out": "out",
            },
            base_dir=cls.dir,
        )
        cls.result = run_extraction(cls.config)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()


class TestPlantedExtraction(PlantedRuleTestCase):
    def test_grid(self):
        self.assertEqual(self.config.grid, DEFAULT_GRID)
        self.assertEqual(len(self.result.search.scores), 20)
        # every configuration is perfect on validation; the tie goes to gini, depth 3
        self.assertEqual(self.result.search.params.criterion, GINI)
        self.assertEqual(self.result.search.params.max_depth, 3)
        self.assertEqual(self.result.search.accuracy, 1.0)

    def test_tree_splits_on_the_planted_feature(self):
        tree = self.result.tree
        self.assertEqual(tree.root.feature_name, ORDINAL)
        self.assertEqual(len(tree.leaves), 2)

    def test_rules(self):
        significant = [rule for rule in self.result.rules if rule.significant]
        self.assertEqual(len(significant), 2)

        by_test = {rule.conditions[0].test: rule for rule in significant}
        self.assertEqual(set(by_test), {PRESENT, ABSENT})
        for rule in significant:
            self.assertEqual(len(rule.conditions), 1)
            self.assertEqual(rule.conditions[0].feature, ORDINAL)
            self.assertLess(rule.p_value, 0.01)
        self.assertEqual(by_test[PRESENT].label, BEFORE)
        self.assertEqual(by_test[ABSENT].label, AFTER)
        self.assertEqual(by_test[PRESENT].text, f"{ORDINAL} → before")

        # pure leaves: examples but no exceptions
        self.assertEqual(len(by_test[PRESENT].positives), 10)
        self.assertEqual(by_test[PRESENT].negatives, ())

    def test_evaluation(self):
        evaluation = self.result.evaluation
        self.assertEqual(evaluation.model_accuracy, 1.0)
        self.assertEqual(evaluation.baseline_label, AFTER)
        self.assertLess(evaluation.baseline_accuracy, 0.75)
        self.assertGreater(evaluation.gain, 0.25)
        self.assertEqual(evaluation.n_test, 200)
        self.assertEqual(evaluation.resource, "mid")
        self.assertGreater(evaluation.entropy, 0.8)
        self.assertIsNone(evaluation.arm)

    def test_metadata(self):
        metadata = self.result.metadata
        self.assertEqual(metadata["treebank"], "planted")
        self.assertEqual(metadata["features"], "syn")
        self.assertEqual(metadata["n_train_instances"], 1600)

    def test_artifacts_are_deterministic(self):
        again = run_extraction(self.config)
        formats = ("json", "md", "html")
        first = write_artifacts(self.result, self.dir / "first", formats)
        second = write_artifacts(again, self.dir / "second", formats)

        self.assertEqual(
            [path.name for path in first],
            [TREE_FILE, "rules.json", "rules.md", "rules.html", EVAL_FILE],
        )
        for a, b in zip(first, second):
            self.assertEqual(a.read_bytes(), b.read_bytes(), a.name)

        tree = json.loads((self.dir / "first" / TREE_FILE).read_text(encoding="utf-8"))
        self.assertEqual(tree["nodes"][0]["feature"], ORDINAL)
        evaluation = json.loads((self.dir / "first" / EVAL_FILE).read_bytes())
        self.assertEqual(evaluation["model_accuracy"], 1.0)


class TestAblation(PlantedRuleTestCase):
    def test_rows(self):
        document = run_ablation(self.config)
        self.assertEqual(document["task"], "word_order")
        self.assertEqual(document["treebank"], "planted")

        rows = {row["features"]: row for row in document["rows"]}
        # no lexicon configured: semantic rows are skipped
        self.assertEqual(list(rows), ["baseline", "syn", "syn+lex"])
        self.assertLess(rows["baseline"]["accuracy"], 0.75)
        self.assertEqual(rows["syn"]["accuracy"], 1.0)
        self.assertEqual(rows["syn"]["significant_rules"], 2)
        self.assertEqual(rows["syn+lex"]["accuracy"], 1.0)


class TestCrossEval(unittest.TestCase):
    def test_matrix(self):
        with tempfile.TemporaryDirectory() as tmp:
            write_planted_treebank(tmp, "a.conllu", n_sentences=400, seed=1)
            write_planted_treebank(tmp, "b.conllu", n_sentences=400, seed=2)
            write_planted_treebank(
                tmp,
                "c.conllu",
                n_sentences=100,
                seed=3,
                relation="numeral-noun",
                dependent_upos="NUM",
            )
            config = CrossEvalConfig.from_dict(
                {
                    "task": "word-order",
                    "key": "adjective-noun",
                    "treebanks": {"a": "a.conllu", "b": "b.conllu", "c": "c.conllu"},
                },
                base_dir=Path(tmp),
            )
            with self.assertLogs("grammar_rules.pipeline", level="WARNING"):
                document = run_cross_eval(config)

        self.assertEqual(document["treebanks"], ["a", "b", "c"])
        self.assertEqual(document["features"], "syn")
        matrix = document["matrix"]
        self.assertEqual(matrix["a"], {"a": 1.0, "b": 1.0, "c": None})
        self.assertEqual(matrix["b"], {"a": 1.0, "b": 1.0, "c": None})
        # no adjective-noun pairs to train on
        self.assertIsNone(matrix["c"])


if __name__ == "__main__":
    unittest.main()
