import math
import unittest

import numpy as np

from grammar_rules.dtree import ENTROPY, GINI, EmptyNodeError, impurity, row_impurity


class TestImpurity(unittest.TestCase):
    def test_gini(self):
        self.assertAlmostEqual(impurity([5, 5], GINI), 0.5)
        self.assertAlmostEqual(impurity([1, 1, 1, 1], GINI), 0.75)
        self.assertEqual(impurity([7, 0], GINI), 0.0)

    def test_entropy_in_bits(self):
        self.assertAlmostEqual(impurity([5, 5], ENTROPY), 1.0)
        self.assertAlmostEqual(impurity([1, 1, 1, 1], ENTROPY), 2.0)
        self.assertAlmostEqual(
            impurity([1, 3], ENTROPY), -(0.25 * math.log2(0.25) + 0.75 * math.log2(0.75))
        )
        self.assertEqual(impurity([0, 9], ENTROPY), 0.0)

    def test_empty_node(self):
        with self.assertRaises(EmptyNodeError):
            impurity([0, 0])
        # EmptyNodeError is also a ValueError
        with self.assertRaises(ValueError):
            impurity([])

    def test_row_impurity_matches_scalar(self):
        counts = np.array([[3, 1], [0, 0], [2, 2], [0, 5]], dtype=float)
        for criterion in (GINI, ENTROPY):
            values = row_impurity(counts, criterion)
            self.assertEqual(values[1], 0.0)
            for i in (0, 2, 3):
                self.assertAlmostEqual(values[i], impurity(counts[i], criterion))
            self.assertTrue(np.all(values >= 0))

    def test_unknown_criterion(self):
        with self.assertRaises(ValueError):
            row_impurity(np.array([[1.0, 1.0]]), "misclassification")
