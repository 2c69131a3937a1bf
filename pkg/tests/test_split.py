import math
import random
import unittest

import numpy as np

from grammar_rules.dtree import ENTROPY, GAIN_TOLERANCE, GINI, best_split
from grammar_rules.features import BINARY, NUMERIC, FeatureSpace

from tests.utils import matrix_from_rows, numeric_space, random_binary_matrix


def gini(counts):
    n = sum(counts)
    return 1.0 - sum((c / n) ** 2 for c in counts) if n else 0.0


def entropy(counts):
    n = sum(counts)
    return -sum(c / n * math.log2(c / n) for c in counts if c) if n else 0.0


IMPURITY = {GINI: gini, ENTROPY: entropy}


def mixed_space(kinds):
    names = tuple(f"m{i:02d}" for i in range(len(kinds)))
    return FeatureSpace(names=names, kinds=tuple(kinds), display=names)


def brute_force_split(matrix, min_leaf, criterion=GINI):
    """Exhaustive search: lowest feature, then lowest threshold, among the best."""
    measure = IMPURITY[criterion]
    X = matrix.X.toarray()
    y = matrix.y
    n_labels = len(matrix.labels)
    parent = [int((y == k).sum()) for k in range(n_labels)]
    parent_impurity = measure(parent)
    if parent_impurity <= GAIN_TOLERANCE:
        return None

    candidates = []
    for feature in range(X.shape[1]):
        values = X[:, feature]
        if matrix.space.is_binary(feature):
            tests = [(None, values != 0)]
        else:
            distinct = sorted(set(values.tolist()))
            tests = [
                ((a + b) / 2.0, values >= (a + b) / 2.0)
                for a, b in zip(distinct, distinct[1:])
            ]
        for threshold, passed in tests:
            right = [int(((y == k) & passed).sum()) for k in range(n_labels)]
            left = [p - r for p, r in zip(parent, right)]
            if sum(left) < min_leaf or sum(right) < min_leaf:
                continue
            weighted = (
                sum(left) * measure(left) + sum(right) * measure(right)
            ) / len(y)
            candidates.append((parent_impurity - weighted, feature, threshold))

    if not candidates:
        return None
    best = max(c[0] for c in candidates)
    if best <= GAIN_TOLERANCE:
        return None
    tied = [c for c in candidates if c[0] >= best - GAIN_TOLERANCE]
    return min(tied, key=lambda c: (c[1], -np.inf if c[2] is None else c[2]))


class TestBestSplit(unittest.TestCase):
    def test_perfect_binary_split(self):
        matrix = matrix_from_rows([{1: 1.0}, {1: 1.0}, {0: 1.0}, {}], [1, 1, 0, 0])
        split = best_split(matrix)
        self.assertEqual(split.feature, 1)
        self.assertIsNone(split.threshold)
        self.assertAlmostEqual(split.decrease, 0.5)

    def test_pure_node_has_no_split(self):
        matrix = matrix_from_rows([{0: 1.0}, {}], [1, 1])
        self.assertIsNone(best_split(matrix))

    def test_no_gain_has_no_split(self):
        # label is the XOR of both features: no single test helps
        matrix = matrix_from_rows(
            [{}, {0: 1.0}, {1: 1.0}, {0: 1.0, 1: 1.0}], [0, 1, 1, 0]
        )
        self.assertIsNone(best_split(matrix))

    def test_ties_go_to_the_lowest_feature(self):
        rows = [{0: 1.0, 2: 1.0}, {0: 1.0, 2: 1.0}, {}, {}]
        matrix = matrix_from_rows(rows, [1, 1, 0, 0])
        self.assertEqual(best_split(matrix).feature, 0)

    def test_min_leaf(self):
        matrix = matrix_from_rows([{0: 1.0}, {}, {}, {}], [1, 0, 0, 0])
        self.assertEqual(best_split(matrix, min_leaf=1).feature, 0)
        self.assertIsNone(best_split(matrix, min_leaf=2))

    def test_rows_subset(self):
        matrix = matrix_from_rows([{0: 1.0}, {}, {1: 1.0}, {}], [1, 0, 1, 0])
        self.assertEqual(best_split(matrix, rows=np.array([2, 3])).feature, 1)

    def test_numeric_threshold_is_a_midpoint(self):
        space = numeric_space(1)
        matrix = matrix_from_rows(
            [{0: 1.0}, {0: 2.0}, {0: 4.0}, {0: 6.0}], [0, 0, 1, 1], space=space
        )
        split = best_split(matrix, criterion=ENTROPY)
        self.assertEqual(split.feature, 0)
        self.assertEqual(split.threshold, 3.0)
        self.assertAlmostEqual(split.decrease, 1.0)
        self.assertEqual(split.passes(np.array([2.99, 3.0])).tolist(), [False, True])

    def test_matches_brute_force_on_random_binary_data(self):
        rng = random.Random(1234)
        for _ in range(200):
            matrix = random_binary_matrix(
                rng, rng.randint(2, 25), rng.randint(1, 6), rng.randint(2, 3)
            )
            min_leaf = rng.choice([1, 1, 2, 3])
            expected = brute_force_split(matrix, min_leaf)
            split = best_split(matrix, criterion=GINI, min_leaf=min_leaf)
            if expected is None:
                self.assertIsNone(split)
                continue
            self.assertEqual(split.feature, expected[1])
            self.assertIsNone(split.threshold)
            self.assertAlmostEqual(split.decrease, expected[0])

    def test_matches_brute_force_on_random_numeric_data(self):
        rng = random.Random(99)
        for _ in range(100):
            n_rows, n_features = rng.randint(2, 20), rng.randint(1, 4)
            rows = [
                {
                    j: float(rng.randint(1, 4))
                    for j in range(n_features)
                    if rng.random() < 0.7
                }
                for _ in range(n_rows)
            ]
            y = [rng.randrange(2) for _ in range(n_rows)]
            matrix = matrix_from_rows(rows, y, space=numeric_space(n_features))
            expected = brute_force_split(matrix, 1)
            split = best_split(matrix)
            if expected is None:
                self.assertIsNone(split)
                continue
            self.assertEqual(split.feature, expected[1])
            self.assertAlmostEqual(split.threshold, expected[2])

    def test_matches_brute_force_on_mixed_data_under_both_criteria(self):
        rng = random.Random(2024)
        for criterion in (GINI, ENTROPY):
            for _ in range(200):
                n_rows, n_features = rng.randint(2, 16), rng.randint(1, 5)
                kinds = [rng.choice([BINARY, NUMERIC]) for _ in range(n_features)]
                rows = [
                    {
                        j: 1.0 if kind == BINARY else float(rng.randint(1, 5))
                        for j, kind in enumerate(kinds)
                        if rng.random() < 0.6
                    }
                    for _ in range(n_rows)
                ]
                n_labels = rng.randint(2, 3)
                y = [rng.randrange(n_labels) for _ in range(n_rows)]
                matrix = matrix_from_rows(
                    rows, y, tuple("abc"[:n_labels]), space=mixed_space(kinds)
                )
                min_leaf = rng.choice([1, 1, 2])

                expected = brute_force_split(matrix, min_leaf, criterion)
                split = best_split(matrix, criterion=criterion, min_leaf=min_leaf)
                if expected is None:
                    self.assertIsNone(split)
                    continue
                decrease, feature, threshold = expected
                self.assertEqual(split.feature, feature)
                self.assertEqual(split.threshold, threshold)
                self.assertAlmostEqual(split.decrease, decrease, delta=1e-12)
