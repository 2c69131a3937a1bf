"""
Chi-squared goodness-of-fit test against a null distribution.

The upper tail of the chi-squared distribution is Q(df/2, stat/2), the regularized upper
incomplete gamma function, evaluated by its power series when x < a + 1 and by a
continued fraction otherwise.
"""

import math
from typing import Sequence

import numpy as np

MAX_ITERATIONS = 500
EPSILON = 1e-15
# Smallest magnitude allowed in the continued fraction (avoids division by zero).
TINY = 1e-300


def regularized_gamma_q(a: float, x: float) -> float:
    """Q(a, x) = Gamma(a, x) / Gamma(a) for a > 0, x >= 0."""
    if a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    if x == 0:
        return 1.0
    if x < a + 1:
        return min(1.0, max(0.0, 1.0 - _gamma_p_series(a, x)))
    return min(1.0, max(0.0, _gamma_q_continued_fraction(a, x)))


def _log_prefactor(a: float, x: float) -> float:
    return -x + a * math.log(x) - math.lgamma(a)


def _gamma_p_series(a: float, x: float) -> float:
    term = total = 1.0 / a
    denominator = a
    for _ in range(MAX_ITERATIONS):
        denominator += 1.0
        term *= x / denominator
        total += term
        if abs(term) < abs(total) * EPSILON:
            break
    return total * math.exp(_log_prefactor(a, x))


def _gamma_q_continued_fraction(a: float, x: float) -> float:
    # Modified Lentz evaluation
    b = x + 1.0 - a
    c = 1.0 / TINY
    d = 1.0 / b
    h = d
    for i in range(1, MAX_ITERATIONS):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < TINY:
            d = TINY
        c = b + an / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPSILON:
            break
    return math.exp(_log_prefactor(a, x)) * h


def chi2_sf(statistic: float, df: int) -> float:
    """Upper-tail probability of the chi-squared distribution; df = 0 gives 1."""
    if df <= 0:
        return 1.0
    if statistic <= 0:
        return 1.0
    return regularized_gamma_q(df / 2.0, statistic / 2.0)


def chi2_statistic(
    observed: Sequence[float], expected: Sequence[float]
) -> tuple[float, int]:
    """
    Pearson statistic and degrees of freedom.

    Args:
      observed: Per-label counts.
      expected: Per-label null probabilities, aligned with `observed`. Labels with zero
        expected probability are left out of both the statistic and the df.
    """
    observed = np.asarray(observed, dtype=float)
    expected = np.asarray(expected, dtype=float)
    n = observed.sum()
    used = expected > 0
    df = int(used.sum()) - 1
    if n <= 0 or df <= 0:
        return 0.0, max(df, 0)
    expected_counts = n * expected[used]
    deviations = np.square(observed[used] - expected_counts) / expected_counts
    statistic = float(np.sum(deviations))
    return statistic, df


def chi2_pvalue(observed: Sequence[float], expected: Sequence[float]) -> float:
    """p-value of observed counts under the null; 1 for an empty leaf or df = 0."""
    statistic, df = chi2_statistic(observed, expected)
    return chi2_sf(statistic, df)
