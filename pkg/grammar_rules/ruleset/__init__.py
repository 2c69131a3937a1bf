from .stats import chi2_pvalue, chi2_sf, chi2_statistic, regularized_gamma_q
from .leaves import (
    CANNOT_DECIDE,
    DEFAULT_ALPHA,
    NullDistribution,
    chance_agreement,
    label_leaves,
    null_distribution,
)
from .rules import (
    ABSENT,
    AT_LEAST,
    BELOW,
    PRESENT,
    Condition,
    ExampleRef,
    Rule,
    extract_rules,
)
from .examples import DEFAULT_EXAMPLES_PER_RULE, attach_examples, select_examples
from .exceptions import EmptyDatasetError
