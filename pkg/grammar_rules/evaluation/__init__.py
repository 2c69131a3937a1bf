from .metrics import (
    DEFAULT_TAU,
    ENTROPY_BOUND,
    accuracy,
    arm,
    baseline_accuracy,
    frequency_baseline,
    prediction_entropy,
    resource_setting,
    verdict_entropy,
)
from .report import EvalReport, cross_eval, evaluate
from .exceptions import EmptyEvaluationSetError, EvaluationError
