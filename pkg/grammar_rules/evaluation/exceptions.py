from ..exceptions import EmptyDataError, GrammarRulesError


class EvaluationError(GrammarRulesError):
    """Raised when a metric is requested for a task or tree it does not apply to."""

    pass


class EmptyEvaluationSetError(EvaluationError, EmptyDataError):
    """Raised when a metric or baseline is computed over no instances."""

    pass
