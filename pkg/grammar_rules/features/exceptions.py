from ..exceptions import ConfigurationError, EmptyDataError, GrammarRulesError


class NoInstancesError(EmptyDataError):
    """Raised when a feature matrix is requested for a dataset without instances."""

    pass


class FeatureSelectionError(ConfigurationError):
    """Raised when the selected feature families are empty, unknown or unusable."""

    pass


class LexiconFormatError(GrammarRulesError):
    """Raised when a sparse-lexicon row is malformed."""

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")
