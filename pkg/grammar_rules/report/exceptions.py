from ..exceptions import ConfigurationError, GrammarRulesError


class UnknownFormatError(ConfigurationError):
    """Raised when an output format name is not supported."""

    pass


class ReportSchemaError(GrammarRulesError, ValueError):
    """Raised when a rules document does not match the expected schema."""

    pass
