class GrammarRulesError(Exception):
    """Base class for every error raised by the grammar_rules package."""

    pass


class ConfigurationError(GrammarRulesError):
    """Raised when user-supplied settings are invalid (maps to exit code 2)."""

    pass


class EmptyDataError(GrammarRulesError):
    """Raised when a stage receives no data to work on (maps to exit code 3)."""

    pass


class ConfigError(ConfigurationError):
    """Raised when a run configuration fails validation; lists every problem found."""

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__(
            "Invalid configuration:\n" + "\n".join(f" - {err}" for err in self.errors)
        )
