from ..exceptions import GrammarRulesError


class BadTagException(GrammarRulesError):
    """Raised when a template tag has a bad format."""

    pass


class MissingDataException(GrammarRulesError):
    """Raised when a template tag's value can't be found."""

    pass


class EmptyDataException(GrammarRulesError):
    """Raised when a processed value is required but results in None/empty string."""

    pass


class BadTemplateModeError(GrammarRulesError):
    """Raised when an invalid mode is passed to process_text."""

    pass
