from ..exceptions import GrammarRulesError


class ConlluParseError(GrammarRulesError):
    """Raised when a CoNLL-U row or sentence is malformed."""

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


class TreebankNotFoundError(GrammarRulesError, FileNotFoundError):
    """Raised when a treebank file cannot be opened."""

    pass


class SplitError(GrammarRulesError, ValueError):
    """Raised when a split name or split fractions are invalid."""

    pass
