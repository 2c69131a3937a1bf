from ..exceptions import ConfigurationError, EmptyDataError, GrammarRulesError


class EmptyNodeError(GrammarRulesError, ValueError):
    """Raised when impurity is requested for a node without instances."""

    pass


class EmptyTrainingSetError(EmptyDataError):
    """Raised when a tree is grown from a matrix without labeled rows."""

    pass


class GridSearchError(EmptyDataError):
    """Raised when the hyperparameter grid or the validation set is empty."""

    pass


class InvalidTrainParamsError(ConfigurationError):
    """Raised when a criterion, depth or leaf size is out of range."""

    pass
