from ..exceptions import EmptyDataError


class EmptyDatasetError(EmptyDataError):
    """Raised when a null distribution is requested for an empty training dataset."""

    pass
