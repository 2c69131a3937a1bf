from ..exceptions import ConfigurationError


class TaskConfigurationError(ConfigurationError):
    """Raised when a task, task key or relation override is not supported."""

    pass
