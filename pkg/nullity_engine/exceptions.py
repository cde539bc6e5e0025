"""
Exceptions raised by the nullity engine.
"""


class NullityEngineError(Exception):
    """Base class for every error raised by the engine."""


class ParameterDomainError(NullityEngineError, ValueError):
    """
    A parameter lies outside the domain where a construction or formula is defined.

    Args:
        constraint (str): The violated constraint, e.g. ``'0 < alpha < 1/2'``
        message (str, optional): Extra detail appended to the constraint
    """

    def __init__(self, constraint, message=None):
        self.constraint = constraint
        text = f"constraint violated: {constraint}"
        if message:
            text = f"{text} ({message})"
        super().__init__(text)


class PrecisionError(NullityEngineError):
    """A value cannot be materialized at the configured precision or depth."""


class HypothesisError(NullityEngineError, ValueError):
    """The hypotheses of a criterion do not hold for the given input."""


class ConfigurationError(NullityEngineError, ValueError):
    """An experiment configuration is malformed or inconsistent."""


class ConvergenceError(NullityEngineError):
    """A numerical solve needed by a derived quantity did not converge."""
