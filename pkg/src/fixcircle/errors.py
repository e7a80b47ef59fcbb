"""Exception types shared across the package.

Contraction verdicts are data, not errors; these are raised only for
malformed input or calls outside an operation's domain.
"""


class FixCircleError(Exception):
    """Base class for all package errors."""


class SchemaError(FixCircleError, ValueError):
    """Malformed space, map or instance document."""


class MetricAxiomError(FixCircleError, ValueError):
    """A distance matrix violates one of the metric axioms."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class DomainError(FixCircleError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class RangeError(FixCircleError, ValueError):
    """Evaluation requested outside the hull of a sampled function."""


class ParameterError(FixCircleError, ValueError):
    """Missing or inconsistent parameter for an operation."""
