"""Exception types shared across the package."""


class Ideals3Error(Exception):
    """Base class for all package-specific errors."""


class ParseError(Ideals3Error):
    """Malformed input document, scalar literal, or CLI argument."""


class InvalidParameters(Ideals3Error):
    """A family constructor or descriptor received out-of-contract values."""


class DegreeTooLarge(Ideals3Error):
    """A polynomial exceeded the degree cap of the factoring routines."""


class DegenerateInput(Ideals3Error):
    """An operation received input outside its stated preconditions."""


class DependentVectors(Ideals3Error):
    """Two vectors expected to span a plane are linearly dependent."""


class NotAnIdeal(Ideals3Error):
    """A subspace passed where a verified ideal is required."""


class InconsistencyDetected(Ideals3Error):
    """An internal cross-check failed.

    Raised when two independent routes to the same fact disagree (solver
    output vs. structural diagnostics, enumeration vs. annihilator dimension,
    a solution locus with a shape the classification theorems exclude).
    This is deliberately loud: it marks either a bug or a violated invariant,
    never a recoverable condition.
    """


class BoundViolation(InconsistencyDetected):
    """An enumeration exceeded a proven cardinality bound."""


class IncompatibleExtensions(Ideals3Error):
    """Arithmetic was requested between unrelated algebraic extensions."""
