"""Exception types shared across the package."""


class InvwordError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(InvwordError):
    """Input text or JSON could not be parsed."""


class BudgetExceeded(InvwordError):
    """A bounded search or closure outgrew its resource cap."""


class UnknownVertex(InvwordError):
    """A word uses a generator that is not a vertex of the graph."""


class NotSpecialPresentation(InvwordError):
    """An operation requires every relation to have the form r = 1."""


class StableLetterClash(InvwordError):
    """The stable letter collides with a base-alphabet generator."""


class NotConstructionShape(InvwordError):
    """A presentation does not have the compiled idempotent-prefix shape."""


class OracleMissing(InvwordError):
    """No triviality oracle is available for the requested group."""
