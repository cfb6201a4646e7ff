class StructureError(ValueError):
    """Raised when an input does not satisfy the axioms of its declared structure.

    ``witness`` holds the offending elements (a pair, a triple, ...) when one
    can be named.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CriterionDisagreement(AssertionError):
    """Two routes that must agree (an implementation and its oracle) did not."""
