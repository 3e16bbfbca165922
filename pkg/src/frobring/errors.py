"""Exception types shared across the package."""


class InvalidParameter(ValueError):
    """An argument violates a documented precondition."""


class InvalidRing(ValueError):
    """Supplied Cayley tables fail a ring axiom.

    The offending triple (or pair) of element indices, when known, is
    stored in ``witness``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimit(RuntimeError):
    """A requested construction or computation exceeds the size guard."""


class InternalInconsistency(RuntimeError):
    """Two routes that must agree produced different results.

    Raised when a cross-check that is supposed to be a mathematical
    identity fails; this always indicates a bug, never bad input.
    """


class CharacterSearchFailed(RuntimeError):
    """No generating character exists or the search space was exhausted."""
