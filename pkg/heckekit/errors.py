"""Exception hierarchy shared by every heckekit module.

Input problems derive from ``ValueError`` so callers that only care about
"bad argument" can keep catching the builtin.
"""


class HeckekitError(Exception):
    """Base class for all heckekit errors."""


class InvalidInput(HeckekitError, ValueError):
    """An argument is outside the domain of the operation."""


class SizeMismatch(InvalidInput):
    """Two operands live in different symmetric groups (or arities)."""


class InvalidDiagram(InvalidInput):
    """A tangle word is malformed: bad position or negative running arity."""


class NonDivisible(HeckekitError, ArithmeticError):
    """Exact division of Laurent polynomials has a nonzero remainder."""


class InvariantViolation(HeckekitError, AssertionError):
    """An identity that must hold exactly did not.

    Carries an optional ``witness`` describing the failing instance.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SingularPairing(InvariantViolation):
    """The trace pairing matrix has no unit pivot in some column."""
