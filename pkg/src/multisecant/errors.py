"""Exception hierarchy shared by all modules.

Every computational error raised by this package derives from
:class:`MultisecantError`, so callers (in particular the CLI) can map
library failures to exit codes without catching bare ``Exception``.
"""


class MultisecantError(Exception):
    """Base class for all errors raised by this package."""


class AmbientMismatchError(MultisecantError):
    """Operands live over projective spaces of different dimension."""


class NonUnitError(MultisecantError):
    """Inversion of a class whose degree-0 part vanishes."""


class HypothesisError(MultisecantError):
    """A numeric precondition of an operation is not met."""


class ParseError(MultisecantError):
    """Syntax or shape error in a bundle expression.

    ``position`` is the 0-based offset into the source string.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
