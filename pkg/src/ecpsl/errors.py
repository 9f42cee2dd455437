"""Exception hierarchy shared by the algebra modules and the CLI."""


class EcpslError(Exception):
    """Base class for every error raised by this package."""


class LevelMismatch(EcpslError, ValueError):
    """Two tuples from different levels were combined directly."""


class PreconditionError(EcpslError, ValueError):
    """A witness finder was called outside the hypothesis of its axiom.

    ``clause`` names the failed hypothesis, e.g. ``"b1 skeletal"``.
    """

    def __init__(self, clause, message=None):
        self.clause = clause
        super().__init__(message or f"precondition failed: {clause}")


class LevelCapExceeded(EcpslError, RuntimeError):
    """A search through the tower ran past the configured level cap."""


class ConstructionError(EcpslError, RuntimeError):
    """An object the construction guarantees to exist was not found."""


class ClosureOverflow(EcpslError, RuntimeError):
    """Subalgebra closure grew past ``max_size``."""


class ParseError(EcpslError, ValueError):
    def __init__(self, message, text, pos):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")
