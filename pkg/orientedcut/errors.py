"""Exception hierarchy for orientedcut."""


class OrcError(Exception):
    """Base class for every error raised by orientedcut."""


class ConstructionError(OrcError, ValueError):
    """A constructor received inputs that can never denote a valid value."""


class MalformedRealError(OrcError):
    """A lazily evaluated sequence broke its declared invariants."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PreconditionError(OrcError):
    """An operation precondition failed a spot check."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class UnsupportedOperationError(OrcError):
    """The operation needs data the value does not carry."""


class ConfigError(OrcError, ValueError):
    """An ORC_* environment variable or flag holds an invalid value."""


class ExpressionError(OrcError):
    """Base class for expression language errors."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset

    def __str__(self):
        text = super().__str__()
        if self.offset is None:
            return text
        return f"{text} at offset {self.offset}"


class ParseError(ExpressionError):
    """Syntax error with byte offset and the set of tokens that would fit."""

    def __init__(self, message, offset, expected=()):
        super().__init__(message, offset)
        self.expected = frozenset(expected)

    def __str__(self):
        text = super().__str__()
        if self.expected:
            text += " (expected " + ", ".join(sorted(self.expected)) + ")"
        return text


class ValidationError(ExpressionError):
    """Arity or type error found after parsing."""


class EvalError(ExpressionError):
    """A domain error raised while evaluating an expression."""

    def __init__(self, message, path=()):
        super().__init__(message)
        self.path = tuple(path)

    def __str__(self):
        where = "/".join(self.path)
        text = Exception.__str__(self)
        return f"{where}: {text}" if where else text


class CommandError(OrcError):
    """Unknown session command or wrong arguments."""
