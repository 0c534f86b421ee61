"""Exception hierarchy. Every error raised by the library carries a short ``code``."""


class AlgebraError(ValueError):
    code = "algebra-error"


class DuplicateLetterError(AlgebraError):
    code = "duplicate-letter-name"


class NonpositiveDegreeError(AlgebraError):
    code = "nonpositive-degree"


class PairingConflictError(AlgebraError):
    code = "pairing-conflict"


class UnknownLetterError(AlgebraError):
    code = "unknown-letter"


class AlphabetMismatchError(AlgebraError):
    code = "alphabet-mismatch"


class UnitLetterError(AlgebraError):
    code = "unit-letter"


class EmptyWordError(AlgebraError):
    code = "empty-word-operand"


class ZeroLambdaError(AlgebraError):
    code = "zero-lambda-inverse"


class ZeroEntryError(AlgebraError):
    code = "zero-entry-in-I"


class EmptyInputError(AlgebraError):
    code = "empty-input"


class ParseError(AlgebraError):
    """Syntax error with a 1-based source position."""

    code = "syntax-error"

    def __init__(self, message, line=1, column=1, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)


class UnknownFunctionError(ParseError):
    code = "unknown-function"


class EvaluationError(AlgebraError):
    code = "type-error"


class ConfigError(AlgebraError):
    code = "config-error"
