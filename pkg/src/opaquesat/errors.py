"""Exception and warning types shared across the toolkit."""


class OpaqueSatError(Exception):
    """Base class for all toolkit errors."""


class UnknownVariable(OpaqueSatError):
    """An assignment binds a variable that does not occur in the formula."""


class UnboundVariable(OpaqueSatError):
    """Evaluation reached an atom that the assignment does not bind."""


class TooManyVariables(OpaqueSatError):
    """Exhaustive enumeration was requested beyond the configured variable cap."""


class ParseError(OpaqueSatError):
    """Malformed input text.

    Carries a 1-based ``line`` and ``column`` when the format is line oriented.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class EmptyBackdoorSet(OpaqueSatError):
    """Backdoor operations require a nonempty variable set."""


class VariableNotInFormula(OpaqueSatError):
    """A supplied variable set is not contained in the formula's variables."""


class NotAStrongBackdoor(OpaqueSatError):
    """Backdoor guided solving hit a branch the subsolver rejects.

    The offending branch is available as ``failure``.
    """

    def __init__(self, failure):
        self.failure = failure
        super().__init__(f"subsolver rejects under {failure.failing_assignment!r}")


class InvalidBeta(OpaqueSatError):
    """A backbone fraction must be a rational strictly between 0 and 1."""


class ZeroVariableFormula(OpaqueSatError):
    """The padded family constructions require a base with at least one variable."""


class ReductionHookFailure(OpaqueSatError):
    """An external reduction hook failed or produced unusable output."""


class InvalidParameters(OpaqueSatError):
    """Generator parameters out of range."""


class DimacsWarning(UserWarning):
    """Non-fatal oddity found while reading DIMACS input."""


class HeaderMismatchWarning(DimacsWarning):
    """Declared variable or clause counts disagree with the file body."""


class DuplicateInputWarning(DimacsWarning):
    """Duplicate clauses or literals were collapsed by set semantics."""
