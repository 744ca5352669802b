"""Exception hierarchy and the CLI/service exit-code contract."""


class SigmaHullError(Exception):
    """Base class for all domain errors."""


class DivisionByZero(SigmaHullError, ZeroDivisionError):
    """Division by the zero field element."""


class FieldMismatch(SigmaHullError):
    """Operands belong to different fields."""


class InvalidExponent(SigmaHullError):
    """Frobenius exponent outside 1..e."""


class ZeroCode(SigmaHullError):
    """A zero-dimensional code where k >= 1 is required."""


class TooLarge(SigmaHullError):
    """Enumeration exceeds the configured budget."""


class Incompatible(SigmaHullError):
    """Length, size or field of the operands do not match."""


class FormulaMismatch(SigmaHullError):
    """Two formulas that must agree did not; signals an implementation bug."""


class DegenerateDefiningMatrix(SigmaHullError):
    """Defining matrix of a matrix-product code is not full row rank."""


class NotSquare(SigmaHullError):
    """Square defining matrix required."""


class PreconditionFailed(SigmaHullError):
    """Hypothesis required by the invoked construction does not hold."""


class FieldTooSmall(SigmaHullError):
    """Operation requires q > 2."""


class TargetOutOfRange(SigmaHullError):
    """Requested hull dimension outside the admissible interval."""


class SearchExhausted(SigmaHullError):
    """Search budget spent without a verified witness (not a nonexistence proof)."""

    def __init__(self, message: str, trials: int = 0):
        super().__init__(message)
        self.trials = trials


class NotMds(SigmaHullError):
    """Input code is not MDS."""


class ParseError(SigmaHullError):
    """Malformed input file or JSON document."""


# Exit codes: 0 pass, 1 counterexample / unverified result, 2 parse,
# 3 incompatible inputs, 4 hypothesis violation.
EXIT_CODES = {
    ParseError: 2,
    ZeroCode: 2,
    DegenerateDefiningMatrix: 2,
    Incompatible: 3,
    FieldMismatch: 3,
    NotSquare: 3,
    DivisionByZero: 3,
    InvalidExponent: 3,
    FieldTooSmall: 4,
    NotMds: 4,
    PreconditionFailed: 4,
    TargetOutOfRange: 4,
    TooLarge: 4,
    SearchExhausted: 1,
    FormulaMismatch: 1,
}


def exit_code_for(exc: BaseException) -> int:
    for cls in type(exc).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return 1
