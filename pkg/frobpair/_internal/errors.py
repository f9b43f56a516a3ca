from __future__ import annotations


class FrobPairError(Exception):
    """base class for all errors raised by frobpair"""


class UserError(FrobPairError):
    """probably your fault"""


class ParseError(UserError):
    """a polynomial expression could not be parsed"""

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position}:\n  {text}\n  {' ' * position}^")
        self.text = text
        self.position = position


class ContextMismatchError(UserError):
    """the operands live in different polynomial rings"""


class NotPrimeError(UserError):
    def __init__(self, p: int) -> None:
        super().__init__(f"{p} is not a prime")
        self.p = p


class SingularMatrixError(UserError):
    """a linear change of coordinates has to be invertible"""


class NotSquarefreeError(UserError):
    """the curve y^2 = h(x) would be singular"""


class ResourceLimitError(FrobPairError):
    """the computation was refused because it would blow past a hard limit"""


class ExponentOverflowError(ResourceLimitError):
    def __init__(self, exponent: int, e: int | None = None) -> None:
        message = f"monomial exponent {exponent} does not fit in 32 bits"
        if e is not None:
            message += f" (while testing e={e})"
        super().__init__(message)
        self.exponent = exponent
        self.e = e

    def at_level(self, e: int) -> ExponentOverflowError:
        """the same error, tagged with the level being tested when it happened"""
        return ExponentOverflowError(self.exponent, e)


class TermLimitError(ResourceLimitError):
    def __init__(self, terms: int, limit: int) -> None:
        super().__init__(
            f"an intermediate polynomial reached {terms} terms, over the limit of {limit}"
            " (set FROBPAIR_MAX_TERMS to raise it)"
        )
        self.terms = terms
        self.limit = limit


class InternalError(FrobPairError):
    """probably my fault"""

    def __init__(self, message: str) -> None:
        super().__init__(
            "something went wrong inside frobpair. please raise an issue with the"
            f" following information:\n\n{message}"
        )
