"""Exception types raised across the package."""


class SkewCodesError(Exception):
    """Base class for all errors raised by skewcodes."""


class FieldError(SkewCodesError, ValueError):
    """Invalid field parameters or a malformed element encoding."""


class ContextMismatchError(SkewCodesError, ValueError):
    """Operands live over different fields, automorphisms or moduli."""


class NotMonicError(SkewCodesError, ValueError):
    pass


class BudgetExceededError(SkewCodesError, RuntimeError):
    """An exhaustive search would examine more candidates than allowed."""


class PowerAssociativityError(SkewCodesError, ArithmeticError):
    """A monomial is not power-associative, so its powers are ambiguous.

    Attributes
    ----------
    r : int
        The least exponent with ``r*k >= m``; ``z^r z`` and ``z z^r`` differ.
    left, right : tuple
        Coefficients of ``z^r z`` and ``z z^r`` respectively.
    """

    def __init__(self, message, r=None, left=None, right=None):
        super().__init__(message)
        self.r = r
        self.left = left
        self.right = right


class HypothesisError(SkewCodesError, ValueError):
    """Inputs violate the hypothesis an identity or theorem check needs."""
