"""Exception hierarchy.

Everything raised deliberately by the library derives from ``WPSError`` so the
CLI can map input problems to exit code 2 and internal inconsistencies to 3.
"""


class WPSError(Exception):
    """Base class for library errors."""


class InputError(WPSError, ValueError):
    """The caller supplied something outside an operation's domain."""


class NotPrime(InputError):
    pass


class NotPrimePower(InputError):
    pass


class FieldTooLarge(InputError):
    pass


class ZeroElement(InputError):
    pass


class OrderUndefined(InputError):
    """``ord_d(q)`` requested with ``gcd(q, d) > 1``."""


class DimensionTooLarge(InputError):
    pass


class EmptySupport(InputError):
    pass


class HypothesisViolated(InputError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class CoprimalityViolated(InputError):
    pass


class PolynomialError(InputError):
    pass


class PolynomialSyntaxError(PolynomialError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotHomogeneous(PolynomialError):
    def __init__(self, first, second):
        super().__init__(f"monomials have weighted degrees {first} and {second}")
        self.degrees = (first, second)


class ZeroPolynomial(PolynomialError):
    pass


class ConsistencyError(WPSError, ArithmeticError):
    """Two routes that must agree exactly did not (or a division was inexact)."""
