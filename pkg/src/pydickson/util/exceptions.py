class DicksonError(Exception):
    """
    Base pydickson Exception.
    """

    pass


class NonPrime(DicksonError, ValueError):
    """
    Characteristic is not prime, or order is not a prime power.
    """

    pass


class BoundExceeded(DicksonError, ValueError):
    """
    Field order above the configured bound.
    """

    pass


class ContextMismatch(DicksonError, ValueError):
    """
    Element does not belong to the field context it is used with.
    """

    pass


class DivisionByZero(DicksonError, ZeroDivisionError):
    """
    Inversion of zero or division by the zero polynomial.
    """

    pass


class NegativeInput(DicksonError, ValueError):
    """
    Negative integer where a non-negative one is required.
    """

    pass


class RangeError(DicksonError, ValueError):
    """
    Index outside the range where the operation is defined.
    """

    pass


class EvenCharacteristic(DicksonError, ValueError):
    """
    Operation needs an odd characteristic.
    """

    pass


class WrongParity(DicksonError, ValueError):
    """
    Closed form called for a field order of the other parity.
    """

    pass


class OutOfWindow(DicksonError, ValueError):
    """
    u+v outside the windows covered by the specialized formulas.
    """

    pass


class InexactDivision(DicksonError):
    """
    Polynomial division left a nonzero remainder.
    """

    pass


class ResultNotInBaseField(DicksonError):
    """
    Evaluation in the quadratic extension did not land in F_q.
    """

    pass


class FieldConstructionError(DicksonError):
    """
    Constructed field failed its consistency checks.
    """

    pass
