"""Exception hierarchy shared by every srforge module."""


class SrforgeError(Exception):
    """Base class for all library errors."""


# field
class NonPrimeP(SrforgeError, ValueError):
    pass


class ReducibleModulus(SrforgeError, ValueError):
    pass


class NonMonicModulus(SrforgeError, ValueError):
    pass


class ContextMismatch(SrforgeError, TypeError):
    """Operands belong to different fields."""


class DivisionByZero(SrforgeError, ZeroDivisionError):
    pass


class ZeroElement(SrforgeError, ValueError):
    pass


class FieldTooLarge(SrforgeError, ValueError):
    pass


class IndexOutOfRange(SrforgeError, IndexError):
    pass


# linalg
class NonSquare(SrforgeError, ValueError):
    pass


class SingularA(SrforgeError, ValueError):
    pass


class DimensionMismatch(SrforgeError, ValueError):
    pass


class RowMismatch(SrforgeError, ValueError):
    pass


# companion
class NotPrimitive(SrforgeError, ValueError):
    pass


class NotInSpan(SrforgeError, ValueError):
    def __init__(self, message, block=None):
        super().__init__(message)
        self.block = block


# verify
class NotBlockAligned(SrforgeError, ValueError):
    pass


class SizeTooLarge(SrforgeError, ValueError):
    pass


# construct
class NotSuperregular(SrforgeError, ValueError):
    def __init__(self, message, index=None, report=None):
        super().__init__(message)
        self.index = index
        self.report = report


class SingularB(SrforgeError, ValueError):
    pass


class SingularFactor(SrforgeError, ValueError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class BadGeneratorExponent(SrforgeError, ValueError):
    pass


class MalformedBase(SrforgeError, ValueError):
    pass


class BadCoefficientRange(SrforgeError, ValueError):
    pass


class ConstraintViolated(SrforgeError, ValueError):
    def __init__(self, message, failed=()):
        super().__init__(message)
        self.failed = tuple(failed)
