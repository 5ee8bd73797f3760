"""Exception hierarchy shared by the library and the command line."""

INT64_MAX = (1 << 63) - 1
INT64_MIN = -(1 << 63)


class SemigroupError(ValueError):
    """Base class for invalid input to a semigroup computation."""


class EmptyGenerators(SemigroupError):
    pass


class NonPositiveGenerator(SemigroupError):
    pass


class GcdNotOne(SemigroupError):
    """The generators have a common divisor, so the complement is infinite."""


class NotAMember(SemigroupError):
    pass


class IsAllOfN(SemigroupError):
    """Raised for questions that have no answer when S is the whole of N."""


class NotSorted(SemigroupError):
    pass


class NotBasic(SemigroupError):
    pass


class WrongEmbeddingDimension(SemigroupError):
    pass


class Overflow(SemigroupError, OverflowError):
    """A value left the signed 64-bit range."""


def check_int64(value: int, what: str = "value") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise Overflow(f"{what} = {value} does not fit in a signed 64-bit integer")
    return value
