# exceptions.py


class GorbitError(Exception):
    """Base class for every error raised by the library."""


# --- Caller errors (CLI exit 2, HTTP 422) ---
class ValidationError(GorbitError):
    """The input violates a documented precondition."""


class RankDeficient(ValidationError):
    pass


class NotAdmissible(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class NotMainStratum(ValidationError):
    pass


class DegenerateTriple(ValidationError):
    pass


class CenterWithoutDirection(ValidationError):
    pass


class OutsideOpenHypersimplex(ValidationError):
    pass


class Unsupported(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class UsageError(ValidationError):
    pass


# --- Broken invariants (CLI exit 3, HTTP 500) ---
class InternalAssertion(GorbitError):
    """A library invariant failed; this is a bug, not bad input."""


class Unclassifiable(InternalAssertion):
    pass


class BoundaryNotSquareZero(InternalAssertion):
    pass


class InexactSequence(InternalAssertion):
    pass


class AmbiguousExtension(InternalAssertion):
    pass
