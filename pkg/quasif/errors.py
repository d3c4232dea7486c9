"""Domain and usage errors raised across the quasif package."""

from typing import Iterable, Tuple


class QuasiFError(ValueError):
    """Base class for every domain error; `name` is the structured error name."""

    @property
    def name(self) -> str:
        return type(self).__name__


class ConfigError(QuasiFError):
    pass


class ParseError(QuasiFError):
    pass


class OutOfRange(QuasiFError):
    pass


class NotSquareFree(QuasiFError):
    pass


class UnitIdeal(QuasiFError):
    pass


class DegreeOutOfRange(QuasiFError):
    pass


class ZeroIdeal(QuasiFError):
    def __init__(self, message: str = "the zero ideal has no generators"):
        super().__init__(message)


class UncoveredVertices(QuasiFError):
    """Some vertex of {1..n} lies in no facet (or no generator support)."""

    def __init__(self, vertices: Iterable[int], message: str = ""):
        self.vertices: Tuple[int, ...] = tuple(sorted(vertices))
        listed = ", ".join(str(v) for v in self.vertices)
        super().__init__(message or f"vertices not covered by any facet: {{{listed}}}")


class TooLarge(QuasiFError):
    pass


class DegreeOverflow(QuasiFError):
    pass


class DegreeUnderflow(QuasiFError):
    pass


class UnsupportedN(QuasiFError):
    pass


class SearchTooLarge(QuasiFError):
    pass


class NotEquigenerated(QuasiFError):
    pass


class WrongHeight(QuasiFError):
    pass


class NotQuasiDeg2(QuasiFError):
    pass


class InvalidA(QuasiFError):
    pass


class InvalidD(QuasiFError):
    pass


class InadmissibleType(QuasiFError):
    pass


class InternalVerificationFailure(QuasiFError):
    pass


class NegativeDegree(QuasiFError):
    pass


class FixtureMismatch(QuasiFError):
    pass


class UsageError(Exception):
    """Malformed command request; maps to exit code 2, not to a domain error."""
