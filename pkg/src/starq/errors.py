"""Domain errors with stable machine-readable codes."""

from __future__ import annotations


class StarqError(Exception):
    """Base class for all domain errors; ``code`` is stable across releases."""

    code = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.__class__.__name__)


class ScalarParseError(StarqError):
    code = "parse_error"


class WeightParseError(StarqError):
    code = "parse_error"


class LengthMismatch(StarqError):
    code = "length_mismatch"


class FormalCoordinates(StarqError):
    code = "formal_coordinates"


class NotMaximal(StarqError):
    code = "not_maximal"


class StabilizerTooLarge(StarqError):
    code = "stabilizer_too_large"


class NotBounded(StarqError):
    code = "not_bounded"


class NoArrow(StarqError):
    code = "no_arrow"


class WrongType(StarqError):
    code = "wrong_type"


class BadShape(StarqError):
    code = "bad_shape"


class NotDominant(StarqError):
    code = "not_dominant"


class NotTypeOne(StarqError):
    code = "not_type_one"


class IntegralTwist(StarqError):
    code = "integral_twist"


class WindowTooSmall(StarqError):
    code = "window_too_small"
