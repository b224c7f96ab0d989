"""Exception types shared across the engine.

Everything derives from :class:`NoiseLogicError`; most also subclass
``ValueError`` so generic callers can catch them without importing this
module.
"""


class NoiseLogicError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(NoiseLogicError, ValueError):
    """A bit count or clock count is outside its valid range."""


class LengthMismatchError(NoiseLogicError, ValueError):
    """Two traces that must share a clock count do not."""


class WidthMismatchError(NoiseLogicError, ValueError):
    """Two bit-width-carrying values that must agree do not."""


class TargetIndexError(NoiseLogicError, ValueError):
    """A noise-bit index is outside {1..M}."""


class ScaleExceededError(NoiseLogicError, ValueError):
    """An exhaustive operation was requested beyond its enumeration cap."""


class DecodeError(NoiseLogicError):
    """Base class for trace-decoding failures."""


class NoMatchError(DecodeError):
    """The trace is not any pure product state of the reference system."""


class AmbiguousDecodeError(DecodeError):
    """More than one product state matches the trace (window too short)."""

    def __init__(self, message: str, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class SuperpositionDecodeError(DecodeError):
    """The trace could not be verified as an integer combination of basis
    vectors; near-matches are refused rather than silently accepted."""


class TraceParseError(NoiseLogicError, ValueError):
    """A serialized trace file or string could not be parsed."""


class OracleMismatchError(NoiseLogicError):
    """The numeric engine output disagrees with the symbolic prediction."""
