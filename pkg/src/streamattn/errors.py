"""Exception types shared across the library.

Every error raised by this package derives from StreamAttnError so callers
can catch the whole family with one clause. The CLI maps these onto process
exit codes (see cli.EXIT_*).
"""


class StreamAttnError(Exception):
    """Base class for all library errors."""


class ShapeError(StreamAttnError, ValueError):
    """Operand dimensions are incompatible with the requested operation."""


class RangeError(StreamAttnError, ValueError):
    """A numeric value left the representable/finite range.

    Carries the flat index of the first offending element when known.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class DomainError(StreamAttnError, ValueError):
    """An input value is outside the mathematical domain of the operation."""


class StateError(StreamAttnError, RuntimeError):
    """A streaming state was used in a way its lifecycle forbids.

    Typical case: stepping a cold (not yet warmed) state in strict mode.
    """


class ConfigError(StreamAttnError, ValueError):
    """A model configuration violates a structural invariant."""


class FormatError(StreamAttnError, ValueError):
    """A file's framing or manifest is malformed (not a valid store/stream)."""


class DataError(StreamAttnError, ValueError):
    """File framing is fine but the payload values are unusable (NaN/Inf, width)."""


class MissingTensorError(StreamAttnError, KeyError):
    """A named tensor required by the configuration is absent from the store."""
