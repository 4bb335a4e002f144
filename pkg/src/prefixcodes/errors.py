"""Exception types shared across the library."""


class PrefixCodeError(Exception):
    """Base class for all library errors."""


class ParseError(PrefixCodeError):
    """Malformed input while ingesting a symbol stream."""

    def __init__(self, message, byte_offset=None):
        if byte_offset is not None:
            message = f"{message} (byte offset {byte_offset})"
        super().__init__(message)
        self.byte_offset = byte_offset


class EmptyInputError(PrefixCodeError):
    """The input stream contained no symbols."""


class TruncatedStreamError(PrefixCodeError):
    """A read ran past the end of the bit stream."""


class CorruptStreamError(PrefixCodeError):
    """The bit stream does not decode under the given code."""


class InfeasibleLengthsError(PrefixCodeError):
    """A length vector violates the Kraft inequality, or the requested
    maximum length cannot accommodate the alphabet."""


class ContainerFormatError(PrefixCodeError):
    """A serialized container is malformed."""
