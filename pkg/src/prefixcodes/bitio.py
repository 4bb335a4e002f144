"""MSB-first bit stream writer and reader.

Bits are packed most-significant-first within each byte, so that a
canonical codeword peeked as a fixed-width window compares numerically
the same way its padded value does.  The reader supports `peek`, which
zero-pads past the end of the payload: fixed-width lookahead decoding
relies on being able to read a full window near the end of the stream.
"""

from __future__ import annotations

from .errors import TruncatedStreamError

_MAX_WIDTH = 64


class BitWriter:
    """Accumulates bits MSB-first into a growable byte buffer."""

    def __init__(self):
        self._buf = bytearray()
        self._acc = 0
        self._nbits = 0  # bits currently in _acc (always < 8 between calls)
        self._total = 0

    @property
    def bit_length(self) -> int:
        """Total number of bits written so far."""
        return self._total

    def write_bits(self, value: int, k: int) -> None:
        """Append the k low-order bits of value, MSB-first."""
        if not 0 <= k <= _MAX_WIDTH:
            raise ValueError(f"bit count {k} out of range [0, {_MAX_WIDTH}]")
        if value < 0 or value >> k:
            raise ValueError(f"value {value} does not fit in {k} bits")
        if k == 0:
            return
        acc = (self._acc << k) | value
        nbits = self._nbits + k
        nbytes = nbits >> 3
        if nbytes:
            rem = nbits & 7
            self._buf += (acc >> rem).to_bytes(nbytes, "big")
            acc &= (1 << rem) - 1
            nbits = rem
        self._acc = acc
        self._nbits = nbits
        self._total += k

    def getvalue(self) -> bytes:
        """Return the stream as bytes, zero-padding the final partial byte."""
        out = bytes(self._buf)
        if self._nbits:
            out += bytes([self._acc << (8 - self._nbits)])
        return out


class BitReader:
    """Reads an MSB-first bit stream produced by BitWriter."""

    def __init__(self, data: bytes, bit_length: int | None = None):
        if bit_length is None:
            bit_length = 8 * len(data)
        if bit_length > 8 * len(data):
            raise ValueError("bit_length exceeds the buffer")
        self._data = data
        self._limit = bit_length
        self._cursor = 0

    @property
    def cursor(self) -> int:
        return self._cursor

    @property
    def remaining(self) -> int:
        return self._limit - self._cursor

    def peek_bits(self, k: int) -> int:
        """Next k bits as an integer without advancing; bits past the
        payload limit read as zero."""
        if not 0 <= k <= _MAX_WIDTH:
            raise ValueError(f"bit count {k} out of range [0, {_MAX_WIDTH}]")
        if k == 0:
            return 0
        cur = self._cursor
        byte_pos = cur >> 3
        offset = cur & 7
        # 9 bytes = 72 bits cover offset (<= 7) + k (<= 64)
        chunk = self._data[byte_pos:byte_pos + 9]
        window = int.from_bytes(chunk.ljust(9, b"\x00"), "big")
        value = (window >> (72 - offset - k)) & ((1 << k) - 1)
        overrun = cur + k - self._limit
        if overrun > 0:
            # low-order bits of the window lie beyond the payload
            value &= ((1 << k) - 1) ^ ((1 << min(overrun, k)) - 1)
        return value

    def read_bits(self, k: int) -> int:
        """As peek_bits, but advances the cursor; overrunning the payload
        raises TruncatedStreamError."""
        if self._cursor + k > self._limit:
            raise TruncatedStreamError(
                f"read of {k} bits at cursor {self._cursor} exceeds payload "
                f"of {self._limit} bits")
        value = self.peek_bits(k)
        self._cursor += k
        return value

    def skip(self, k: int) -> None:
        """Advance the cursor by k bits."""
        if self._cursor + k > self._limit:
            raise TruncatedStreamError(
                f"skip of {k} bits at cursor {self._cursor} exceeds payload "
                f"of {self._limit} bits")
        self._cursor += k
