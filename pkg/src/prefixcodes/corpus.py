"""Symbol sequences, frequency statistics, and synthetic corpora.

Raw inputs are densified: the distinct raw values are remapped onto a
dense alphabet [0, n) in first-occurrence order, and the remap table is
kept so decompression can restore the original values.  All code
construction downstream assumes every in-alphabet symbol occurs at
least once.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyInputError, ParseError


@dataclass(frozen=True)
class SymbolSequence:
    """A text over a dense integer alphabet [0, n)."""

    symbols: np.ndarray          # dtype uint32/int64, values in [0, n)
    n: int                       # alphabet size
    remap: np.ndarray | None = field(default=None)  # dense id -> raw value

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("alphabet size must be >= 1")
        if len(self.symbols) < 1:
            raise EmptyInputError("sequence must be non-empty")

    @property
    def N(self) -> int:
        return len(self.symbols)

    def raw_values(self) -> np.ndarray:
        """Undo densification, returning the original raw values."""
        if self.remap is None:
            return np.asarray(self.symbols)
        return np.asarray(self.remap)[self.symbols]


@dataclass(frozen=True)
class FrequencyTable:
    """Per-symbol occurrence counts over a dense alphabet."""

    counts: np.ndarray
    total: int

    def __post_init__(self):
        if self.total != int(np.sum(self.counts)):
            raise ValueError("total must equal the sum of counts")
        if np.any(np.asarray(self.counts) < 1):
            raise ValueError("all in-alphabet symbols must occur at least once")

    @property
    def n(self) -> int:
        return len(self.counts)

    def probabilities(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=float) / self.total


def densify(raw: np.ndarray) -> SymbolSequence:
    """Remap raw values onto [0, n) in first-occurrence order."""
    if len(raw) == 0:
        raise EmptyInputError("no symbols to densify")
    uniq, first_pos, inverse = np.unique(raw, return_index=True,
                                         return_inverse=True)
    # np.unique sorts by value; reorder by first occurrence
    order = np.argsort(first_pos, kind="stable")
    remap = uniq[order]
    dense_of_sorted = np.empty(len(uniq), dtype=np.int64)
    dense_of_sorted[order] = np.arange(len(uniq))
    symbols = dense_of_sorted[inverse]
    identity = bool(np.array_equal(remap, np.arange(len(uniq))))
    return SymbolSequence(symbols=symbols, n=len(uniq),
                          remap=None if identity else remap)


def ingest(raw: bytes, fmt: str = "ascii-ints") -> SymbolSequence:
    """Parse a byte stream of symbols and densify its alphabet.

    Formats: "u32-binary" (little-endian 32-bit unsigned) or
    "ascii-ints" (whitespace-separated decimal integers).
    """
    if fmt == "u32-binary":
        if len(raw) == 0:
            raise EmptyInputError("empty input")
        if len(raw) % 4 != 0:
            raise ParseError("u32 stream length is not a multiple of 4",
                             byte_offset=len(raw) - (len(raw) % 4))
        values = np.frombuffer(raw, dtype="<u4").astype(np.int64)
    elif fmt == "ascii-ints":
        if not raw.strip():
            raise EmptyInputError("empty input")
        tokens = raw.split()
        values = np.empty(len(tokens), dtype=np.int64)
        offset = 0
        for i, tok in enumerate(tokens):
            try:
                values[i] = int(tok)
            except ValueError:
                offset = raw.find(tok)
                raise ParseError(f"not a decimal integer: {tok!r}",
                                 byte_offset=offset) from None
            if values[i] < 0:
                raise ParseError(f"negative symbol value: {tok!r}",
                                 byte_offset=raw.find(tok))
    else:
        raise ValueError(f"unknown input format: {fmt}")
    return densify(values)


def emit(seq: SymbolSequence, fmt: str = "ascii-ints") -> bytes:
    """Serialize the raw (un-densified) values of a sequence."""
    raw = seq.raw_values()
    if fmt == "u32-binary":
        return raw.astype("<u4").tobytes()
    if fmt == "ascii-ints":
        return " ".join(str(int(v)) for v in raw).encode("ascii")
    raise ValueError(f"unknown output format: {fmt}")


def frequencies(seq: SymbolSequence) -> FrequencyTable:
    """Occurrence counts of each dense symbol."""
    counts = np.bincount(np.asarray(seq.symbols), minlength=seq.n)
    return FrequencyTable(counts=counts, total=int(counts.sum()))


def entropy(freq: FrequencyTable) -> float:
    """Zero-order empirical entropy in bits per symbol."""
    p = freq.probabilities()
    return float(-np.sum(p * np.log2(p)))


def zipf_generate(n: int, N: int, s: float, seed: int) -> SymbolSequence:
    """I.i.d. samples with p_i proportional to 1/(i+1)^s.

    Deterministic for a fixed seed.  Symbols that never occur are kept
    out of the alphabet by densification.
    """
    if n < 1 or N < 1 or s < 0:
        raise ValueError("require n >= 1, N >= 1, s >= 0")
    weights = 1.0 / np.power(np.arange(1, n + 1, dtype=float), s)
    cdf = np.cumsum(weights)
    cdf /= cdf[-1]
    rng = np.random.default_rng(seed)
    u = rng.random(N)
    raw = np.searchsorted(cdf, u, side="right")
    return densify(raw)
