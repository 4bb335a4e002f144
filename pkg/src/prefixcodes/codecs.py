"""Encode/decode schemes over canonical prefix codes.

Four families share the canonical layout but differ in what the model
stores:

  * CompactCodec: only the wavelet tree over the level sequence plus the
    per-level first/sR arrays; codewords are recomputed from rank, and
    decoding maps a codeword back to its symbol with select.
  * TableCodec: classical arrays (Codes, Symb, first, sR) with optional
    b-bit prefix tables to accelerate decoding (TABLE / TABLE_S /
    TABLE_E).
  * build_additive: a length-restricted code whose ceiling is chosen so
    the average length is within epsilon of optimal; stored compactly or
    with tables.
  * MultiplicativeCodec: only the short codewords are stored (hashed);
    every other symbol gets a fixed-width codeword computed from its
    index, trading a factor c in average length for an o(n) model.
"""

from __future__ import annotations

import math

from .bitio import BitReader, BitWriter
from .codes import (CodeLengths, PHI, canonicalize, huffman_lengths,
                    level_of)
from .corpus import FrequencyTable
from .errors import CorruptStreamError, PrefixCodeError
from .leb128 import decode_uvarint, encode_uvarint
from .length_limited import ceil_lg, limit_milidiu, limit_optimal
from .succinct import RankSelectBitVector, WaveletTree

SCHEME_COMPACT = 0
SCHEME_TABLE = 1
SCHEME_ADDITIVE_COMPACT = 2
SCHEME_ADDITIVE_TABLE = 3
SCHEME_MULTIPLICATIVE = 4
SCHEME_ALPHABETIC = 5

_MODEL_WORD_BITS = 32  # "naive" reference entry of the size report


def level_entropy(lengths: CodeLengths) -> float:
    """Zero-order entropy of the level sequence, bits per symbol."""
    hist = {}
    for l in lengths.lengths:
        hist[l] = hist.get(l, 0) + 1
    n = lengths.n
    return -sum(c / n * math.log2(c / n) for c in hist.values())


def _pack_lengths(lengths: CodeLengths) -> bytes:
    """n, lmax, then fixed-width per-symbol lengths."""
    out = bytearray(encode_uvarint(lengths.n))
    lmax = lengths.lmax
    out += encode_uvarint(lmax)
    width = max(lmax.bit_length(), 1)
    w = BitWriter()
    for l in lengths.lengths:
        w.write_bits(l, width)
    out += w.getvalue()
    return bytes(out)


def _unpack_lengths(data: bytes, offset: int = 0) -> tuple[CodeLengths, int]:
    n, offset = decode_uvarint(data, offset)
    lmax, offset = decode_uvarint(data, offset)
    width = max(lmax.bit_length(), 1)
    nbits = n * width
    nbytes = (nbits + 7) // 8
    r = BitReader(data[offset:offset + nbytes], nbits)
    lengths = tuple(r.read_bits(width) for _ in range(n))
    return CodeLengths(lengths=lengths), offset + nbytes


def _pack_bitvector(bv: RankSelectBitVector) -> bytes:
    m = len(bv)
    raw = bytearray()
    for word in bv.words:
        raw += word.to_bytes(8, "big")
    nbytes = (m + 7) // 8
    return encode_uvarint(m) + bytes(raw[:nbytes])


def _unpack_bitvector(data: bytes, offset: int,
                      select_sampling: int) -> tuple[RankSelectBitVector, int]:
    m, offset = decode_uvarint(data, offset)
    nbytes = (m + 7) // 8
    chunk = data[offset:offset + nbytes]
    nwords = (m + 63) // 64
    padded = chunk.ljust(8 * nwords, b"\x00")
    words = [int.from_bytes(padded[8 * i:8 * i + 8], "big")
             for i in range(nwords)]
    return RankSelectBitVector((words, m), select_sampling), offset + nbytes


class CompactCodec:
    """Wavelet-tree-backed canonical codec (the compressed model)."""

    scheme_id = SCHEME_COMPACT

    def __init__(self, lengths: CodeLengths, select_sampling: int = 32,
                 search: str = "seq", _wt: WaveletTree | None = None):
        self.lengths = lengths
        self.cc = canonicalize(lengths)
        self.search = search
        self.select_sampling = select_sampling
        self.wt = _wt if _wt is not None else WaveletTree(
            lengths.lengths, select_sampling)
        self._first_of = dict(zip(self.cc.levels, self.cc.first))
        self._count_of = dict(zip(self.cc.levels, self.cc.level_count))

    @property
    def n(self) -> int:
        return self.lengths.n

    @property
    def lmax(self) -> int:
        return self.cc.lmax

    def encode(self, i: int, w: BitWriter) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"symbol {i} out of [0, {self.n})")
        l = self.wt.access(i)
        code = self._first_of[l] + self.wt.rank(l, i + 1) - 1
        w.write_bits(code, l)

    def decode(self, r: BitReader) -> int:
        window = r.peek_bits(self.lmax)
        l = level_of(window, self.cc, self.search)
        code = r.read_bits(l)
        j = code - self._first_of[l] + 1
        if not 1 <= j <= self._count_of[l]:
            raise CorruptStreamError(
                f"codeword {code:0{l}b} outside level {l}")
        return self.wt.select(l, j)

    def encode_all(self, symbols) -> tuple[bytes, int]:
        # batch path: the canonical codewords equal first[l] + rank - 1,
        # so materializing them once is bit-identical to encode()
        w = BitWriter()
        codes = self.cc.codewords()
        write = w.write_bits
        for i in symbols:
            write(*codes[i])
        return w.getvalue(), w.bit_length

    def decode_all(self, data: bytes, nbits: int, count: int) -> list:
        # inlined decode loop: same level search + wavelet select as
        # decode(), with the per-symbol lookups hoisted out of the loop
        r = BitReader(data, nbits)
        lmax = self.lmax
        padded = self.cc.padded_first
        levels = self.cc.levels
        first = self.cc.first
        counts = self.cc.level_count
        nlevels = len(levels)
        peek, skip, select = r.peek_bits, r.skip, self.wt.select
        out = []
        append = out.append
        for _ in range(count):
            window = peek(lmax)
            idx = 0
            while idx + 1 < nlevels and padded[idx + 1] <= window:
                idx += 1
            l = levels[idx]
            skip(l)
            j = (window >> (lmax - l)) - first[idx] + 1
            if not 1 <= j <= counts[idx]:
                raise CorruptStreamError(f"codeword outside level {l}")
            append(select(l, j))
        return out

    # -- model ----------------------------------------------------------

    def model_bytes(self) -> bytes:
        out = bytearray(encode_uvarint(self.n))
        values = self.wt.values
        shape = self.wt.shape_lengths
        out += encode_uvarint(len(values))
        for v in values:
            out += encode_uvarint(v)
        for v in values:
            out += encode_uvarint(shape[v])
        for bv in self.wt.node_bitvectors():
            out += _pack_bitvector(bv)
        return bytes(out)

    @classmethod
    def from_model_bytes(cls, data: bytes, select_sampling: int = 32,
                         search: str = "seq") -> "CompactCodec":
        n, offset = decode_uvarint(data, 0)
        nvalues, offset = decode_uvarint(data, offset)
        values = []
        for _ in range(nvalues):
            v, offset = decode_uvarint(data, offset)
            values.append(v)
        shape = {}
        for v in values:
            l, offset = decode_uvarint(data, offset)
            shape[v] = l
        bvs = []
        for _ in range(max(nvalues - 1, 0)):
            bv, offset = _unpack_bitvector(data, offset, select_sampling)
            bvs.append(bv)
        wt = WaveletTree.from_parts(n, values, shape, bvs, select_sampling)
        lengths = CodeLengths(lengths=tuple(wt.access(i) for i in range(n)))
        return cls(lengths, select_sampling, search, _wt=wt)

    def resident_model_bits(self) -> dict:
        lmax = self.lmax
        aux = lmax * lmax + lmax * ceil_lg(self.n)  # first/padded + sR
        return {
            "wavelet_payload": self.wt.payload_bits(),
            "rank_directory": self.wt.rank_directory_bits(),
            "select_directory": (self.wt.directory_bits()
                                 - self.wt.rank_directory_bits()),
            "level_arrays": aux,
        }


class TableCodec:
    """Classical canonical codec: Codes/Symb arrays plus optional b-bit
    prefix tables for decoding."""

    scheme_id = SCHEME_TABLE

    def __init__(self, lengths: CodeLengths, variant: str = "table",
                 b: int = 14):
        if variant not in ("table", "table_s", "table_e"):
            raise ValueError(f"unknown table variant {variant!r}")
        self.lengths = lengths
        self.cc = canonicalize(lengths)
        self.variant = variant
        self.b = b
        self.codes = self.cc.codewords()
        self.symb = self.cc.leaf_order()
        self._levels = self.cc.levels
        self._first = self.cc.first
        self._count = self.cc.level_count
        self._sR = self.cc.sR
        self._b_eff = min(b, self.cc.lmax)
        if variant in ("table_s", "table_e"):
            self._build_prefix_tables(build_entries=(variant == "table_e"))

    @property
    def n(self) -> int:
        return self.lengths.n

    @property
    def lmax(self) -> int:
        return self.cc.lmax

    def _build_prefix_tables(self, build_entries: bool):
        b = self._b_eff
        levels, first, count, sR = (self._levels, self._first, self._count,
                                    self._sR)
        symb = self.symb
        size = 1 << b
        minidx = [len(levels) - 1] * size   # index into levels to start probing
        entries = [None] * size if build_entries else None
        # first index whose level exceeds b
        over = next((k for k, l in enumerate(levels) if l > b), len(levels))
        for p in range(size):
            for k in range(over):
                l = levels[k]
                rel = (p >> (b - l)) - first[k]
                if 0 <= rel < count[k]:
                    minidx[p] = k
                    if build_entries:
                        entries[p] = (symb[sR[k] + rel], l)
                    break
            else:
                minidx[p] = over if over < len(levels) else len(levels) - 1
        self._minidx = minidx
        self._entries = entries

    def encode(self, i: int, w: BitWriter) -> None:
        code, l = self.codes[i]
        w.write_bits(code, l)

    def _decode_from(self, r: BitReader, start: int) -> int:
        levels, first, count, sR = (self._levels, self._first, self._count,
                                    self._sR)
        lmax = self.cc.lmax
        window = r.peek_bits(lmax)
        for k in range(start, len(levels)):
            l = levels[k]
            rel = (window >> (lmax - l)) - first[k]
            if 0 <= rel < count[k]:
                r.skip(l)
                return self.symb[sR[k] + rel]
        raise CorruptStreamError("no level matches the next codeword")

    def decode(self, r: BitReader) -> int:
        if self.variant == "table":
            return self._decode_from(r, 0)
        p = r.peek_bits(self._b_eff)
        if self.variant == "table_e":
            entry = self._entries[p]
            if entry is not None:
                sym, l = entry
                r.skip(l)
                return sym
        return self._decode_from(r, self._minidx[p])

    def encode_all(self, symbols) -> tuple[bytes, int]:
        w = BitWriter()
        codes = self.codes
        write = w.write_bits
        for i in symbols:
            code, l = codes[i]
            write(code, l)
        return w.getvalue(), w.bit_length

    def decode_all(self, data: bytes, nbits: int, count: int) -> list:
        r = BitReader(data, nbits)
        out = []
        append = out.append
        if self.variant == "table_e":
            b = self._b_eff
            entries = self._entries
            minidx = self._minidx
            peek, skip = r.peek_bits, r.skip
            decode_from = self._decode_from
            for _ in range(count):
                entry = entries[peek(b)]
                if entry is not None:
                    sym, l = entry
                    skip(l)
                    append(sym)
                else:
                    append(decode_from(r, minidx[peek(b)]))
        else:
            decode = self.decode
            for _ in range(count):
                append(decode(r))
        return out

    # -- model ----------------------------------------------------------

    def model_bytes(self) -> bytes:
        return _pack_lengths(self.lengths)

    @classmethod
    def from_model_bytes(cls, data: bytes, variant: str = "table",
                         b: int = 14) -> "TableCodec":
        lengths, _ = _unpack_lengths(data)
        return cls(lengths, variant, b)

    def resident_model_bits(self) -> dict:
        n, lmax = self.n, self.lmax
        out = {
            "codes": n * lmax,
            "symb": n * ceil_lg(n),
            "first": lmax * lmax,
            "sR": lmax * ceil_lg(n),
        }
        if self.variant == "table_s":
            out["prefix_table"] = (1 << self._b_eff) * max(lmax.bit_length(), 1)
        elif self.variant == "table_e":
            out["prefix_table"] = (1 << self._b_eff) * (
                ceil_lg(n) + max(lmax.bit_length(), 1) + 1)
        return out


# ---------------------------------------------------------------------------
# Additive approximation

def additive_length_limit(n: int, epsilon: float) -> int:
    """Ceiling guaranteeing average length within epsilon of optimal:
    ceil(lg n) + ceil(log_phi(1/epsilon)) + 1."""
    if not 0 < epsilon < 0.5:
        raise ValueError("epsilon must lie in (0, 1/2)")
    boost = math.ceil(math.log(1 / epsilon) / math.log(PHI) - 1e-12)
    return ceil_lg(n) + boost + 1


def build_additive(freq: FrequencyTable, epsilon: float,
                   table: bool = False, backend: str = "milidiu",
                   select_sampling: int = 32, search: str = "seq",
                   b: int = 14, variant: str = "table"):
    """Length-restricted codec within an additive epsilon of the optimal
    average length; the milidiu backend carries the guarantee, the
    optimal backend is only better."""
    if freq.n < 2:
        raise ValueError("additive scheme needs n >= 2")
    lmax = additive_length_limit(freq.n, epsilon)
    if backend == "milidiu":
        lengths = limit_milidiu(freq, lmax)
    elif backend == "optimal":
        lengths = limit_optimal(freq, lmax)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    if table:
        codec = TableCodec(lengths, variant, b)
        codec.scheme_id = SCHEME_ADDITIVE_TABLE
    else:
        codec = CompactCodec(lengths, select_sampling, search)
        codec.scheme_id = SCHEME_ADDITIVE_COMPACT
    codec.length_limit = lmax
    return codec


# ---------------------------------------------------------------------------
# Multiplicative approximation

def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    d = 3
    while d * d <= x:
        if x % d == 0:
            return False
        d += 2
    return True


def _next_prime(x: int) -> int:
    while not _is_prime(x):
        x += 1
    return x


class DoubleHashTable:
    """Open-addressing map with double hashing:
    h(x, i) = (x mod m + (i-1) * (1 + x mod (m-1))) mod m, m prime."""

    def __init__(self, capacity: int):
        self.m = _next_prime(max(math.ceil(capacity / 0.7), capacity + 1, 3))
        self._keys = [None] * self.m
        self._vals = [0] * self.m

    def insert(self, key: int, value: int) -> None:
        m = self.m
        h1 = key % m
        h2 = 1 + key % (m - 1)
        slot = h1
        while self._keys[slot] is not None:
            if self._keys[slot] == key:
                break
            slot = (slot + h2) % m
        self._keys[slot] = key
        self._vals[slot] = value

    def get(self, key: int):
        m = self.m
        slot = key % m
        h2 = 1 + key % (m - 1)
        while True:
            k = self._keys[slot]
            if k is None:
                return None
            if k == key:
                return self._vals[slot]
            slot = (slot + h2) % m


def multiplicative_length_limit(n: int, c: float) -> int:
    """ceil(lg n) + ceil(1/(c-1)) + 1."""
    if c <= 1:
        raise ValueError("c must exceed 1")
    return ceil_lg(n) + math.ceil(1 / (c - 1) - 1e-12) + 1


class MultiplicativeCodec:
    """Stores only the frequent (short-codeword) symbols; the rest are
    encoded positionally in lmax+1 bits past the first long codeword."""

    scheme_id = SCHEME_MULTIPLICATIVE

    def __init__(self, n: int, c: float, lmax: int, threshold: int,
                 long_level: int, short_levels, short_counts, ihash):
        self.n = n
        self.c = c
        self.lmax = lmax
        self.threshold = threshold
        self.long_level = long_level
        self.short_levels = tuple(short_levels)
        self.short_counts = tuple(short_counts)
        self.ihash = list(ihash)
        self.S = len(self.ihash)
        # canonical first/sR over the short levels, padded to lmax+1 bits
        first, sR, padded = [], [], []
        code = 0
        prev = 0
        base = 0
        for l, cnt in zip(self.short_levels, self.short_counts):
            code <<= l - prev
            first.append(code)
            sR.append(base)
            padded.append(code << (lmax + 1 - l))
            code += cnt
            base += cnt
            prev = l
        self.first = tuple(first)
        self.sR = tuple(sR)
        self.padded_first = tuple(padded)
        # first long codeword, padded to lmax+1 bits
        self.c_long_prime = code << (long_level - prev) << (lmax + 1 - long_level)
        if self.c_long_prime + n - 1 >= 1 << (lmax + 1):
            raise PrefixCodeError("not enough long codeword slots")
        self.hash = DoubleHashTable(max(self.S, 1))
        for a0, sym in enumerate(self.ihash):
            self.hash.insert(sym, a0)

    @classmethod
    def build(cls, freq: FrequencyTable, c: float) -> "MultiplicativeCodec":
        """Raises PrefixCodeError when fewer than half the symbols are
        infrequent; callers fall back to an exact codec then."""
        n = freq.n
        lmax = multiplicative_length_limit(n, c)
        lengths = limit_milidiu(freq, lmax)
        threshold = int(lmax / c) + 2
        cc = canonicalize(lengths)
        leaf = cc.leaf_order()
        short = [i for i in leaf if lengths.lengths[i] <= threshold]
        if len(short) * 2 >= n:
            raise PrefixCodeError(
                f"{len(short)} short codewords out of {n}: no sublinear model")
        short_levels = [l for l in cc.levels if l <= threshold]
        short_counts = [cc.level_count[cc.levels.index(l)]
                        for l in short_levels]
        long_level = next(l for l in cc.levels if l > threshold)
        return cls(n, c, lmax, threshold, long_level,
                   short_levels, short_counts, short)

    def encode(self, i: int, w: BitWriter) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"symbol {i} out of [0, {self.n})")
        a0 = self.hash.get(i)
        if a0 is None:
            w.write_bits(self.c_long_prime + i, self.lmax + 1)
            return
        k = 0
        while k + 1 < len(self.sR) and self.sR[k + 1] <= a0:
            k += 1
        l = self.short_levels[k]
        w.write_bits(self.first[k] + a0 - self.sR[k], l)

    def decode(self, r: BitReader) -> int:
        window = r.peek_bits(self.lmax + 1)
        if window >= self.c_long_prime:
            code = r.read_bits(self.lmax + 1)
            sym = code - self.c_long_prime
            if sym >= self.n:
                raise CorruptStreamError(f"long codeword {code} out of range")
            return sym
        k = -1
        for idx, p in enumerate(self.padded_first):
            if p > window:
                break
            k = idx
        if k < 0:
            raise CorruptStreamError("window precedes every short codeword")
        l = self.short_levels[k]
        code = r.read_bits(l)
        a0 = self.sR[k] + code - self.first[k]
        if not self.sR[k] <= a0 < self.sR[k] + self.short_counts[k]:
            raise CorruptStreamError(f"short codeword {code:0{l}b} invalid")
        return self.ihash[a0]

    def encode_all(self, symbols) -> tuple[bytes, int]:
        w = BitWriter()
        for i in symbols:
            self.encode(int(i), w)
        return w.getvalue(), w.bit_length

    def decode_all(self, data: bytes, nbits: int, count: int) -> list:
        r = BitReader(data, nbits)
        return [self.decode(r) for _ in range(count)]

    def codeword_length(self, i: int) -> int:
        a0 = self.hash.get(i)
        if a0 is None:
            return self.lmax + 1
        k = 0
        while k + 1 < len(self.sR) and self.sR[k + 1] <= a0:
            k += 1
        return self.short_levels[k]

    # -- model ----------------------------------------------------------

    def model_bytes(self) -> bytes:
        out = bytearray()
        for v in (self.n, self.lmax, self.threshold, self.long_level,
                  len(self.short_levels)):
            out += encode_uvarint(v)
        for l, cnt in zip(self.short_levels, self.short_counts):
            out += encode_uvarint(l)
            out += encode_uvarint(cnt)
        out += encode_uvarint(self.S)
        for sym in self.ihash:
            out += encode_uvarint(sym)
        return bytes(out)

    @classmethod
    def from_model_bytes(cls, data: bytes, c: float = 2.0):
        offset = 0
        n, offset = decode_uvarint(data, offset)
        lmax, offset = decode_uvarint(data, offset)
        threshold, offset = decode_uvarint(data, offset)
        long_level, offset = decode_uvarint(data, offset)
        nlevels, offset = decode_uvarint(data, offset)
        short_levels, short_counts = [], []
        for _ in range(nlevels):
            l, offset = decode_uvarint(data, offset)
            cnt, offset = decode_uvarint(data, offset)
            short_levels.append(l)
            short_counts.append(cnt)
        S, offset = decode_uvarint(data, offset)
        ihash = []
        for _ in range(S):
            sym, offset = decode_uvarint(data, offset)
            ihash.append(sym)
        return cls(n, c, lmax, threshold, long_level,
                   short_levels, short_counts, ihash)

    def resident_model_bits(self) -> dict:
        key_bits = ceil_lg(self.n)
        val_bits = max(ceil_lg(max(self.S, 2)), 1)
        lm = self.lmax + 1
        return {
            "hash": self.hash.m * (key_bits + val_bits),
            "ihash": self.S * key_bits,
            "level_arrays": lm * lm + lm * key_bits,
        }


def build_multiplicative(freq: FrequencyTable, c: float,
                         select_sampling: int = 32, search: str = "seq"):
    """MultiplicativeCodec, or an exact CompactCodec fallback (flagged)
    when the short-codeword count is not sublinear."""
    try:
        codec = MultiplicativeCodec.build(freq, c)
        return codec, False
    except PrefixCodeError:
        codec = CompactCodec(huffman_lengths(freq), select_sampling, search)
        return codec, True


# ---------------------------------------------------------------------------
# Model-size accounting

def model_size_report(codec) -> dict:
    """Reference and measured model sizes, in bits."""
    n = codec.n
    lmax = codec.lmax
    if hasattr(codec, "lengths"):
        h0 = level_entropy(codec.lengths)
    else:
        lens = CodeLengths(tuple(codec.codeword_length(i) for i in range(n)))
        h0 = level_entropy(lens)
    resident = codec.resident_model_bits()
    return {
        "naive_bits": n * _MODEL_WORD_BITS,
        "engineered_bits": n * lmax,
        "canonical_bits": n * ceil_lg(n),
        "level_entropy_bits": n * h0,
        "serialized_bits": 8 * len(codec.model_bytes()),
        "resident_bits": sum(resident.values()),
        "resident_breakdown": resident,
    }
