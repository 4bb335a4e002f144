"""Bit-exact file container for compressed symbol streams.

Layout (all integers unsigned LEB128 unless noted):

    magic "PFXC" | version u8 | scheme u8 | flags u8 |
    n | N | [remap table, delta-coded ascending, if flags bit 2] |
    model byte length | model bytes |
    payload bit length | payload bytes (last byte zero-padded)

The model bytes alone rebuild the codec; no frequency table is needed
at decode time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .alphabetic import AlphabeticCodec, hu_tucker_lengths
from .codecs import (CompactCodec, MultiplicativeCodec, TableCodec,
                     SCHEME_ADDITIVE_COMPACT, SCHEME_ADDITIVE_TABLE,
                     SCHEME_ALPHABETIC, SCHEME_COMPACT,
                     SCHEME_MULTIPLICATIVE, SCHEME_TABLE,
                     build_additive, build_multiplicative)
from .codes import huffman_lengths
from .corpus import SymbolSequence, frequencies
from .errors import ContainerFormatError
from .leb128 import decode_uvarint, encode_uvarint

MAGIC = b"PFXC"
VERSION = 1

FLAG_FALLBACK = 0x01
FLAG_SEARCH_BIN = 0x02
FLAG_REMAP = 0x04

SCHEME_NAMES = {
    "compact": SCHEME_COMPACT,
    "table": SCHEME_TABLE,
    "additive-compact": SCHEME_ADDITIVE_COMPACT,
    "additive-table": SCHEME_ADDITIVE_TABLE,
    "mult": SCHEME_MULTIPLICATIVE,
    "alphabetic": SCHEME_ALPHABETIC,
}


@dataclass
class ContainerInfo:
    """Parsed header of a container, plus the rebuilt codec."""

    scheme: int
    flags: int
    n: int
    N: int
    remap: tuple | None
    codec: object
    payload: bytes
    payload_bits: int


def build_codec(seq: SymbolSequence, scheme: int, epsilon: float = 0.1,
                c: float = 2.0, b: int = 14, select_sampling: int = 32,
                search: str = "seq", variant: str = "table",
                backend: str = "milidiu"):
    """Codec for a densified sequence under the given scheme.

    Returns (codec, fallback): fallback is True when the multiplicative
    scheme degraded to an exact compact codec.
    """
    freq = frequencies(seq)
    if scheme == SCHEME_COMPACT:
        return CompactCodec(huffman_lengths(freq), select_sampling,
                            search), False
    if scheme == SCHEME_TABLE:
        return TableCodec(huffman_lengths(freq), variant, b), False
    if scheme in (SCHEME_ADDITIVE_COMPACT, SCHEME_ADDITIVE_TABLE):
        return build_additive(freq, epsilon,
                              table=(scheme == SCHEME_ADDITIVE_TABLE),
                              backend=backend,
                              select_sampling=select_sampling, search=search,
                              b=b, variant=variant), False
    if scheme == SCHEME_MULTIPLICATIVE:
        return build_multiplicative(freq, c, select_sampling, search)
    if scheme == SCHEME_ALPHABETIC:
        return AlphabeticCodec(hu_tucker_lengths(freq)), False
    raise ValueError(f"unknown scheme id {scheme}")


def _encode_remap(remap) -> bytes:
    # the table follows first-occurrence order, so deltas may be
    # negative; zigzag-fold them into uvarints
    out = bytearray(encode_uvarint(len(remap)))
    prev = 0
    for v in remap:
        delta = int(v) - prev
        out += encode_uvarint((delta << 1) ^ (delta >> 63))
        prev = int(v)
    return bytes(out)


def _decode_remap(data: bytes, offset: int):
    k, offset = decode_uvarint(data, offset)
    remap = []
    prev = 0
    for _ in range(k):
        z, offset = decode_uvarint(data, offset)
        prev += (z >> 1) ^ -(z & 1)
        remap.append(prev)
    return tuple(remap), offset


def compress(seq: SymbolSequence, scheme: int, **params) -> bytes:
    """Serialize a symbol sequence into a container."""
    codec, fallback = build_codec(seq, scheme, **params)
    payload, nbits = codec.encode_all(seq.symbols)
    flags = 0
    if fallback:
        flags |= FLAG_FALLBACK
    if params.get("search", "seq") == "bin":
        flags |= FLAG_SEARCH_BIN
    if seq.remap is not None:
        flags |= FLAG_REMAP
    model = codec.model_bytes()
    out = bytearray(MAGIC)
    out += bytes([VERSION, scheme, flags])
    out += encode_uvarint(seq.n)
    out += encode_uvarint(seq.N)
    if seq.remap is not None:
        out += _encode_remap(seq.remap)
    out += encode_uvarint(len(model))
    out += model
    out += encode_uvarint(nbits)
    out += payload
    return bytes(out)


def _load_codec(scheme: int, flags: int, model: bytes, b: int = 14,
                select_sampling: int = 32, variant: str = "table"):
    search = "bin" if flags & FLAG_SEARCH_BIN else "seq"
    if scheme in (SCHEME_COMPACT, SCHEME_ADDITIVE_COMPACT):
        return CompactCodec.from_model_bytes(model, select_sampling, search)
    if scheme in (SCHEME_TABLE, SCHEME_ADDITIVE_TABLE):
        return TableCodec.from_model_bytes(model, variant, b)
    if scheme == SCHEME_MULTIPLICATIVE:
        if flags & FLAG_FALLBACK:
            return CompactCodec.from_model_bytes(model, select_sampling,
                                                 search)
        return MultiplicativeCodec.from_model_bytes(model)
    if scheme == SCHEME_ALPHABETIC:
        return AlphabeticCodec.from_model_bytes(model)
    raise ContainerFormatError(f"unknown scheme id {scheme}")


def read_container(data: bytes, b: int = 14, select_sampling: int = 32,
                   variant: str = "table") -> ContainerInfo:
    """Parse a container and rebuild its codec; decode knobs only affect
    speed, never the decoded stream."""
    if data[:4] != MAGIC:
        raise ContainerFormatError("bad magic; not a container")
    if len(data) < 7:
        raise ContainerFormatError("truncated header")
    version, scheme, flags = data[4], data[5], data[6]
    if version != VERSION:
        raise ContainerFormatError(f"unsupported version {version}")
    offset = 7
    n, offset = decode_uvarint(data, offset)
    N, offset = decode_uvarint(data, offset)
    remap = None
    if flags & FLAG_REMAP:
        remap, offset = _decode_remap(data, offset)
    mlen, offset = decode_uvarint(data, offset)
    model = data[offset:offset + mlen]
    if len(model) != mlen:
        raise ContainerFormatError("truncated model")
    offset += mlen
    nbits, offset = decode_uvarint(data, offset)
    payload = data[offset:]
    if len(payload) < (nbits + 7) // 8:
        raise ContainerFormatError("truncated payload")
    codec = _load_codec(scheme, flags, model, b, select_sampling, variant)
    return ContainerInfo(scheme=scheme, flags=flags, n=n, N=N, remap=remap,
                         codec=codec, payload=payload, payload_bits=nbits)


def decompress(data: bytes, b: int = 14, select_sampling: int = 32,
               variant: str = "table") -> SymbolSequence:
    info = read_container(data, b, select_sampling, variant)
    symbols = np.asarray(
        info.codec.decode_all(info.payload, info.payload_bits, info.N),
        dtype=np.int64)
    return SymbolSequence(symbols=symbols, n=info.n, remap=info.remap)
