"""Optimal alphabetic (order-preserving) prefix codes.

An alphabetic code assigns codewords whose lexicographic order matches
the symbol order, so decoding can compare rather than look up symbols.
The construction is the classic two-phase combination algorithm:
tentative pairing over compatible nodes yields optimal levels, and the
codewords are then rebuilt left to right from the level sequence.
"""

from __future__ import annotations

import numpy as np

from .bitio import BitReader, BitWriter
from .codecs import SCHEME_ALPHABETIC, _pack_lengths, _unpack_lengths
from .codes import CodeLengths
from .corpus import FrequencyTable
from .errors import CorruptStreamError


def hu_tucker_lengths(freq: FrequencyTable) -> CodeLengths:
    """Optimal alphabetic code lengths, O(n^2) combination phase.

    A pair of nodes is compatible when no original leaf lies strictly
    between them.  Each round combines the minimum-weight compatible
    pair (leftmost on ties) and the leaf depths of the resulting
    combination tree are the code lengths.
    """
    n = freq.n
    if n == 1:
        return CodeLengths(lengths=(1,))
    counts = np.asarray(freq.counts)
    weights = [int(c) for c in counts]
    is_leaf = [True] * n
    members = [[i] for i in range(n)]     # leaves under each working node

    depth = [0] * n
    for _ in range(n - 1):
        best = None                        # (weight, i, j)
        m = len(weights)
        for i in range(m):
            wi = weights[i]
            for j in range(i + 1, m):
                w = wi + weights[j]
                if best is not None and w >= best[0]:
                    if is_leaf[j]:
                        break
                    continue
                best = (w, i, j)
                if is_leaf[j]:
                    break                  # a leaf blocks pairs past it
        _, i, j = best
        for leaf in members[i]:
            depth[leaf] += 1
        for leaf in members[j]:
            depth[leaf] += 1
        weights[i] = best[0]
        is_leaf[i] = False
        members[i] = members[i] + members[j]
        del weights[j], is_leaf[j], members[j]
    return CodeLengths(lengths=tuple(depth))


def optimal_alphabetic_cost(freq: FrequencyTable) -> int:
    """Weighted path length of the optimal alphabetic tree, by interval
    dynamic programming; O(n^3) reference oracle."""
    counts = [int(c) for c in np.asarray(freq.counts)]
    n = len(counts)
    if n == 1:
        return counts[0]
    prefix = [0]
    for c in counts:
        prefix.append(prefix[-1] + c)
    cost = [[0] * n for _ in range(n)]
    for span in range(1, n):
        for i in range(n - span):
            j = i + span
            cost[i][j] = (min(cost[i][k] + cost[k + 1][j] for k in range(i, j))
                          + prefix[j + 1] - prefix[i])
    return cost[0][n - 1]


def alphabetic_codewords(lengths: CodeLengths):
    """(code, length) pairs in symbol order for an alphabetic level
    sequence: each codeword is the previous one plus one, re-aligned to
    the new length."""
    out = []
    code = 0
    prev = lengths.lengths[0]
    out.append((0, prev))
    for l in lengths.lengths[1:]:
        code += 1
        if l >= prev:
            code <<= l - prev
        else:
            code >>= prev - l
        out.append((code, l))
        prev = l
    return out


class AlphabeticCodec:
    """Order-preserving codec; decoding is a predecessor search over the
    padded codewords, which increase with the symbol."""

    scheme_id = SCHEME_ALPHABETIC

    def __init__(self, lengths: CodeLengths):
        self.lengths = lengths
        self.codes = alphabetic_codewords(lengths)
        self.lmax = lengths.lmax
        self._padded = [code << (self.lmax - l) for code, l in self.codes]
        for a, b in zip(self._padded, self._padded[1:]):
            if b <= a:
                raise ValueError("length vector is not alphabetic-feasible")

    @property
    def n(self) -> int:
        return self.lengths.n

    def encode(self, i: int, w: BitWriter) -> None:
        code, l = self.codes[i]
        w.write_bits(code, l)

    def decode(self, r: BitReader) -> int:
        window = r.peek_bits(self.lmax)
        lo, hi = 0, self.n - 1
        while lo < hi:                    # last padded value <= window
            mid = (lo + hi + 1) // 2
            if self._padded[mid] <= window:
                lo = mid
            else:
                hi = mid - 1
        code, l = self.codes[lo]
        if window >> (self.lmax - l) != code:
            raise CorruptStreamError(f"window {window:0{self.lmax}b} matches "
                                     "no alphabetic codeword")
        r.skip(l)
        return lo

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
        decode = self.decode
        return [decode(r) for _ in range(count)]

    def model_bytes(self) -> bytes:
        return _pack_lengths(self.lengths)

    @classmethod
    def from_model_bytes(cls, data: bytes) -> "AlphabeticCodec":
        lengths, _ = _unpack_lengths(data)
        return cls(lengths)

    def resident_model_bits(self) -> dict:
        n, lmax = self.n, self.lmax
        return {"codes": n * lmax, "padded": n * lmax}


def build_alphabetic(freq: FrequencyTable) -> AlphabeticCodec:
    return AlphabeticCodec(hu_tucker_lengths(freq))
