"""Rank/select bitvector and Huffman-shaped wavelet tree.

The bitvector keeps its payload in 64-bit words with a two-level rank
directory: one absolute 64-bit count per 512-bit superblock plus one
16-bit relative count per word, a 37.5% overhead over the payload.
Select is answered from sampled occurrence positions followed by a word
scan; the sampling period trades space for speed.

The wavelet tree stores one bitvector per internal node of a
Huffman-shaped binary code over the distinct values of the input
sequence, so its total payload is the value histogram's Huffman cost,
below n*(H0+1) bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import FrequencyTable
from . import codes as _codes

_WORD = 64
_SUPER_WORDS = 8  # 512-bit superblocks
_FULL = (1 << _WORD) - 1


# per-byte popcounts and MSB-first set-bit offsets, for in-word select
_BYTE_POP = [b.bit_count() for b in range(256)]
_BYTE_SEL = [[k for k in range(8) if (b >> (7 - k)) & 1] for b in range(256)]


def _nth_set_msb(word: int, need: int) -> int:
    """Offset from the MSB of the need-th set bit (1-based) of a 64-bit
    word, one byte at a time."""
    pop, sel = _BYTE_POP, _BYTE_SEL
    for shift in (56, 48, 40, 32, 24, 16, 8, 0):
        b = (word >> shift) & 0xFF
        c = pop[b]
        if need <= c:
            return (56 - shift) + sel[b][need - 1]
        need -= c
    raise AssertionError("select scan overran its word")


class RankSelectBitVector:
    """Static bitvector with O(1) rank and sampled select."""

    def __init__(self, bits, select_sampling: int = 32):
        """bits: iterable of 0/1, or a (packed_words, length) pair."""
        if isinstance(bits, tuple) and len(bits) == 2:
            words, m = bits
            self._words = list(words)
        else:
            bits = list(bits)
            m = len(bits)
            self._words = [0] * ((m + _WORD - 1) // _WORD)
            for i, b in enumerate(bits):
                if b:
                    self._words[i >> 6] |= 1 << (_WORD - 1 - (i & 63))
        self._m = m
        self._s_sel = select_sampling
        self._build_directories()

    def _build_directories(self):
        words = self._words
        self._super = []     # absolute count of 1s before each superblock
        self._block = []     # count of 1s before each word, within its superblock
        acc = 0
        rel = 0
        for w, word in enumerate(words):
            if w % _SUPER_WORDS == 0:
                self._super.append(acc)
                rel = 0
            self._block.append(rel)
            pc = word.bit_count()
            acc += pc
            rel += pc
        self._ones = acc
        s = self._s_sel
        self._sel1 = []      # position of the (k*s+1)-th 1, k = 0, 1, ...
        self._sel0 = []
        seen1 = seen0 = 0
        for i in range(self._m):
            bit = (words[i >> 6] >> (_WORD - 1 - (i & 63))) & 1
            if bit:
                if seen1 % s == 0:
                    self._sel1.append(i)
                seen1 += 1
            else:
                if seen0 % s == 0:
                    self._sel0.append(i)
                seen0 += 1

    def __len__(self):
        return self._m

    @property
    def ones(self) -> int:
        return self._ones

    @property
    def zeros(self) -> int:
        return self._m - self._ones

    @property
    def words(self):
        return self._words

    def get(self, i: int) -> int:
        return (self._words[i >> 6] >> (_WORD - 1 - (i & 63))) & 1

    def rank1(self, i: int) -> int:
        """Number of 1s in positions [0, i)."""
        if not 0 <= i <= self._m:
            raise IndexError(f"rank position {i} out of [0, {self._m}]")
        if i == 0:
            return 0
        w = i >> 6
        r = i & 63
        if w == len(self._words):
            return self._ones
        base = self._super[w // _SUPER_WORDS] + self._block[w]
        if r == 0:
            return base
        return base + (self._words[w] >> (_WORD - r)).bit_count()

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def rank(self, b: int, i: int) -> int:
        return self.rank1(i) if b else self.rank0(i)

    def select1(self, j: int) -> int:
        """Position of the j-th 1 (1-based)."""
        if not 1 <= j <= self._ones:
            raise ValueError(f"select1 argument {j} out of [1, {self._ones}]")
        start = self._sel1[(j - 1) // self._s_sel]
        w = start >> 6
        # 1s strictly before word w
        seen = self._super[w // _SUPER_WORDS] + self._block[w]
        words = self._words
        while True:
            pc = words[w].bit_count()
            if seen + pc >= j:
                break
            seen += pc
            w += 1
        return (w << 6) + _nth_set_msb(words[w], j - seen)

    def select0(self, j: int) -> int:
        """Position of the j-th 0 (1-based)."""
        zeros = self._m - self._ones
        if not 1 <= j <= zeros:
            raise ValueError(f"select0 argument {j} out of [1, {zeros}]")
        start = self._sel0[(j - 1) // self._s_sel]
        w = start >> 6
        seen = (w << 6) - (self._super[w // _SUPER_WORDS] + self._block[w])
        words = self._words
        while True:
            valid = min(_WORD, self._m - (w << 6))
            pc = valid - (words[w] >> (_WORD - valid)).bit_count() if valid else 0
            if seen + pc >= j:
                break
            seen += pc
            w += 1
        valid = min(_WORD, self._m - (w << 6))
        comp = ~words[w] & (((1 << valid) - 1) << (_WORD - valid))
        return (w << 6) + _nth_set_msb(comp, j - seen)

    def select(self, b: int, j: int) -> int:
        return self.select1(j) if b else self.select0(j)

    def payload_bits(self) -> int:
        return self._m

    def rank_directory_bits(self) -> int:
        """Accounted size of the two-level rank directory (37.5% of the
        payload: 64 bits per 512-bit superblock + 16 per word)."""
        return 64 * len(self._super) + 16 * len(self._block)

    def select_directory_bits(self) -> int:
        """Accounted size of the sampled select positions."""
        return 32 * (len(self._sel1) + len(self._sel0))

    def directory_bits(self) -> int:
        return self.rank_directory_bits() + self.select_directory_bits()


class _Node:
    __slots__ = ("bv", "left", "right", "value")

    def __init__(self):
        self.bv = None
        self.left = None
        self.right = None
        self.value = None   # set on leaves


class WaveletTree:
    """Access/rank/select over a sequence, Huffman-shaped by value frequency."""

    def __init__(self, seq, select_sampling: int = 32,
                 shape_lengths: dict | None = None):
        seq = list(seq)
        if not seq:
            raise ValueError("sequence must be non-empty")
        self._n = len(seq)
        hist = {}
        for v in seq:
            hist[v] = hist.get(v, 0) + 1
        self._values = sorted(hist)
        if len(self._values) > 64:
            raise ValueError("more than 64 distinct values")
        self._s_sel = select_sampling
        if shape_lengths is None:
            shape_lengths = self._huffman_shape(hist)
        self._shape_lengths = shape_lengths
        self._codes = self._canonical_shape_codes(shape_lengths)
        self._build(seq)

    def _huffman_shape(self, hist) -> dict:
        """Shape code lengths from the value histogram; ties broken by
        value order through the deterministic Huffman construction."""
        if len(self._values) == 1:
            return {self._values[0]: 0}
        counts = np.array([hist[v] for v in self._values])
        ft = FrequencyTable(counts=counts, total=int(counts.sum()))
        lens = _codes.huffman_lengths(ft).lengths
        return dict(zip(self._values, lens))

    def _canonical_shape_codes(self, shape_lengths) -> dict:
        """Value -> (code, length) assigned canonically in value order."""
        if len(self._values) == 1:
            return {self._values[0]: (0, 0)}
        items = sorted(self._values,
                       key=lambda v: (shape_lengths[v], v))
        out = {}
        code = 0
        prev = shape_lengths[items[0]]
        for v in items:
            l = shape_lengths[v]
            code <<= l - prev
            out[v] = (code, l)
            code += 1
            prev = l
        return out

    def _build(self, seq):
        self._root = _Node()
        if len(self._values) == 1:
            self._root.value = self._values[0]
            self._make_paths()
            return
        # distribute the sequence through the shape, one bitvector per node
        buckets = {(): seq}
        stack = [((), self._root)]
        while stack:
            prefix, node = stack.pop()
            sub = buckets.pop(prefix)
            depth = len(prefix)
            bits = []
            left_seq, right_seq = [], []
            for v in sub:
                code, l = self._codes[v]
                bit = (code >> (l - depth - 1)) & 1
                bits.append(bit)
                (right_seq if bit else left_seq).append(v)
            node.bv = RankSelectBitVector(bits, self._s_sel)
            for bit, child_seq in ((0, left_seq), (1, right_seq)):
                if not child_seq:
                    continue
                child = _Node()
                if bit:
                    node.right = child
                else:
                    node.left = child
                first = child_seq[0]
                code, l = self._codes[first]
                if l == depth + 1:
                    child.value = first
                else:
                    buckets[prefix + (bit,)] = child_seq
                    stack.append((prefix + (bit,), child))
        # a child holding a single value deeper than depth+1 still needs
        # its chain; handle by checking homogeneous buckets lazily above
        # (codes are full so each child is either a leaf or mixed)
        self._make_paths()

    def _make_paths(self):
        """Static per-value root-to-leaf paths, cached for rank/select."""
        self._fwd = {}
        self._rev = {}
        for v in self._values:
            code, l = self._codes[v]
            node = self._root
            path = []
            for d in range(l):
                bit = (code >> (l - d - 1)) & 1
                path.append((node.bv, bit))
                node = node.right if bit else node.left
            self._fwd[v] = tuple(path)
            self._rev[v] = tuple(reversed(path))

    @property
    def n(self) -> int:
        return self._n

    @property
    def values(self):
        return tuple(self._values)

    @property
    def shape_lengths(self) -> dict:
        return dict(self._shape_lengths)

    def access(self, i: int):
        """The i-th element of the sequence."""
        if not 0 <= i < self._n:
            raise IndexError(f"position {i} out of [0, {self._n})")
        node = self._root
        while node.value is None:
            bit = node.bv.get(i)
            i = node.bv.rank(bit, i)
            node = node.right if bit else node.left
        return node.value

    def rank(self, v, i: int) -> int:
        """Occurrences of v in the first i elements."""
        if not 0 <= i <= self._n:
            raise IndexError(f"position {i} out of [0, {self._n}]")
        if v not in self._codes:
            return 0
        for bv, bit in self._fwd[v]:
            r = bv.rank1(i)
            i = r if bit else i - r
            if i == 0:
                return 0
        return i

    def select(self, v, j: int) -> int:
        """Position of the j-th occurrence of v (1-based j, 0-based result)."""
        if v not in self._codes:
            raise ValueError(f"value {v} does not occur")
        for bv, bit in self._rev[v]:
            j = (bv.select1(j) if bit else bv.select0(j)) + 1
        return j - 1

    def payload_bits(self) -> int:
        """Total stored bits across node bitvectors."""
        total = 0
        stack = [self._root]
        while stack:
            node = stack.pop()
            if node.bv is not None:
                total += node.bv.payload_bits()
            for child in (node.left, node.right):
                if child is not None and child.value is None:
                    stack.append(child)
        return total

    def rank_directory_bits(self) -> int:
        return sum(bv.rank_directory_bits() for bv in self.node_bitvectors())

    def directory_bits(self) -> int:
        return sum(bv.directory_bits() for bv in self.node_bitvectors())

    def node_bitvectors(self):
        """Internal-node bitvectors in preorder of the shape tree."""
        out = []
        def walk(node):
            if node.bv is not None:
                out.append(node.bv)
            for child in (node.left, node.right):
                if child is not None and child.value is None:
                    walk(child)
            # leaves carry no bitvector
        walk(self._root)
        return out

    @classmethod
    def from_parts(cls, n, values, shape_lengths, node_bvs,
                   select_sampling: int = 32) -> "WaveletTree":
        """Rebuild a tree from its serialized parts.

        values: distinct values ascending; shape_lengths: value -> shape
        code length; node_bvs: bitvectors in preorder (the order produced
        by node_bitvectors).
        """
        wt = cls.__new__(cls)
        wt._n = n
        wt._values = list(values)
        wt._s_sel = select_sampling
        wt._shape_lengths = dict(shape_lengths)
        wt._codes = wt._canonical_shape_codes(wt._shape_lengths)
        wt._root = _Node()
        if len(wt._values) == 1:
            wt._root.value = wt._values[0]
            wt._make_paths()
            return wt
        # materialize the shape tree from the codes
        for v in wt._values:
            code, l = wt._codes[v]
            node = wt._root
            for d in range(l):
                bit = (code >> (l - d - 1)) & 1
                attr = "right" if bit else "left"
                child = getattr(node, attr)
                if child is None:
                    child = _Node()
                    setattr(node, attr, child)
                node = child
            node.value = v
        bvs = iter(node_bvs)
        def attach(node):
            if node.value is not None:
                return
            node.bv = next(bvs)
            for child in (node.left, node.right):
                if child is not None:
                    attach(child)
        attach(wt._root)
        wt._make_paths()
        return wt
