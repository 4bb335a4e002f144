"""Optimal code-length construction and canonical code machinery.

A canonical code is fully described by its per-symbol codeword lengths
(the level sequence): within each level the symbols appear in ascending
order, consecutive codewords at a level are consecutive integers, and a
shorter codeword, padded to the maximum length, is numerically smaller
than any longer one.  Decoding therefore reduces to a predecessor
search over the padded per-level first codewords.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .corpus import FrequencyTable
from .errors import CorruptStreamError, InfeasibleLengthsError

PHI = (1 + math.sqrt(5)) / 2
MAX_CODE_LENGTH = 63


@dataclass(frozen=True)
class CodeLengths:
    """Per-symbol codeword lengths of a prefix code."""

    lengths: tuple

    def __post_init__(self):
        if len(self.lengths) == 0:
            raise ValueError("length vector must be non-empty")
        for l in self.lengths:
            if not 1 <= l <= MAX_CODE_LENGTH:
                raise ValueError(f"code length {l} out of [1, {MAX_CODE_LENGTH}]")

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def lmax(self) -> int:
        return max(self.lengths)

    def kraft_numerator(self) -> int:
        """Kraft sum scaled by 2^lmax (exact integer arithmetic)."""
        lmax = self.lmax
        return sum(1 << (lmax - l) for l in self.lengths)

    def kraft_sum(self) -> float:
        return self.kraft_numerator() / (1 << self.lmax)

    def is_kraft_feasible(self) -> bool:
        return self.kraft_numerator() <= (1 << self.lmax)


def _pick(leaves, nodes, li, ni):
    """Index pair advance for the two-queue Huffman merge.

    Returns ("leaf"|"node", weight).  On equal weights the merged-node
    queue wins: internal nodes are consumed in FIFO creation order and
    preferred over a leaf of the same weight.
    """
    if li < len(leaves) and (ni >= len(nodes) or leaves[li][0] < nodes[ni][0]):
        return "leaf"
    return "node"


def huffman_lengths(freq: FrequencyTable) -> CodeLengths:
    """Optimal prefix-code lengths via the two-queue Huffman merge.

    Deterministic: leaves are ordered by (count, symbol); on weight ties
    the internal-node queue is preferred.
    """
    n = freq.n
    if n == 1:
        return CodeLengths(lengths=(1,))
    counts = np.asarray(freq.counts)
    order = sorted(range(n), key=lambda i: (counts[i], i))
    leaves = [(int(counts[i]), i) for i in order]
    nodes = []       # (weight, left_item, right_item) in creation order
    li = ni = 0
    children = []    # per merged node: two items ("leaf", sym) / ("node", idx)
    for _ in range(n - 1):
        pair = []
        for _ in range(2):
            if _pick(leaves, nodes, li, ni) == "leaf":
                w, sym = leaves[li]
                pair.append((w, ("leaf", sym)))
                li += 1
            else:
                w = nodes[ni][0]
                pair.append((w, ("node", ni)))
                ni += 1
        (wa, a), (wb, b) = pair
        nodes.append((wa + wb,))
        children.append((a, b))
    # root is the last created node; walk down assigning depths
    depth = [0] * len(children)
    lengths = [0] * n
    for idx in range(len(children) - 1, -1, -1):
        d = depth[idx]
        for kind, ref in children[idx]:
            if kind == "leaf":
                lengths[ref] = d + 1
            else:
                depth[ref] = d + 1
    return CodeLengths(lengths=tuple(lengths))


def katona_nemetz_bound(p: float) -> int:
    """Maximum Huffman codeword length for a symbol of probability p:
    floor(log_phi(1/p))."""
    if not 0 < p <= 1:
        raise ValueError("probability must be in (0, 1]")
    return int(math.floor(math.log(1 / p) / math.log(PHI) + 1e-12))


def avg_length(lengths: CodeLengths, freq: FrequencyTable) -> float:
    """Average codeword length in bits per symbol."""
    if lengths.n != freq.n:
        raise ValueError("alphabet size mismatch")
    counts = np.asarray(freq.counts, dtype=float)
    return float(np.dot(counts, np.asarray(lengths.lengths)) / freq.total)


@dataclass(frozen=True)
class CanonicalCode:
    """Canonical layout of a prefix code.

    levels:       occupied codeword lengths, ascending
    level_count:  leaves per occupied level
    first:        first codeword value per occupied level
    sR:           0-based index of the level's first leaf in leaf order
    padded_first: first values left-shifted to lmax bits
    lengths:      the level sequence (per-symbol lengths)
    """

    lengths: tuple
    lmax: int
    levels: tuple
    level_count: tuple
    first: tuple
    sR: tuple
    padded_first: tuple

    @property
    def n(self) -> int:
        return len(self.lengths)

    def level_index(self, ell: int) -> int:
        return self.levels.index(ell)

    def codewords(self):
        """Per-symbol (code, length) pairs; codeword of symbol i is
        first[l] plus the number of earlier symbols of the same length."""
        seen = dict.fromkeys(self.levels, 0)
        first_of = dict(zip(self.levels, self.first))
        out = []
        for l in self.lengths:
            out.append((first_of[l] + seen[l], l))
            seen[l] += 1
        return out

    def leaf_order(self):
        """Symbols sorted by (length, symbol): the Symb array."""
        n = self.n
        return sorted(range(n), key=lambda i: (self.lengths[i], i))


def canonicalize(lengths: CodeLengths) -> CanonicalCode:
    """Build the canonical code for a Kraft-feasible length vector."""
    if not lengths.is_kraft_feasible():
        raise InfeasibleLengthsError(
            f"Kraft sum {lengths.kraft_sum():.6f} exceeds 1")
    lmax = lengths.lmax
    cnt = [0] * (lmax + 1)
    for l in lengths.lengths:
        cnt[l] += 1
    levels, level_count, first, sR, padded = [], [], [], [], []
    code = 0
    leaf_base = 0
    for l in range(1, lmax + 1):
        if cnt[l]:
            levels.append(l)
            level_count.append(cnt[l])
            first.append(code)
            sR.append(leaf_base)
            padded.append(code << (lmax - l))
            leaf_base += cnt[l]
        code = (code + cnt[l]) << 1
    return CanonicalCode(lengths=tuple(lengths.lengths), lmax=lmax,
                         levels=tuple(levels), level_count=tuple(level_count),
                         first=tuple(first), sR=tuple(sR),
                         padded_first=tuple(padded))


def level_of(window: int, cc: CanonicalCode, strategy: str = "seq") -> int:
    """Length of the codeword starting a stream whose first lmax bits
    read as `window`: the level whose padded first value is the
    predecessor of the window."""
    padded = cc.padded_first
    if strategy == "bin":
        idx = bisect_right(padded, window) - 1
    else:
        idx = -1
        for i, p in enumerate(padded):
            if p > window:
                break
            idx = i
    if idx < 0:
        raise CorruptStreamError(
            f"window {window:0{cc.lmax}b} precedes every codeword")
    return cc.levels[idx]
