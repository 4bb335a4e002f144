"""Optimal alphabetic codes."""

import random

import numpy as np
import pytest

from oracles import alphabetic_min_total
from prefixcodes.alphabetic import (AlphabeticCodec, alphabetic_codewords,
                                    build_alphabetic, hu_tucker_lengths,
                                    optimal_alphabetic_cost)
from prefixcodes.codes import avg_length, huffman_lengths
from prefixcodes.corpus import FrequencyTable


def _table(counts):
    return FrequencyTable(counts=np.array(counts), total=int(sum(counts)))


def test_matches_interval_dp():
    rng = random.Random(41)
    for _ in range(150):
        n = rng.randint(1, 11)
        counts = [rng.randint(1, 8) for _ in range(n)]   # tie-heavy
        lengths = hu_tucker_lengths(_table(counts))
        got = sum(c * l for c, l in zip(counts, lengths.lengths))
        assert got == alphabetic_min_total(counts)
        assert optimal_alphabetic_cost(_table(counts)) == got


def test_codewords_are_ordered_and_prefix_free():
    rng = random.Random(42)
    for _ in range(60):
        n = rng.randint(2, 25)
        counts = [rng.randint(1, 99) for _ in range(n)]
        lengths = hu_tucker_lengths(_table(counts))
        codes = alphabetic_codewords(lengths)
        strs = [f"{c:0{l}b}" for c, l in codes]
        for a, b in zip(strs, strs[1:]):
            assert a < b                    # lexicographic symbol order
            assert not b.startswith(a) and not a.startswith(b)


def test_roundtrip_and_serialization():
    rng = random.Random(43)
    for _ in range(40):
        n = rng.randint(2, 60)
        counts = [rng.randint(1, 500) for _ in range(n)]
        codec = build_alphabetic(_table(counts))
        seq = [rng.randrange(n) for _ in range(200)]
        payload, nbits = codec.encode_all(seq)
        assert codec.decode_all(payload, nbits, len(seq)) == seq
        clone = AlphabeticCodec.from_model_bytes(codec.model_bytes())
        assert clone.decode_all(payload, nbits, len(seq)) == seq


def test_cost_bounds():
    rng = random.Random(44)
    for _ in range(80):
        n = rng.randint(2, 40)
        counts = [rng.randint(1, 400) for _ in range(n)]
        freq = _table(counts)
        alpha = avg_length(hu_tucker_lengths(freq), freq)
        opt = avg_length(huffman_lengths(freq), freq)
        p = freq.probabilities()
        h = float(-np.sum(p * np.log2(p)))
        assert opt - 1e-9 <= alpha <= opt + 1 + 1e-9
        assert alpha < h + 2


def test_uniform_is_balanced():
    lengths = hu_tucker_lengths(_table([7] * 8))
    assert lengths.lengths == (3,) * 8


def test_singleton():
    assert hu_tucker_lengths(_table([5])).lengths == (1,)
