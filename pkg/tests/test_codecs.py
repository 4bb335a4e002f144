"""Compact, table, additive, and multiplicative codec behavior."""

import random

import numpy as np
import pytest

from prefixcodes.bitio import BitReader, BitWriter
from prefixcodes.codecs import (CompactCodec, DoubleHashTable,
                                MultiplicativeCodec, TableCodec,
                                additive_length_limit, build_additive,
                                build_multiplicative, level_entropy,
                                model_size_report,
                                multiplicative_length_limit)
from prefixcodes.codes import avg_length, huffman_lengths
from prefixcodes.corpus import FrequencyTable, frequencies, zipf_generate
from prefixcodes.errors import CorruptStreamError
from prefixcodes.length_limited import ceil_lg


def _table(counts):
    return FrequencyTable(counts=np.array(counts), total=int(sum(counts)))


def _random_freq(rng, lo=2, hi=40, cmax=1000):
    n = rng.randint(lo, hi)
    return _table([rng.randint(1, cmax) for _ in range(n)])


def test_compact_encode_matches_codewords():
    rng = random.Random(31)
    for _ in range(30):
        freq = _random_freq(rng)
        codec = CompactCodec(huffman_lengths(freq))
        codes = codec.cc.codewords()
        for i in range(freq.n):
            w = BitWriter()
            codec.encode(i, w)        # wavelet-tree path
            ref = BitWriter()
            ref.write_bits(*codes[i])
            assert (w.getvalue(), w.bit_length) == (ref.getvalue(),
                                                    ref.bit_length)


def test_compact_table_payloads_identical():
    rng = random.Random(32)
    for _ in range(25):
        freq = _random_freq(rng)
        lengths = huffman_lengths(freq)
        seq = [rng.randrange(freq.n) for _ in range(400)]
        compact = CompactCodec(lengths, search=rng.choice(["seq", "bin"]))
        ref = compact.encode_all(seq)
        assert compact.decode_all(*ref, len(seq)) == seq
        for variant in ("table", "table_s", "table_e"):
            tc = TableCodec(lengths, variant, b=rng.choice([3, 8, 14]))
            assert tc.encode_all(seq) == ref
            assert tc.decode_all(*ref, len(seq)) == seq


def test_table_e_single_probe_when_b_covers_lmax():
    freq = _table([8, 4, 2, 1, 1])
    tc = TableCodec(huffman_lengths(freq), "table_e", b=14)
    # every prefix resolves directly to a (symbol, length) entry
    assert all(e is not None for e in tc._entries)


def test_compact_serialization_roundtrip():
    rng = random.Random(33)
    for _ in range(20):
        freq = _random_freq(rng)
        codec = CompactCodec(huffman_lengths(freq))
        clone = CompactCodec.from_model_bytes(codec.model_bytes())
        assert clone.lengths == codec.lengths
        seq = [rng.randrange(freq.n) for _ in range(100)]
        assert clone.decode_all(*codec.encode_all(seq), len(seq)) == seq


def test_table_serialization_roundtrip():
    rng = random.Random(34)
    freq = _random_freq(rng)
    codec = TableCodec(huffman_lengths(freq))
    clone = TableCodec.from_model_bytes(codec.model_bytes(), "table_s")
    assert clone.lengths == codec.lengths


def test_corrupt_stream_detected():
    from prefixcodes.codes import CodeLengths
    codec = CompactCodec(CodeLengths(lengths=(2, 2, 2)))  # codeword 11 unused
    w = BitWriter()
    w.write_bits(0b11, 2)
    with pytest.raises(CorruptStreamError):
        codec.decode(BitReader(w.getvalue(), 2))


def test_additive_limit_formula():
    assert additive_length_limit(16, 0.49) == 4 + 2 + 1
    assert additive_length_limit(16, 0.01) == 4 + 10 + 1
    with pytest.raises(ValueError):
        additive_length_limit(16, 0.5)


def test_additive_guarantee():
    rng = random.Random(35)
    for eps in (0.49, 0.1):
        for _ in range(25):
            freq = _random_freq(rng, hi=200, cmax=5000)
            codec = build_additive(freq, eps,
                                   table=bool(rng.getrandbits(1)))
            opt = avg_length(huffman_lengths(freq), freq)
            assert avg_length(codec.lengths, freq) <= opt + eps + 1e-9
            assert codec.length_limit == additive_length_limit(freq.n, eps)
            assert codec.lmax <= codec.length_limit


def test_additive_optimal_backend_no_worse():
    rng = random.Random(36)
    for _ in range(15):
        freq = _random_freq(rng, hi=100)
        a = build_additive(freq, 0.1, backend="milidiu")
        b = build_additive(freq, 0.1, backend="optimal")
        assert (avg_length(b.lengths, freq)
                <= avg_length(a.lengths, freq) + 1e-12)


def test_double_hash_table():
    rng = random.Random(37)
    keys = rng.sample(range(10 ** 6), 300)
    ht = DoubleHashTable(len(keys))
    for v, k in enumerate(keys):
        ht.insert(k, v)
    for v, k in enumerate(keys):
        assert ht.get(k) == v
    assert ht.get(10 ** 6 + 1) is None
    # load factor stays under 0.7
    assert len(keys) / ht.m <= 0.7


def test_multiplicative_limit_formula():
    assert multiplicative_length_limit(16, 3) == 4 + 1 + 1
    assert multiplicative_length_limit(16, 1.5) == 4 + 2 + 1


def test_multiplicative_roundtrip_and_guarantee():
    rng = random.Random(38)
    direct = 0
    for _ in range(60):
        freq = _random_freq(rng, lo=8, hi=300, cmax=5000)
        c = rng.choice([1.5, 1.75, 2.0, 3.0])
        codec, fallback = build_multiplicative(freq, c)
        seq = [rng.randrange(freq.n) for _ in range(300)]
        payload, nbits = codec.encode_all(seq)
        assert codec.decode_all(payload, nbits, len(seq)) == seq
        if fallback:
            continue
        direct += 1
        base = huffman_lengths(freq)
        for i in range(freq.n):
            assert codec.codeword_length(i) <= c * base.lengths[i]
            assert codec.codeword_length(i) <= codec.lmax + 1
        assert codec.S < freq.n / 2
        clone = MultiplicativeCodec.from_model_bytes(codec.model_bytes(), c)
        assert clone.decode_all(payload, nbits, len(seq)) == seq
    assert direct > 0


def test_multiplicative_long_codeword_positional():
    counts = [5000, 2500, 1250] + [1] * 61
    freq = _table(counts)
    codec, fallback = build_multiplicative(freq, 2.0)
    assert not fallback
    # an infrequent symbol encodes as c'_long + index in lmax+1 bits
    i = 40
    assert codec.hash.get(i) is None
    w = BitWriter()
    codec.encode(i, w)
    assert w.bit_length == codec.lmax + 1
    r = BitReader(w.getvalue(), w.bit_length)
    assert r.peek_bits(codec.lmax + 1) == codec.c_long_prime + i


def test_model_size_report_keys():
    seq = zipf_generate(500, 20000, 1.2, seed=2)
    freq = frequencies(seq)
    codec = CompactCodec(huffman_lengths(freq))
    report = model_size_report(codec)
    n = freq.n
    assert report["naive_bits"] == 32 * n
    assert report["canonical_bits"] == n * ceil_lg(n)
    assert report["level_entropy_bits"] == pytest.approx(
        n * level_entropy(codec.lengths))
    assert report["serialized_bits"] == 8 * len(codec.model_bytes())
    assert report["resident_bits"] == sum(
        report["resident_breakdown"].values())
