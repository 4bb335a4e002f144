"""Ingestion, densification, statistics, and synthetic corpora."""

import numpy as np
import pytest

from prefixcodes.corpus import (FrequencyTable, densify, emit, entropy,
                                frequencies, ingest, zipf_generate)
from prefixcodes.errors import EmptyInputError, ParseError


def test_densify_first_occurrence_order():
    seq = ingest(b"3 3 7 3")
    assert list(seq.symbols) == [0, 0, 1, 0]
    assert seq.n == 2
    assert seq.N == 4
    assert list(seq.remap) == [3, 7]


def test_singleton():
    seq = ingest(b"5")
    assert list(seq.symbols) == [0]
    assert seq.n == 1 and seq.N == 1


def test_u32_binary_identity_alphabet():
    raw = np.array([1, 2, 3], dtype="<u4").tobytes()
    seq = ingest(raw, "u32-binary")
    assert list(seq.symbols) == [0, 1, 2]
    assert seq.n == 3


def test_parse_error_carries_offset():
    with pytest.raises(ParseError) as exc:
        ingest(b"1 2 x 4")
    assert exc.value.byte_offset == 4


def test_empty_input():
    with pytest.raises(EmptyInputError):
        ingest(b"   ")
    with pytest.raises(EmptyInputError):
        ingest(b"", "u32-binary")


def test_u32_truncated():
    with pytest.raises(ParseError):
        ingest(b"\x01\x02\x03", "u32-binary")


def test_emit_restores_raw_values():
    raw = b"10 900 10 4 900"
    seq = ingest(raw)
    assert emit(seq) == raw
    seq2 = ingest(emit(seq, "u32-binary"), "u32-binary")
    assert np.array_equal(seq2.raw_values(), seq.raw_values())


def test_frequencies_and_entropy():
    seq = densify(np.array([0, 0, 1, 1]))
    freq = frequencies(seq)
    assert list(freq.counts) == [2, 2]
    assert entropy(freq) == pytest.approx(1.0)


def test_frequency_table_rejects_zero_counts():
    with pytest.raises(ValueError):
        FrequencyTable(counts=np.array([3, 0]), total=3)


def test_zipf_deterministic():
    a = zipf_generate(100, 5000, 1.1, seed=7)
    b = zipf_generate(100, 5000, 1.1, seed=7)
    assert np.array_equal(a.symbols, b.symbols)
    c = zipf_generate(100, 5000, 1.1, seed=8)
    assert not np.array_equal(a.symbols, c.symbols)


def test_zipf_skew():
    seq = zipf_generate(50, 20000, 1.5, seed=1)
    freq = frequencies(seq)
    # raw value 0 is the most frequent symbol under the skewed law
    raw = seq.raw_values()
    counts = np.bincount(raw)
    assert counts[0] == max(counts)
    assert entropy(freq) < np.log2(seq.n)
