"""Bit-level reader/writer."""

import random

import pytest

from prefixcodes.bitio import BitReader, BitWriter
from prefixcodes.errors import TruncatedStreamError


def test_msb_first_layout():
    w = BitWriter()
    w.write_bits(0b101, 3)
    w.write_bits(0b01, 2)
    w.write_bits(0xFF, 8)
    data = w.getvalue()
    assert w.bit_length == 13
    assert data == bytes([0b10101111, 0b11111000])


def test_roundtrip_random_fields():
    rng = random.Random(42)
    for _ in range(200):
        fields = [(rng.getrandbits(k), k)
                  for k in (rng.randint(1, 64) for _ in range(rng.randint(1, 50)))]
        w = BitWriter()
        for v, k in fields:
            w.write_bits(v, k)
        r = BitReader(w.getvalue(), w.bit_length)
        for v, k in fields:
            assert r.read_bits(k) == v
        assert r.remaining == 0


def test_peek_does_not_advance():
    w = BitWriter()
    w.write_bits(0b1101, 4)
    r = BitReader(w.getvalue(), 4)
    assert r.peek_bits(4) == 0b1101
    assert r.peek_bits(4) == 0b1101
    assert r.read_bits(4) == 0b1101


def test_peek_zero_pads_past_end():
    w = BitWriter()
    w.write_bits(0b11, 2)
    r = BitReader(w.getvalue(), 2)
    # peeking wider than the stream pads with zeros on the right
    assert r.peek_bits(8) == 0b11000000


def test_read_past_end_raises():
    w = BitWriter()
    w.write_bits(0b1, 1)
    r = BitReader(w.getvalue(), 1)
    r.read_bits(1)
    with pytest.raises(TruncatedStreamError):
        r.read_bits(1)


def test_skip_and_cursor():
    w = BitWriter()
    w.write_bits(0xABCD, 16)
    r = BitReader(w.getvalue(), 16)
    r.skip(4)
    assert r.cursor == 4
    assert r.read_bits(4) == 0xB


def test_final_byte_zero_padded():
    w = BitWriter()
    w.write_bits(1, 1)
    assert w.getvalue() == bytes([0b10000000])
