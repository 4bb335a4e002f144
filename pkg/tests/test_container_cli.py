"""Container format and command-line interface."""

import csv
import random

import numpy as np
import pytest

from prefixcodes.cli import main
from prefixcodes.container import (SCHEME_NAMES, compress, decompress,
                                   read_container)
from prefixcodes.corpus import densify, emit, ingest, zipf_generate
from prefixcodes.errors import ContainerFormatError
from prefixcodes.leb128 import decode_uvarint, encode_uvarint


def test_uvarint_roundtrip():
    rng = random.Random(51)
    for v in [0, 1, 127, 128, 300, 2 ** 32, 2 ** 63] + [
            rng.getrandbits(40) for _ in range(50)]:
        data = encode_uvarint(v)
        got, off = decode_uvarint(data)
        assert (got, off) == (v, len(data))
    with pytest.raises(ContainerFormatError):
        decode_uvarint(b"\x80\x80")


def test_container_roundtrip_all_schemes():
    rng = random.Random(52)
    for scheme in SCHEME_NAMES.values():
        for _ in range(4):
            n = rng.randint(2, 60)
            raw = np.array([rng.randrange(n) * 7 for _ in range(500)])
            seq = densify(raw)
            blob = compress(seq, scheme, epsilon=0.25, c=2.0)
            out = decompress(blob)
            assert np.array_equal(out.raw_values(), raw)


def test_decode_knobs_do_not_change_output():
    seq = zipf_generate(100, 3000, 1.2, seed=4)
    blob = compress(seq, SCHEME_NAMES["table"])
    ref = decompress(blob).raw_values()
    for b in (4, 10, 14):
        for s_sel in (16, 32, 64, 128):
            for variant in ("table", "table_s", "table_e"):
                got = decompress(blob, b=b, select_sampling=s_sel,
                                 variant=variant).raw_values()
                assert np.array_equal(got, ref)


def test_container_header_fields():
    seq = zipf_generate(80, 2000, 1.1, seed=5)
    blob = compress(seq, SCHEME_NAMES["compact"])
    assert blob[:4] == b"PFXC"
    info = read_container(blob)
    assert info.n == seq.n and info.N == seq.N


def test_container_rejects_garbage():
    with pytest.raises(ContainerFormatError):
        read_container(b"NOPE" + b"\x00" * 10)
    seq = zipf_generate(30, 500, 1.1, seed=6)
    blob = compress(seq, SCHEME_NAMES["compact"])
    with pytest.raises(ContainerFormatError):
        read_container(blob[:20])


def test_cli_roundtrip(tmp_path):
    raw = tmp_path / "in.txt"
    packed = tmp_path / "out.pfxc"
    back = tmp_path / "back.txt"
    raw.write_bytes(b"5 5 5 9 9 2 5 5 9 2 2 5")
    for scheme in SCHEME_NAMES:
        assert main(["compress", str(raw), "--scheme", scheme,
                     "-o", str(packed)]) == 0
        assert main(["decompress", str(packed), "-o", str(back)]) == 0
        assert ingest(back.read_bytes()).raw_values().tolist() == \
            ingest(raw.read_bytes()).raw_values().tolist()


def test_cli_stats_uniform(tmp_path, capsys):
    path = tmp_path / "uniform.txt"
    path.write_text("0 1 2 3 " * 25)
    assert main(["stats", str(path)]) == 0
    out = capsys.readouterr().out
    fields = dict(line.split() for line in out.strip().splitlines())
    assert fields["N"] == "100" and fields["n"] == "4"
    assert float(fields["H(P)"]) == pytest.approx(2.0)
    assert fields["lmax"] == "2"
    assert float(fields["H0(L)"]) == pytest.approx(0.0)


def test_cli_dyadic_payload_equals_entropy(tmp_path):
    # counts 4,2,1,1 -> dyadic distribution, payload bits = N * H(P)
    raw = tmp_path / "dyadic.txt"
    raw.write_bytes(b" ".join(
        [b"0"] * 4 + [b"1"] * 2 + [b"2"] + [b"3"]))
    packed = tmp_path / "d.pfxc"
    assert main(["compress", str(raw), "--scheme", "table",
                 "-o", str(packed)]) == 0
    info = read_container(packed.read_bytes())
    assert info.payload_bits == 4 * 1 + 2 * 2 + 3 + 3   # = 8 * 1.75


def test_cli_exit_codes(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"not numbers")
    assert main(["stats", str(bad)]) == 2              # data error
    assert main(["stats", str(tmp_path / "missing.txt")]) == 3   # I/O
    ok = tmp_path / "ok.txt"
    ok.write_bytes(b"1 2 3")
    assert main(["compress", str(ok), "--scheme", "nope"]) == 1  # usage


def test_cli_gen_zipf_deterministic(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    for path in (a, b):
        assert main(["gen-zipf", "--n", "64", "--N", "1000", "--s", "1.1",
                     "--seed", "9", "-o", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_limit_lengths_csv(tmp_path):
    raw = tmp_path / "in.txt"
    seq = zipf_generate(40, 4000, 1.3, seed=3)
    raw.write_bytes(emit(seq))
    out = tmp_path / "study.csv"
    assert main(["limit-lengths", str(raw), "-o", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    algos = {r["algorithm"] for r in rows}
    assert {"huffman", "hu-tucker", "optimal", "milidiu", "increase",
            "increase_a", "balance"} <= algos
    huff = next(r for r in rows if r["algorithm"] == "huffman")
    # every curve collapses to Huffman redundancy at the Huffman height
    for algo in ("optimal", "milidiu", "increase", "balance"):
        tail = [r for r in rows if r["algorithm"] == algo
                and r["lmax"] == huff["lmax"]]
        assert len(tail) == 1
        assert float(tail[0]["avg_length"]) == pytest.approx(
            float(huff["avg_length"]))
    # the optimal curve lower-bounds every heuristic pointwise
    opt = {r["lmax"]: float(r["avg_length"]) for r in rows
           if r["algorithm"] == "optimal"}
    for r in rows:
        if r["algorithm"] in ("milidiu", "increase", "increase_a",
                              "balance"):
            assert float(r["avg_length"]) >= opt[r["lmax"]] - 1e-9


def test_cli_bench_csv(tmp_path):
    raw = tmp_path / "in.txt"
    seq = zipf_generate(60, 3000, 1.2, seed=8)
    raw.write_bytes(emit(seq))
    out = tmp_path / "bench.csv"
    assert main(["bench", str(raw), "--schemes", "compact,table,mult",
                 "--select-sampling-grid", "32", "--c-grid", "2.0",
                 "-o", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert [r["scheme"] for r in rows] == ["compact", "table", "mult"]
    for r in rows:
        assert float(r["payload_bps"]) >= float(r["entropy"]) - 1e-9
        assert float(r["redundancy_ratio"]) >= 1 - 1e-9
    exact = [r for r in rows if r["scheme"] in ("compact", "table")]
    for r in exact:
        assert float(r["payload_bps"]) < float(r["entropy"]) + 1
