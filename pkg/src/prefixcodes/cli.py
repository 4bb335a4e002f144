"""Command-line surface.

Subcommands: stats, compress, decompress, bench, limit-lengths,
gen-zipf.  Exit codes: 0 ok, 1 usage error, 2 data error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time

import numpy as np

from .alphabetic import hu_tucker_lengths
from .codecs import model_size_report, level_entropy
from .codes import avg_length, huffman_lengths
from .container import (SCHEME_NAMES, build_codec, compress, decompress,
                        read_container)
from .corpus import emit, entropy, frequencies, ingest, zipf_generate
from .errors import PrefixCodeError
from .length_limited import ALGORITHMS, ceil_lg, limit_lengths

_FMT = {"ascii": "ascii-ints", "u32": "u32-binary"}

BENCH_COLUMNS = ["scheme", "epsilon", "c", "lmax", "b", "s_sel",
                 "model_bits", "payload_bps", "avg_length", "entropy",
                 "redundancy_ratio", "encode_ns_per_symbol",
                 "decode_ns_per_symbol"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        return
    with open(path, "wb") as f:
        f.write(data)


def cmd_stats(args) -> int:
    seq = ingest(_read(args.input), _FMT[args.format])
    freq = frequencies(seq)
    lengths = huffman_lengths(freq)
    print(f"N        {seq.N}")
    print(f"n        {seq.n}")
    print(f"H(P)     {entropy(freq):.4f}")
    print(f"lmax     {lengths.lmax}")
    print(f"H0(L)    {level_entropy(lengths):.4f}")
    return 0


def cmd_compress(args) -> int:
    seq = ingest(_read(args.input), _FMT[args.format])
    blob = compress(seq, SCHEME_NAMES[args.scheme], epsilon=args.epsilon,
                    c=args.c, b=args.b, select_sampling=args.select_sampling,
                    search=args.search)
    _write(args.output, blob)
    freq = frequencies(seq)
    nbits = read_container(blob).payload_bits
    print(f"payload bits   {nbits}", file=sys.stderr)
    print(f"bits/symbol    {nbits / seq.N:.4f}", file=sys.stderr)
    print(f"entropy        {entropy(freq):.4f}", file=sys.stderr)
    print(f"container      {len(blob)} bytes", file=sys.stderr)
    return 0


def cmd_decompress(args) -> int:
    seq = decompress(_read(args.input), b=args.b,
                     select_sampling=args.select_sampling)
    _write(args.output, emit(seq, _FMT[args.format]))
    return 0


def _time_ns(fn, runs: int = 5) -> float:
    samples = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return statistics.median(samples)


_BENCH_SCHEMES = ("compact", "table", "table_s", "table_e",
                  "additive-compact", "additive-table", "mult", "alphabetic")


def _bench_cells(args):
    """(scheme, variant, params) grid cells; only the knobs a scheme
    reacts to are spanned."""
    for name in args.schemes.split(","):
        name = name.strip()
        if name not in _BENCH_SCHEMES:
            raise _UsageError(f"unknown bench scheme {name!r}")
        if name in ("compact", "additive-compact"):
            for s in args.select_sampling_grid:
                yield name, "table", {"s_sel": s}
        elif name in ("table", "table_s", "table_e", "additive-table"):
            variant = "table" if name == "additive-table" else name
            for b in args.b_grid:
                yield name, variant, {"b": b}
        elif name == "mult":
            for c in args.c_grid:
                yield name, "table", {"c": c}
        else:
            yield name, "table", {}


def _bench_row(name, variant, params, seq, freq, h, args):
    scheme_key = {"table_s": "table", "table_e": "table"}.get(name, name)
    epsilon = params.get("epsilon", args.epsilon)
    c = params.get("c", args.c)
    b = params.get("b", args.b)
    s_sel = params.get("s_sel", args.select_sampling)
    codec, _ = build_codec(seq, SCHEME_NAMES[scheme_key], epsilon=epsilon,
                           c=c, b=b, select_sampling=s_sel,
                           search=args.search, variant=variant)
    symbols = seq.symbols
    payload, nbits = codec.encode_all(symbols)
    enc_ns = _time_ns(lambda: codec.encode_all(symbols)) / seq.N
    dec_ns = _time_ns(
        lambda: codec.decode_all(payload, nbits, seq.N)) / seq.N
    avg = nbits / seq.N
    report = model_size_report(codec)
    return {
        "scheme": name,
        "epsilon": epsilon if scheme_key.startswith("additive") else "",
        "c": c if scheme_key == "mult" else "",
        "lmax": codec.lmax,
        "b": b if "table" in name else "",
        "s_sel": s_sel if "compact" in name else "",
        "model_bits": report["resident_bits"],
        "payload_bps": f"{avg:.6f}",
        "avg_length": f"{avg:.6f}",
        "entropy": f"{h:.6f}",
        "redundancy_ratio": f"{avg / h:.6f}" if h > 0 else "inf",
        "encode_ns_per_symbol": f"{enc_ns:.1f}",
        "decode_ns_per_symbol": f"{dec_ns:.1f}",
    }


def cmd_bench(args) -> int:
    seq = ingest(_read(args.input), _FMT[args.format])
    freq = frequencies(seq)
    h = entropy(freq)
    out = (open(args.output, "w", newline="")
           if args.output != "-" else sys.stdout)
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        for name, variant, params in _bench_cells(args):
            writer.writerow(_bench_row(name, variant, params, seq, freq, h,
                                       args))
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_limit_lengths(args) -> int:
    seq = ingest(_read(args.input), _FMT[args.format])
    freq = frequencies(seq)
    h = entropy(freq)
    base = huffman_lengths(freq)
    lo = args.lmax_min if args.lmax_min else ceil_lg(freq.n)
    hi = args.lmax_max if args.lmax_max else base.lmax
    lo = max(lo, ceil_lg(freq.n), 1)
    out = (open(args.output, "w", newline="")
           if args.output != "-" else sys.stdout)
    try:
        writer = csv.writer(out)
        writer.writerow(["algorithm", "lmax", "avg_length", "redundancy"])
        huff_avg = avg_length(base, freq)
        writer.writerow(["huffman", base.lmax, f"{huff_avg:.6f}",
                         f"{huff_avg - h:.6f}"])
        ht_avg = avg_length(hu_tucker_lengths(freq), freq)
        writer.writerow(["hu-tucker", "", f"{ht_avg:.6f}",
                         f"{ht_avg - h:.6f}"])
        for algo in ALGORITHMS:
            for lmax in range(lo, hi + 1):
                lengths = limit_lengths(freq, lmax, algo)
                avg = avg_length(lengths, freq)
                writer.writerow([algo, lmax, f"{avg:.6f}",
                                 f"{avg - h:.6f}"])
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_gen_zipf(args) -> int:
    seq = zipf_generate(args.n, args.N, args.s, args.seed)
    _write(args.output, emit(seq, _FMT[args.format]))
    return 0


def _build_parser() -> _Parser:
    p = _Parser(prog="prefix-codes",
                description="Compact prefix-code representations: build, "
                            "compress, benchmark.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, output_default="-"):
        sp.add_argument("--format", choices=("ascii", "u32"),
                        default="ascii")
        sp.add_argument("--output", "-o", default=output_default)

    sp = sub.add_parser("stats", help="corpus statistics")
    sp.add_argument("input")
    sp.add_argument("--format", choices=("ascii", "u32"), default="ascii")
    sp.set_defaults(fn=cmd_stats)

    sp = sub.add_parser("compress", help="write a container")
    sp.add_argument("input")
    common(sp)
    sp.add_argument("--scheme", choices=sorted(SCHEME_NAMES),
                    default="compact")
    sp.add_argument("--epsilon", type=float, default=0.1)
    sp.add_argument("--c", type=float, default=2.0)
    sp.add_argument("--lmax", type=int, default=None)
    sp.add_argument("--b", type=int, default=14)
    sp.add_argument("--select-sampling", type=int, default=32,
                    choices=(16, 32, 64, 128))
    sp.add_argument("--search", choices=("seq", "bin"), default="seq")
    sp.set_defaults(fn=cmd_compress)

    sp = sub.add_parser("decompress", help="restore the raw stream")
    sp.add_argument("input")
    common(sp)
    sp.add_argument("--b", type=int, default=14)
    sp.add_argument("--select-sampling", type=int, default=32,
                    choices=(16, 32, 64, 128))
    sp.set_defaults(fn=cmd_decompress)

    sp = sub.add_parser("bench", help="benchmark CSV over a scheme grid")
    sp.add_argument("input")
    common(sp)
    sp.add_argument("--schemes", default=",".join(_BENCH_SCHEMES))
    sp.add_argument("--epsilon", type=float, default=0.1)
    sp.add_argument("--c", type=float, default=2.0)
    sp.add_argument("--b", type=int, default=14)
    sp.add_argument("--select-sampling", type=int, default=32)
    sp.add_argument("--search", choices=("seq", "bin"), default="seq")
    sp.add_argument("--select-sampling-grid", type=lambda s: [
        int(x) for x in s.split(",")], default=[16, 32, 64, 128])
    sp.add_argument("--b-grid", type=lambda s: [int(x) for x in s.split(",")],
                    default=[14])
    sp.add_argument("--c-grid", type=lambda s: [
        float(x) for x in s.split(",")], default=[1.5, 1.75, 2.0, 3.0])
    sp.set_defaults(fn=cmd_bench)

    sp = sub.add_parser("limit-lengths",
                        help="redundancy vs lmax per algorithm, CSV")
    sp.add_argument("input")
    common(sp)
    sp.add_argument("--lmax-min", type=int, default=None)
    sp.add_argument("--lmax-max", type=int, default=None)
    sp.set_defaults(fn=cmd_limit_lengths)

    sp = sub.add_parser("gen-zipf", help="synthetic Zipf corpus")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--s", type=float, default=1.1)
    sp.add_argument("--seed", type=int, default=1)
    sp.set_defaults(fn=cmd_gen_zipf)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError,) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except PrefixCodeError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
