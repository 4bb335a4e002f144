"""
The compact code representation
===============================

The classical canonical decoder keeps two arrays of n entries (Codes
and Symb).  The compact representation replaces both with a wavelet
tree over the *level sequence* — the per-symbol code lengths — whose
entropy is tiny for realistic distributions.  Encoding becomes a rank,
decoding a select.
"""

from prefixcodes import (CompactCodec, TableCodec, frequencies,
                         huffman_lengths, model_size_report, zipf_generate)

# a Zipfian corpus like the ones used for text compression experiments
seq = zipf_generate(n=4096, N=200_000, s=1.1, seed=1)
freq = frequencies(seq)
lengths = huffman_lengths(freq)
print(f"alphabet {freq.n}, max code length {lengths.lmax}")

compact = CompactCodec(lengths)
table = TableCodec(lengths, variant="table_e")

# both codecs emit bit-identical streams
sample = list(seq.symbols[:5000])
assert compact.encode_all(sample) == table.encode_all(sample)
payload, nbits = compact.encode_all(sample)
assert compact.decode_all(payload, nbits, len(sample)) == sample
print(f"payload {nbits / len(sample):.3f} bits/symbol on a sample")

# the whole point: the model shrinks far below the classical arrays
report = model_size_report(compact)
print("\nmodel sizes (bits):")
print(f"  naive 32-bit lengths     {report['naive_bits']:>9}")
print(f"  canonical n*ceil(lg n)   {report['canonical_bits']:>9}")
print(f"  engineered n*lmax        {report['engineered_bits']:>9}")
print(f"  level-entropy floor      {report['level_entropy_bits']:>9.0f}")
print(f"  compact, serialized      {report['serialized_bits']:>9}")
print(f"  compact, resident        {report['resident_bits']:>9}")

table_bits = sum(table.resident_model_bits().values())
print(f"\ntable codec resident model: {table_bits} bits "
      f"({table_bits / report['resident_bits']:.1f}x the compact one)")
