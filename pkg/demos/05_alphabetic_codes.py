"""
Alphabetic codes: order-preserving compression
==============================================

An alphabetic code keeps codewords in the same lexicographic order as
the symbols, so a decoder can binary-search instead of storing the
symbol permutation — and encoded strings compare like the originals.
The optimal construction costs at most one extra bit over Huffman.
"""

import numpy as np

from prefixcodes import (AlphabeticCodec, FrequencyTable, avg_length,
                         entropy, hu_tucker_lengths, huffman_lengths)

counts = np.array([25, 3, 9, 14, 2, 30, 7, 10])
freq = FrequencyTable(counts=counts, total=int(counts.sum()))

lengths = hu_tucker_lengths(freq)
codec = AlphabeticCodec(lengths)
print("symbol  count  length  codeword")
for i, (code, l) in enumerate(codec.codes):
    print(f"  {i}     {counts[i]:>4}    {l}     {code:0{l}b}")

# codewords increase with the symbol: comparisons survive encoding
padded = [code << (codec.lmax - l) for code, l in codec.codes]
assert padded == sorted(padded)
print("\ncodeword order == symbol order (encoded data stays sortable)")

h = entropy(freq)
alpha = avg_length(lengths, freq)
opt = avg_length(huffman_lengths(freq), freq)
print(f"\nentropy {h:.4f} <= optimal {opt:.4f} <= alphabetic {alpha:.4f}"
      f" <= optimal + 1 and < entropy + 2")

# roundtrip
rng = np.random.default_rng(3)
sample = list(rng.integers(0, freq.n, 1000))
payload, nbits = codec.encode_all(sample)
assert codec.decode_all(payload, nbits, len(sample)) == sample
print("roundtrip OK")
