"""
Canonical prefix codes from the ground up
=========================================

A prefix code is fully determined by its codeword lengths.  This script
builds an optimal code for a small frequency table, canonicalizes it,
and shows how a handful of per-level numbers replace the whole codebook.
"""

import numpy as np

from prefixcodes import (FrequencyTable, avg_length, canonicalize,
                         entropy, huffman_lengths)

# a skewed five-symbol alphabet
counts = np.array([8, 4, 2, 1, 1])
freq = FrequencyTable(counts=counts, total=int(counts.sum()))

lengths = huffman_lengths(freq)
print("optimal lengths:", lengths.lengths)
print(f"average length: {avg_length(lengths, freq):.3f} bits/symbol")
print(f"entropy:        {entropy(freq):.3f} bits/symbol")

# the canonical layout assigns consecutive codewords within each level;
# everything below is derived from the lengths alone
cc = canonicalize(lengths)
print("\nsymbol  length  codeword")
for i, (code, l) in enumerate(cc.codewords()):
    print(f"  {i}      {l}      {code:0{l}b}")

# per-level summary: the entire decoding model
print("\nlevel  count  first  first padded to lmax bits")
for l, cnt, first, padded in zip(cc.levels, cc.level_count, cc.first,
                                 cc.padded_first):
    print(f"  {l}      {cnt}     {first:>4}   {padded:0{cc.lmax}b}")

# decoding = predecessor search over the padded first values: peek lmax
# bits, find the level whose padded first codeword is the largest one
# not exceeding the window
print("\na window of", cc.lmax, "bits pins down the codeword length "
      "without a codebook")
