"""
Length-limited codes: optimal vs heuristic
==========================================

Capping the maximum codeword length costs some average length.  This
script sweeps the cap from its feasibility floor up to the unrestricted
Huffman height and prints the redundancy of each constructor: the
package-merge optimum, two frequency-boosting heuristics, the
Milidiu-Laber truncation, and the subtree-balancing heuristic.
"""

import numpy as np

from prefixcodes import (avg_length, entropy, frequencies, huffman_lengths,
                         limit_lengths, milidiu_bound, zipf_generate)
from prefixcodes.length_limited import ALGORITHMS, ceil_lg

seq = zipf_generate(n=512, N=100_000, s=1.3, seed=5)
freq = frequencies(seq)
h = entropy(freq)
base = huffman_lengths(freq)
print(f"n={freq.n}, H(P)={h:.4f}, Huffman height {base.lmax}, "
      f"Huffman redundancy {avg_length(base, freq) - h:.5f}")

lo = ceil_lg(freq.n)
print(f"\nredundancy (avg - H) for lmax in [{lo}, {base.lmax}]:")
header = "lmax  " + "".join(f"{a:>12}" for a in ALGORITHMS)
print(header)
for lmax in range(lo, base.lmax + 1):
    row = [f"{lmax:>4}"]
    for algo in ALGORITHMS:
        lengths = limit_lengths(freq, lmax, algo)
        row.append(f"{avg_length(lengths, freq) - h:>12.5f}")
    print("  ".join(row))

# the Milidiu-Laber construction comes with a closed-form guarantee on
# its loss over the unrestricted optimum
print("\nMilidiu-Laber guarantee (loss over Huffman, not entropy):")
for lmax in range(lo, base.lmax + 1):
    got = (avg_length(limit_lengths(freq, lmax, "milidiu"), freq)
           - avg_length(base, freq))
    print(f"  lmax={lmax:>2}: measured {got:.6f} <= "
          f"bound {milidiu_bound(freq.n, lmax):.6f}")
