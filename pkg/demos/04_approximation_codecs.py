"""
Trading average length for model size
=====================================

Two controlled ways to shrink the code model:

  * additive: pick a length cap so the average codeword length exceeds
    the optimum by at most epsilon — the model then needs only
    O(n log log(1/epsilon)) extra structure;
  * multiplicative: store nothing at all for infrequent symbols.  They
    get fixed-width codewords computed from their index, and the
    average length grows by at most a factor c.
"""

from prefixcodes import (avg_length, build_additive, build_multiplicative,
                         frequencies, huffman_lengths, zipf_generate)

seq = zipf_generate(n=2048, N=300_000, s=1.2, seed=11)
freq = frequencies(seq)
opt = avg_length(huffman_lengths(freq), freq)
print(f"n={freq.n}, optimal average length {opt:.4f}")

print("\nadditive guarantee: avg <= optimal + epsilon")
for eps in (0.49, 0.25, 0.1, 0.01):
    codec = build_additive(freq, eps)
    got = avg_length(codec.lengths, freq)
    print(f"  eps={eps:<5} lmax<={codec.length_limit:>2}  "
          f"avg={got:.4f}  (slack used: {got - opt:+.4f})")

print("\nmultiplicative guarantee: every codeword <= c x its optimal "
      "length")
base = huffman_lengths(freq)
for c in (1.5, 1.75, 2.0, 3.0):
    codec, fallback = build_multiplicative(freq, c)
    if fallback:
        print(f"  c={c}: fell back to the exact codec (too many "
              f"frequent symbols)")
        continue
    p = freq.probabilities()
    avg = sum(p[i] * codec.codeword_length(i) for i in range(freq.n))
    print(f"  c={c:<5} stores {codec.S} of {freq.n} symbols "
          f"(hash of {codec.hash.m} slots); avg {avg:.4f} "
          f"<= {c} x {opt:.4f}")

# roundtrip sanity on a slice of the corpus
codec, _ = build_multiplicative(freq, 2.0)
sample = list(seq.symbols[:20_000])
payload, nbits = codec.encode_all(sample)
assert codec.decode_all(payload, nbits, len(sample)) == sample
print(f"\nmultiplicative roundtrip OK at "
      f"{nbits / len(sample):.3f} bits/symbol")
