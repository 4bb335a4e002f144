"""Space-efficient prefix code representations.

Canonical codes backed by a wavelet tree over the level sequence,
classical table-based codecs, length-limited constructors, additive and
multiplicative approximation schemes, and optimal alphabetic codes —
with a container format and CLI on top.
"""

from .alphabetic import (AlphabeticCodec, build_alphabetic,
                         hu_tucker_lengths, optimal_alphabetic_cost)
from .bitio import BitReader, BitWriter
from .codecs import (CompactCodec, DoubleHashTable, MultiplicativeCodec,
                     TableCodec, additive_length_limit, build_additive,
                     build_multiplicative, level_entropy, model_size_report,
                     multiplicative_length_limit)
from .codes import (CanonicalCode, CodeLengths, avg_length, canonicalize,
                    huffman_lengths, katona_nemetz_bound, level_of)
from .container import (SCHEME_NAMES, build_codec, compress, decompress,
                        read_container)
from .corpus import (FrequencyTable, SymbolSequence, densify, emit, entropy,
                     frequencies, ingest, zipf_generate)
from .errors import (ContainerFormatError, CorruptStreamError,
                     EmptyInputError, InfeasibleLengthsError, ParseError,
                     PrefixCodeError, TruncatedStreamError)
from .length_limited import (ALGORITHMS, limit_balance, limit_increase,
                             limit_lengths, limit_milidiu, limit_optimal,
                             milidiu_bound)
from .succinct import RankSelectBitVector, WaveletTree

__all__ = [
    "ALGORITHMS", "AlphabeticCodec", "BitReader", "BitWriter",
    "CanonicalCode", "CodeLengths", "CompactCodec", "ContainerFormatError",
    "CorruptStreamError", "DoubleHashTable", "EmptyInputError",
    "FrequencyTable", "InfeasibleLengthsError", "MultiplicativeCodec",
    "ParseError", "PrefixCodeError", "RankSelectBitVector", "SCHEME_NAMES",
    "SymbolSequence", "TableCodec", "TruncatedStreamError", "WaveletTree",
    "additive_length_limit", "avg_length", "build_additive",
    "build_alphabetic", "build_codec", "build_multiplicative",
    "canonicalize", "compress", "decompress", "densify", "emit", "entropy",
    "frequencies", "hu_tucker_lengths", "huffman_lengths", "ingest",
    "katona_nemetz_bound", "level_entropy", "level_of", "limit_balance",
    "limit_increase", "limit_lengths", "limit_milidiu", "limit_optimal",
    "milidiu_bound", "model_size_report", "multiplicative_length_limit",
    "optimal_alphabetic_cost", "read_container", "zipf_generate",
]
