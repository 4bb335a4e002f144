"""Prefix codes with a hard ceiling on codeword length.

One optimal constructor (package-merge) and four heuristics:

  * milidiu:   truncate the Huffman tree at the ceiling, refill the
               freed slots with the deepest displaced symbols, and hang
               the rest as a balanced subtree over the cheapest victim
               subtree; carries a closed-form redundancy guarantee.
  * increase / increase_a:  raise (clamp to f / add f) the smallest
               frequencies until the Huffman tree fits, searching f
               exponentially then by bisection.
  * balance:   rebalance the subtree hanging off the rightmost path of
               the canonical tree that overflows the ceiling.

All return Kraft-feasible length vectors with max length <= lmax.
"""

from __future__ import annotations

import numpy as np

from .codes import CodeLengths, PHI, canonicalize, huffman_lengths
from .corpus import FrequencyTable
from .errors import InfeasibleLengthsError

ALGORITHMS = ("optimal", "milidiu", "increase", "increase_a", "balance")


def ceil_lg(n: int) -> int:
    """Smallest k with 2^k >= n."""
    return (n - 1).bit_length() if n >= 1 else 0


def _require_feasible(n: int, lmax: int) -> None:
    if lmax < ceil_lg(n) or lmax < 1:
        raise InfeasibleLengthsError(
            f"lmax={lmax} cannot host {n} symbols (needs >= {max(ceil_lg(n), 1)})")


def milidiu_bound(n: int, lmax: int) -> float:
    """Closed-form redundancy guarantee of the milidiu constructor:
    1/phi^(lmax - ceil(lg(n + ceil(lg n) - lmax)) - 1)."""
    arg = max(n + ceil_lg(n) - lmax, 1)
    return 1.0 / PHI ** (lmax - ceil_lg(arg) - 1)


def limit_lengths(freq: FrequencyTable, lmax: int, algo: str) -> CodeLengths:
    """Dispatch by algorithm name."""
    if algo == "optimal":
        return limit_optimal(freq, lmax)
    if algo == "milidiu":
        return limit_milidiu(freq, lmax)
    if algo == "increase":
        return limit_increase(freq, lmax, additive=False)
    if algo in ("increase_a", "increase-a"):
        return limit_increase(freq, lmax, additive=True)
    if algo == "balance":
        return limit_balance(freq, lmax)
    raise ValueError(f"unknown algorithm {algo!r}; pick from {ALGORITHMS}")


# ---------------------------------------------------------------------------
# Optimal: package-merge (binary coin collector)

def limit_optimal(freq: FrequencyTable, lmax: int) -> CodeLengths:
    """Minimum average length among prefix codes with max length <= lmax,
    via package-merge over lmax levels; O(n * lmax)."""
    n = freq.n
    _require_feasible(n, lmax)
    if n == 1:
        return CodeLengths(lengths=(1,))
    counts = np.asarray(freq.counts)
    order = sorted(range(n), key=lambda i: (counts[i], i))
    weights = [int(counts[i]) for i in order]

    # lists[l] holds (weight, is_leaf) merged items for level l (1-based);
    # leaves win ties so packages inherit deterministic creation order
    def merge_with_leaves(packages):
        out = []
        li = pi = 0
        while li < n or pi < len(packages):
            if pi >= len(packages) or (li < n and weights[li] <= packages[pi]):
                out.append((weights[li], True))
                li += 1
            else:
                out.append((packages[pi], False))
                pi += 1
        return out

    lists = [None] * (lmax + 1)
    lists[lmax] = [(w, True) for w in weights]
    for l in range(lmax - 1, 0, -1):
        prev = lists[l + 1]
        packages = [prev[2 * i][0] + prev[2 * i + 1][0]
                    for i in range(len(prev) // 2)]
        lists[l] = merge_with_leaves(packages)

    # select the first 2n-2 items of the level-1 list and expand packages
    lengths_sorted = [0] * n
    take = 2 * n - 2
    for l in range(1, lmax + 1):
        if take == 0:
            break
        items = lists[l][:take]
        if len(items) < take:
            raise InfeasibleLengthsError(
                f"package-merge ran out of items at level {l}")
        leaves_taken = sum(1 for _, is_leaf in items if is_leaf)
        # the leaves taken are the smallest-weight ones
        for i in range(leaves_taken):
            lengths_sorted[i] += 1
        take = 2 * (take - leaves_taken)
    lengths = [0] * n
    for rank, i in enumerate(order):
        lengths[i] = lengths_sorted[rank]
    return CodeLengths(lengths=tuple(lengths))


# ---------------------------------------------------------------------------
# Milidiu-Laber

def _balanced_lengths(freq: FrequencyTable) -> CodeLengths:
    """Complete binary tree over the whole alphabet; the shallow slots go
    to the most probable symbols."""
    n = freq.n
    if n == 1:
        return CodeLengths(lengths=(1,))
    h = ceil_lg(n)
    shallow = (1 << h) - n          # leaves at depth h-1
    counts = np.asarray(freq.counts)
    by_prob = sorted(range(n), key=lambda i: (-counts[i], i))
    lengths = [0] * n
    for rank, i in enumerate(by_prob):
        lengths[i] = h - 1 if rank < shallow else h
    return CodeLengths(lengths=tuple(lengths))


def _complete_tree_depths(r: int):
    """Leaf depths of a complete binary tree with r leaves, relative to
    its root: (count at h, count at h-1, h) with h = ceil(lg r)."""
    h = ceil_lg(r)
    deep = 2 * r - (1 << h)
    return deep, (1 << h) - r, h


def limit_milidiu(freq: FrequencyTable, lmax: int) -> CodeLengths:
    """Milidiu-Laber length restriction on the canonical Huffman tree.

    Symbols deeper than lmax are displaced: the deepest ones refill the
    leaf slots freed at depth lmax by the truncation, the rest form a
    complete subtree of height h that replaces the lightest eligible
    node at depth lmax - h - 1 (whose former subtree is pushed down one
    level).
    """
    n = freq.n
    _require_feasible(n, lmax)
    base = huffman_lengths(freq)
    if base.lmax <= lmax:
        return base
    counts = np.asarray(freq.counts)
    lengths = list(base.lengths)

    kept = [i for i in range(n) if lengths[i] <= lmax]
    removed = sorted((i for i in range(n) if lengths[i] > lmax),
                     key=lambda i: (-lengths[i], i))

    # internal nodes per depth of the canonical tree (full, Kraft = 1)
    dmax = base.lmax
    cnt = [0] * (dmax + 1)
    for l in lengths:
        cnt[l] += 1
    nodes = cnt[dmax]
    internal_at = [0] * (dmax + 1)
    for d in range(dmax - 1, -1, -1):
        internal_at[d] = nodes // 2
        nodes = cnt[d] + internal_at[d]
    slots = internal_at[lmax]

    new_lengths = list(lengths)
    filled = removed[:slots]
    for i in filled:
        new_lengths[i] = lmax
    rest = removed[slots:]
    if not rest:
        return CodeLengths(lengths=tuple(new_lengths))

    deep, shallow, h = _complete_tree_depths(len(rest))
    d_star = lmax - h - 1
    victim = _lightest_subtree(kept + filled, new_lengths, counts,
                               d_star, lmax) if d_star >= 1 else None
    if victim is None:
        return _balanced_lengths(freq)
    for i in victim:
        new_lengths[i] += 1
    by_prob = sorted(rest, key=lambda i: (-counts[i], i))
    for rank, i in enumerate(by_prob):
        new_lengths[i] = lmax - 1 if rank < shallow else lmax
    out = CodeLengths(lengths=tuple(new_lengths))
    if not out.is_kraft_feasible() or out.lmax > lmax:
        return _balanced_lengths(freq)
    return out


def _lightest_subtree(members, lengths, counts, d_star, lmax):
    """Symbols under the minimum-probability depth-d_star node of the
    canonical tree over `members` whose subtree can sink one level
    without breaking the ceiling; None if no node qualifies."""
    sub_lengths = CodeLengths(lengths=tuple(lengths[i] for i in members))
    cc = canonicalize(sub_lengths)
    codes = cc.codewords()
    groups = {}
    for local, i in enumerate(members):
        code, l = codes[local]
        if l < d_star:
            continue
        x = code >> (l - d_star)
        weight, depth, syms = groups.get(x, (0, 0, []))
        groups[x] = (weight + int(counts[i]), max(depth, l), syms + [i])
    best = None
    for x in sorted(groups):
        weight, depth, syms = groups[x]
        if depth + 1 > lmax:
            continue
        if best is None or weight < best[0]:
            best = (weight, syms)
    return None if best is None else best[1]


# ---------------------------------------------------------------------------
# Increase / Increase-A

def limit_increase(freq: FrequencyTable, lmax: int,
                   additive: bool = False) -> CodeLengths:
    """Raise small frequencies until the Huffman tree fits.

    Clamp variant sets counts below f to f; the additive variant adds f
    to every count.  f is located by exponential search then bisection;
    feasibility is rechecked afterwards in case height is not monotone
    in f under the fixed tie-breaking.
    """
    n = freq.n
    _require_feasible(n, lmax)
    base = huffman_lengths(freq)
    if base.lmax <= lmax:
        return base
    counts = np.asarray(freq.counts, dtype=np.int64)

    def modified(f):
        c = counts + f if additive else np.maximum(counts, f)
        return FrequencyTable(counts=c, total=int(c.sum()))

    def attempt(f):
        return huffman_lengths(modified(f))

    def feasible(f):
        return attempt(f).lmax <= lmax

    f = 2
    while not feasible(f):
        f *= 2
        if f > int(counts.sum()) * 2 + 4:
            raise InfeasibleLengthsError(
                f"no frequency boost reaches height {lmax}")
    lo, hi = f // 2, f          # feasible at hi, infeasible at lo (or lo < 2)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid < 2 or not feasible(mid):
            lo = mid
        else:
            hi = mid
    while not feasible(hi):     # monotonicity is an assumption, not a theorem
        hi += 1
    return attempt(hi)


# ---------------------------------------------------------------------------
# Balance

def limit_balance(freq: FrequencyTable, lmax: int) -> CodeLengths:
    """Rebalance the overflowing right-spine subtree of the canonical
    Huffman tree: the parent of the highest all-ones-prefix node that
    cannot fit below lmax even when perfectly balanced is replaced by a
    complete subtree over its leaves."""
    n = freq.n
    _require_feasible(n, lmax)
    base = huffman_lengths(freq)
    if base.lmax <= lmax:
        return base
    counts = np.asarray(freq.counts)
    lengths = list(base.lengths)
    codes = canonicalize(base).codewords()

    def spine_members(d):
        ones = (1 << d) - 1
        return [i for i in range(n)
                if lengths[i] >= d and codes[i][0] >> (lengths[i] - d) == ones]

    balance_at = None
    for d in range(1, base.lmax + 1):
        members = spine_members(d)
        if not members:
            break
        if d + ceil_lg(len(members)) > lmax:
            balance_at = d - 1
            break
    if balance_at is None:
        raise AssertionError("spine scan found no overflow despite lmax < height")
    members = spine_members(balance_at)
    deep, shallow, h = _complete_tree_depths(len(members))
    by_prob = sorted(members, key=lambda i: (-counts[i], i))
    for rank, i in enumerate(by_prob):
        lengths[i] = balance_at + (h - 1 if rank < shallow else h)
    return CodeLengths(lengths=tuple(lengths))
