"""Independent reference implementations used to check the library.

Everything here is deliberately brute-force: exhaustive search over
Kraft-feasible length vectors, interval dynamic programming for
alphabetic trees, and naive scans for rank/select.
"""

import math


def exhaustive_min_total(counts, lmax):
    """Minimum of sum(count_i * length_i) over Kraft-feasible length
    vectors with lengths <= lmax, by pruned depth-first search.

    The optimum always pairs larger counts with shorter lengths, so the
    search enumerates non-decreasing length vectors against counts
    sorted in descending order.
    """
    cs = sorted(counts, reverse=True)
    n = len(cs)
    if n == 1:
        return cs[0]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + cs[i]
    best = [math.inf]

    def rec(i, prev_len, kraft_left, acc):
        if i == n:
            best[0] = min(best[0], acc)
            return
        rem = n - i
        for l in range(prev_len, lmax + 1):
            unit = 1 << (lmax - l)
            if kraft_left - unit < rem - 1:
                continue                   # later symbols cannot fit
            cost = acc + cs[i] * l
            if cost + suffix[i + 1] * l >= best[0]:
                break                      # longer l only costs more
            rec(i + 1, l, kraft_left - unit, cost)

    rec(0, 1, 1 << lmax, 0)
    return best[0]


def alphabetic_min_total(counts):
    """Minimum weighted path length over all alphabetic (order-
    preserving) binary trees; interval dynamic programming."""
    n = len(counts)
    if n == 1:
        return counts[0]
    prefix = [0]
    for c in counts:
        prefix.append(prefix[-1] + c)
    cost = [[0] * n for _ in range(n)]
    for span in range(1, n):
        for i in range(n - span):
            j = i + span
            cost[i][j] = (min(cost[i][k] + cost[k + 1][j]
                              for k in range(i, j))
                          + prefix[j + 1] - prefix[i])
    return cost[0][n - 1]


def naive_rank(bits, b, i):
    return sum(1 for x in bits[:i] if x == b)


def naive_select(bits, b, j):
    seen = 0
    for pos, x in enumerate(bits):
        if x == b:
            seen += 1
            if seen == j:
                return pos
    raise ValueError("not enough occurrences")
