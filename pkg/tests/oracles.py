"""Independent reference implementations used only by the tests.

Each one is a direct transcription of a definition, sharing no code with
the package's DP kernels.
"""

from functools import lru_cache


def lev_naive(a, b):
    """Memoization-free recursion on (i, j) prefixes."""

    def rec(i, j):
        if min(i, j) == 0:
            return max(i, j)
        return min(
            rec(i - 1, j) + 1,
            rec(i, j - 1) + 1,
            rec(i - 1, j - 1) + (a[i - 1] != b[j - 1]),
        )

    return rec(len(a), len(b))


def osa_naive(a, b):
    """Restricted Damerau-Levenshtein recursion, memoization-free."""

    def rec(i, j):
        if min(i, j) == 0:
            return max(i, j)
        best = min(
            rec(i - 1, j) + 1,
            rec(i, j - 1) + 1,
            rec(i - 1, j - 1) + (a[i - 1] != b[j - 1]),
        )
        if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
            best = min(best, rec(i - 2, j - 2) + 1)
        return best

    return rec(len(a), len(b))


def lev_memo(a, b):
    @lru_cache(maxsize=None)
    def rec(i, j):
        if min(i, j) == 0:
            return max(i, j)
        return min(rec(i - 1, j) + 1, rec(i, j - 1) + 1, rec(i - 1, j - 1) + (a[i - 1] != b[j - 1]))

    return rec(len(a), len(b))


def osa_memo(a, b):
    @lru_cache(maxsize=None)
    def rec(i, j):
        if min(i, j) == 0:
            return max(i, j)
        best = min(rec(i - 1, j) + 1, rec(i, j - 1) + 1, rec(i - 1, j - 1) + (a[i - 1] != b[j - 1]))
        if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
            best = min(best, rec(i - 2, j - 2) + 1)
        return best

    return rec(len(a), len(b))


def hamming_positional(a, b):
    n = max(len(a), len(b))
    pad = object()  # never equal to any character
    pa = list(a) + [pad] * (n - len(a))
    pb = list(b) + [pad] * (n - len(b))
    return sum(1 for x, y in zip(pa, pb) if x is pad or y is pad or x != y)


def _anchor(a, b):
    # longest substring; earliest start in a, then earliest in b
    for size in range(min(len(a), len(b)), 0, -1):
        for i in range(len(a) - size + 1):
            j = b.find(a[i:i + size])
            if j >= 0:
                return i, j, size
    return 0, 0, 0


def gestalt_matches_oracle(a, b):
    if not a or not b:
        return 0
    i, j, k = _anchor(a, b)
    if k == 0:
        return 0
    return k + gestalt_matches_oracle(a[:i], b[:j]) + gestalt_matches_oracle(a[i + k:], b[j + k:])


def round_half_up(num, den):
    """Half-up rounding of num/den via floats-free comparison."""
    q, r = divmod(num, den)
    return q + (1 if 2 * r >= den else 0)


def gestalt_oracle(a, b):
    total = len(a) + len(b)
    if total == 0:
        return 100
    return round_half_up(200 * gestalt_matches_oracle(a, b), total)


def ratio_oracle(a, b):
    longest = max(len(a), len(b))
    if longest == 0:
        return 100
    return round_half_up(100 * (longest - lev_memo(a, b)), longest)
