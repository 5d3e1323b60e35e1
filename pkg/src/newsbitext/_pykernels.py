"""Pure-Python edit-distance kernels.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference the compiled version is checked against. Every function compares
strings per Unicode scalar value.
"""

from __future__ import annotations


def hamming(a: str, b: str) -> int:
    if len(a) > len(b):
        a, b = b, a
    mismatches = sum(1 for x, y in zip(a, b) if x != y)
    # padded positions never match
    return mismatches + len(b) - len(a)


def levenshtein(a: str, b: str) -> int:
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)

    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        append = cur.append
        for j, cb in enumerate(b, 1):
            sub = prev[j - 1] + (ca != cb)
            dele = prev[j] + 1
            ins = cur[j - 1] + 1
            append(min(sub, dele, ins))
        prev = cur
    return prev[-1]


def osa(a: str, b: str) -> int:
    """Restricted Damerau-Levenshtein (optimal string alignment) distance."""
    if a == b:
        return 0
    n, m = len(a), len(b)
    if not n or not m:
        return max(n, m)

    # three rolling rows: i-2, i-1, i
    before = [0] * (m + 1)
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        ca = a[i - 1]
        cur = [i] + [0] * m
        for j in range(1, m + 1):
            cb = b[j - 1]
            best = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb))
            if i > 1 and j > 1 and ca == b[j - 2] and a[i - 2] == cb:
                best = min(best, before[j - 2] + 1)
            cur[j] = best
        before, prev = prev, cur
    return prev[m]


def _longest_match(a, b2j, alo, ahi, blo, bhi):
    # Earliest in a wins, then earliest in b (strict > on update).
    besti, bestj, bestsize = alo, blo, 0
    j2len = {}
    for i in range(alo, ahi):
        newj2len = {}
        for j in b2j.get(a[i], ()):
            if j < blo:
                continue
            if j >= bhi:
                break
            k = newj2len[j] = j2len.get(j - 1, 0) + 1
            if k > bestsize:
                besti, bestj, bestsize = i - k + 1, j - k + 1, k
        j2len = newj2len
    return besti, bestj, bestsize


def gestalt_matches(a: str, b: str) -> int:
    """Total characters matched by recursive longest-common-substring anchoring."""
    b2j: dict[str, list[int]] = {}
    for j, ch in enumerate(b):
        b2j.setdefault(ch, []).append(j)

    total = 0
    stack = [(0, len(a), 0, len(b))]
    while stack:
        alo, ahi, blo, bhi = stack.pop()
        if alo >= ahi or blo >= bhi:
            continue
        i, j, k = _longest_match(a, b2j, alo, ahi, blo, bhi)
        if k:
            total += k
            stack.append((alo, i, blo, j))
            stack.append((i + k, ahi, j + k, bhi))
    return total
