# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled edit-distance kernels.

Same contract as ``_pykernels``; strings are copied into ``Py_UCS4`` buffers
and the DP loops run without the GIL.
"""

from libc.stdlib cimport malloc, free


cdef Py_UCS4* _scalars(str s) except NULL:
    cdef Py_ssize_t n = len(s), i = 0
    cdef Py_UCS4* buf = <Py_UCS4*> malloc((n + 1) * sizeof(Py_UCS4))
    cdef Py_UCS4 ch
    if buf == NULL:
        raise MemoryError()
    for ch in s:
        buf[i] = ch
        i += 1
    return buf


cdef Py_ssize_t* _ints(Py_ssize_t n) except NULL:
    cdef Py_ssize_t* buf = <Py_ssize_t*> malloc((n + 1) * sizeof(Py_ssize_t))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef inline Py_ssize_t _min3(Py_ssize_t x, Py_ssize_t y, Py_ssize_t z) nogil:
    if y < x:
        x = y
    if z < x:
        x = z
    return x


def hamming(str a, str b):
    cdef Py_ssize_t n = len(a), m = len(b), k, shorter, d = 0
    cdef Py_UCS4 x, y
    shorter = n if n < m else m
    for k in range(shorter):
        x = a[k]
        y = b[k]
        if x != y:
            d += 1
    return d + (n + m - 2 * shorter)


def levenshtein(str a, str b):
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t n = len(a), m = len(b), i, j, diag, up, result
    if m == 0:
        return n
    cdef Py_UCS4* sa = _scalars(a)
    cdef Py_UCS4* sb = NULL
    cdef Py_ssize_t* row = NULL
    cdef Py_UCS4 ca
    try:
        sb = _scalars(b)
        row = _ints(m)
        with nogil:
            for j in range(m + 1):
                row[j] = j
            for i in range(1, n + 1):
                ca = sa[i - 1]
                diag = row[0]
                row[0] = i
                for j in range(1, m + 1):
                    up = row[j]
                    row[j] = _min3(up + 1, row[j - 1] + 1, diag + (ca != sb[j - 1]))
                    diag = up
            result = row[m]
        return result
    finally:
        free(sa)
        free(sb)
        free(row)


def osa(str a, str b):
    if a == b:
        return 0
    cdef Py_ssize_t n = len(a), m = len(b), i, j, best, result
    if n == 0 or m == 0:
        return n if n > m else m
    cdef Py_UCS4* sa = _scalars(a)
    cdef Py_UCS4* sb = NULL
    cdef Py_ssize_t* before = NULL
    cdef Py_ssize_t* prev = NULL
    cdef Py_ssize_t* cur = NULL
    cdef Py_ssize_t* tmp
    cdef Py_UCS4 ca, cb
    try:
        sb = _scalars(b)
        before = _ints(m)
        prev = _ints(m)
        cur = _ints(m)
        with nogil:
            for j in range(m + 1):
                prev[j] = j
                before[j] = 0
            for i in range(1, n + 1):
                ca = sa[i - 1]
                cur[0] = i
                for j in range(1, m + 1):
                    cb = sb[j - 1]
                    best = _min3(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb))
                    if i > 1 and j > 1 and ca == sb[j - 2] and sa[i - 2] == cb:
                        if before[j - 2] + 1 < best:
                            best = before[j - 2] + 1
                    cur[j] = best
                tmp = before
                before = prev
                prev = cur
                cur = tmp
            result = prev[m]
        return result
    finally:
        free(sa)
        free(sb)
        free(before)
        free(prev)
        free(cur)


cdef void _longest(Py_UCS4* sa, Py_UCS4* sb, Py_ssize_t alo, Py_ssize_t ahi,
                   Py_ssize_t blo, Py_ssize_t bhi, Py_ssize_t* run,
                   Py_ssize_t* out) nogil:
    # run[j + 1] holds the common-suffix length ending at (i - 1, j).
    cdef Py_ssize_t i, j, k, diag, keep
    cdef Py_ssize_t besti = alo, bestj = blo, bestsize = 0
    for j in range(blo, bhi + 1):
        run[j] = 0
    for i in range(alo, ahi):
        diag = 0
        for j in range(blo, bhi):
            keep = run[j + 1]
            if sa[i] == sb[j]:
                k = diag + 1
                run[j + 1] = k
                if k > bestsize:
                    besti = i - k + 1
                    bestj = j - k + 1
                    bestsize = k
            else:
                run[j + 1] = 0
            diag = keep
    out[0] = besti
    out[1] = bestj
    out[2] = bestsize


def gestalt_matches(str a, str b):
    cdef Py_ssize_t n = len(a), m = len(b), total = 0, top = 0
    if n == 0 or m == 0:
        return 0
    cdef Py_UCS4* sa = _scalars(a)
    cdef Py_UCS4* sb = NULL
    cdef Py_ssize_t* run = NULL
    cdef Py_ssize_t* stack = NULL
    cdef Py_ssize_t found[3]
    cdef Py_ssize_t alo, ahi, blo, bhi, i, j, k
    try:
        sb = _scalars(b)
        run = _ints(m + 1)
        # each anchor consumes >= 1 scalar of a, so depth is bounded by n
        stack = <Py_ssize_t*> malloc(4 * (2 * n + 2) * sizeof(Py_ssize_t))
        if stack == NULL:
            raise MemoryError()
        with nogil:
            stack[0] = 0
            stack[1] = n
            stack[2] = 0
            stack[3] = m
            top = 1
            while top > 0:
                top -= 1
                alo = stack[4 * top]
                ahi = stack[4 * top + 1]
                blo = stack[4 * top + 2]
                bhi = stack[4 * top + 3]
                if alo >= ahi or blo >= bhi:
                    continue
                _longest(sa, sb, alo, ahi, blo, bhi, run, found)
                i = found[0]
                j = found[1]
                k = found[2]
                if k == 0:
                    continue
                total += k
                stack[4 * top] = alo
                stack[4 * top + 1] = i
                stack[4 * top + 2] = blo
                stack[4 * top + 3] = j
                top += 1
                stack[4 * top] = i + k
                stack[4 * top + 1] = ahi
                stack[4 * top + 2] = j + k
                stack[4 * top + 3] = bhi
                top += 1
        return total
    finally:
        free(sa)
        free(sb)
        free(run)
        free(stack)
