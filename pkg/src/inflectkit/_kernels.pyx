# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dynamic-programming kernels (twins of ``_kernels_py``)."""

from libc.stdlib cimport malloc, free

cdef enum:
    INS_COST = 10
    DEL_COST = 10
    SUB_COST = 11


cdef Py_UCS4* _codepoints(str s, Py_ssize_t n) except NULL:
    cdef Py_UCS4* buf = <Py_UCS4*> malloc((n + 1) * sizeof(Py_UCS4))
    cdef Py_ssize_t k
    if buf == NULL:
        raise MemoryError()
    for k in range(n):
        buf[k] = s[k]
    return buf


def align_ops(str x, str y):
    cdef Py_ssize_t n = len(x), m = len(y), width = m + 1
    cdef Py_ssize_t i, j, row, below
    cdef long diag, dele, ins, best, here
    cdef Py_UCS4 xi
    cdef bint same
    cdef Py_UCS4* xs = _codepoints(x, n)
    cdef Py_UCS4* ys = NULL
    cdef long* table = NULL
    cdef char* ops = NULL
    cdef Py_ssize_t k = 0
    try:
        ys = _codepoints(y, m)
        table = <long*> malloc((n + 1) * width * sizeof(long))
        ops = <char*> malloc(n + m + 1)
        if table == NULL or ops == NULL:
            raise MemoryError()

        table[n * width + m] = 0
        for j in range(m - 1, -1, -1):
            table[n * width + j] = table[n * width + j + 1] + INS_COST
        for i in range(n - 1, -1, -1):
            row = i * width
            below = row + width
            table[row + m] = table[below + m] + DEL_COST
            xi = xs[i]
            for j in range(m - 1, -1, -1):
                diag = table[below + j + 1] + (0 if xi == ys[j] else SUB_COST)
                dele = table[below + j] + DEL_COST
                ins = table[row + j + 1] + INS_COST
                best = diag
                if dele < best:
                    best = dele
                if ins < best:
                    best = ins
                table[row + j] = best

        i = 0
        j = 0
        while i < n or j < m:
            here = table[i * width + j]
            if i < n and j < m:
                same = xs[i] == ys[j]
                if here == table[(i + 1) * width + j + 1] + (0 if same else SUB_COST):
                    ops[k] = b'M' if same else b'S'
                    k += 1
                    i += 1
                    j += 1
                    continue
            if i < n and here == table[(i + 1) * width + j] + DEL_COST:
                ops[k] = b'D'
                i += 1
            else:
                ops[k] = b'I'
                j += 1
            k += 1
        return ops[:k].decode('ascii'), table[0]
    finally:
        free(xs)
        free(ys)
        free(table)
        free(ops)


def levenshtein(str a, str b):
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t n = len(a), m = len(b), i, j
    if m == 0:
        return n
    cdef Py_UCS4* bs = _codepoints(b, m)
    cdef Py_ssize_t* prev = <Py_ssize_t*> malloc((m + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* cur = <Py_ssize_t*> malloc((m + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* swap
    cdef Py_ssize_t v, w
    cdef Py_UCS4 ca
    try:
        if prev == NULL or cur == NULL:
            raise MemoryError()
        for j in range(m + 1):
            prev[j] = j
        for i in range(1, n + 1):
            ca = a[i - 1]
            cur[0] = i
            for j in range(1, m + 1):
                v = prev[j - 1] + (ca != bs[j - 1])
                w = prev[j] + 1
                if w < v:
                    v = w
                w = cur[j - 1] + 1
                if w < v:
                    v = w
                cur[j] = v
            swap = prev
            prev = cur
            cur = swap
        return prev[m]
    finally:
        free(bs)
        free(prev)
        free(cur)
