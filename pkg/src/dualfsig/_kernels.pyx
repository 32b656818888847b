# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; API-identical to ``_pykernels``."""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


def enum_sum_histogram(int n, long long q, int d):
    cdef long long *digits
    cdef long long *hist
    cdef long long total, s, idx
    cdef int i
    if n < 0 or q < 1 or d < 1:
        raise ValueError("need n >= 0, q >= 1, d >= 1")
    digits = <long long *> malloc(max(n, 1) * sizeof(long long))
    hist = <long long *> malloc(d * sizeof(long long))
    if digits == NULL or hist == NULL:
        free(digits)
        free(hist)
        raise MemoryError()
    try:
        for i in range(n):
            digits[i] = 0
        for i in range(d):
            hist[i] = 0
        total = 1
        for i in range(n):
            total *= q
        s = 0
        for idx in range(total):
            hist[s % d] += 1
            # odometer step, keeping the running coordinate sum
            i = 0
            while i < n:
                if digits[i] + 1 < q:
                    digits[i] += 1
                    s += 1
                    break
                s -= digits[i]
                digits[i] = 0
                i += 1
        return [hist[i] for i in range(d)]
    finally:
        free(digits)
        free(hist)


def rank_mod_prime(rows, long long prime):
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t ncols, i, j, c, piv, rank = 0
    cdef int64_t *mat
    cdef int64_t f, inv, tmp
    if m == 0:
        return 0
    if prime >= (1 << 31):
        raise ValueError("prime must be below 2**31")
    ncols = len(rows[0])
    mat = <int64_t *> malloc(max(m * ncols, 1) * sizeof(int64_t))
    if mat == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            r = rows[i]
            for j in range(ncols):
                mat[i * ncols + j] = r[j] % prime
        for c in range(ncols):
            piv = -1
            for i in range(rank, m):
                if mat[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    tmp = mat[piv * ncols + j]
                    mat[piv * ncols + j] = mat[rank * ncols + j]
                    mat[rank * ncols + j] = tmp
            inv = pow(int(mat[rank * ncols + c]), -1, prime)
            for j in range(c, ncols):
                mat[rank * ncols + j] = (mat[rank * ncols + j] * inv) % prime
            for i in range(rank + 1, m):
                f = mat[i * ncols + c]
                if f != 0:
                    for j in range(c, ncols):
                        mat[i * ncols + j] = (mat[i * ncols + j] - f * mat[rank * ncols + j]) % prime
                        if mat[i * ncols + j] < 0:
                            mat[i * ncols + j] += prime
            rank += 1
            if rank == m:
                break
        return rank
    finally:
        free(mat)


def bareiss_rank(rows):
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t ncols, i, j, c, piv, rank = 0
    cdef list mat, row, prow
    if m == 0:
        return 0
    mat = [list(r) for r in rows]
    ncols = len(mat[0])
    prev = 1
    for c in range(ncols):
        piv = -1
        for i in range(rank, m):
            if (<list> mat[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = <list> mat[rank]
        pv = prow[c]
        for i in range(rank + 1, m):
            row = <list> mat[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * pv - a * prow[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
        if rank == m:
            break
    return rank
