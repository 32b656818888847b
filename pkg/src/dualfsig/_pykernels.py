"""Pure-Python hot kernels; the compiled ``_kernels`` module mirrors this API."""
from __future__ import annotations

from itertools import product


def enum_sum_histogram(n: int, q: int, d: int) -> list[int]:
    """Histogram of ``sum(b) mod d`` over every ``b`` in ``{0..q-1}**n``.

    Brute force by design: this backs the enumeration oracle.
    """
    hist = [0] * d
    for b in product(range(q), repeat=n):
        hist[sum(b) % d] += 1
    return hist


def rank_mod_prime(rows: list[list[int]], prime: int) -> int:
    """Rank of an integer matrix over GF(prime)."""
    mat = [[v % prime for v in r] for r in rows]
    if not mat:
        return 0
    m, ncols = len(mat), len(mat[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, m):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        inv = pow(prow[c], -1, prime)
        prow[c:] = [(v * inv) % prime for v in prow[c:]]
        for i in range(rank + 1, m):
            row = mat[i]
            f = row[c]
            if f:
                row[c:] = [(a - f * b) % prime for a, b in zip(row[c:], prow[c:])]
        rank += 1
        if rank == m:
            break
    return rank


def bareiss_rank(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    m, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, m):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        pv = prow[c]
        for i in range(rank + 1, m):
            row = mat[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * pv - a * prow[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
        if rank == m:
            break
    return rank
