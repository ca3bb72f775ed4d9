# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_kernels_py``.

Signatures and results are identical; see that module for documentation.
"""
from libc.stdlib cimport malloc, free

cdef enum:
    MAXBETA = 64


cdef tuple _beta_to_shape(long *beta, int L):
    cdef list shape = []
    cdef int i
    cdef long p
    for i in range(L):
        p = beta[i] - (L - 1 - i)
        if p == 0:
            break
        shape.append(p)
    return tuple(shape)


cdef object _mn(tuple shape, tuple cycle, int start, dict memo):
    cdef int L = len(shape)
    cdef long beta[MAXBETA]
    cdef long nb[MAXBETA]
    cdef int i, j, w, between, occupied
    cdef long b, t, k, tmp
    cdef object val, total, hit
    if start == len(cycle):
        return 1 if L == 0 else 0
    key = (shape, cycle[start:])
    hit = memo.get(key)
    if hit is not None:
        return hit
    if L > MAXBETA:
        raise ValueError("shape too long for compiled kernel")
    k = cycle[start]
    for i in range(L):
        beta[i] = <long>shape[i] + (L - 1 - i)
    total = 0
    for i in range(L):
        b = beta[i]
        t = b - k
        if t < 0:
            continue
        occupied = 0
        between = 0
        for j in range(L):
            if beta[j] == t:
                occupied = 1
                break
            if t < beta[j] < b:
                between += 1
        if occupied:
            continue
        # rebuild sorted beta set with b replaced by t
        w = 0
        for j in range(L):
            if j != i:
                nb[w] = beta[j]
                w += 1
        nb[w] = t
        j = w
        while j > 0 and nb[j - 1] < nb[j]:
            tmp = nb[j - 1]
            nb[j - 1] = nb[j]
            nb[j] = tmp
            j -= 1
        val = _mn(_beta_to_shape(nb, L), cycle, start + 1, memo)
        if val:
            if between & 1:
                total -= val
            else:
                total += val
    memo[key] = total
    return total


def mn_table(shapes, cycles):
    cdef dict memo = {}
    cycles = [tuple(mu) for mu in cycles]
    return [[_mn(tuple(lam), mu, 0, memo) for mu in cycles] for lam in shapes]


def bareiss_rank(rows):
    cdef list a = [list(src) for src in rows]
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t n, col, r, c, rank = 0
    cdef Py_ssize_t pivot
    cdef list prow, row
    cdef object p, f, prev = 1
    if m == 0:
        return 0
    n = len(a[0])
    for col in range(n):
        pivot = -1
        for r in range(rank, m):
            if (<list>a[r])[col] != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        prow = <list>a[rank]
        p = prow[col]
        for r in range(rank + 1, m):
            row = <list>a[r]
            f = row[col]
            if f == 0:
                if p != prev:
                    for c in range(col + 1, n):
                        row[c] = row[c] * p // prev
            else:
                for c in range(col + 1, n):
                    row[c] = (row[c] * p - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def place_permutation(perm, long d):
    cdef int n = len(perm)
    cdef long total = 1
    cdef long *weights = <long *>malloc(n * sizeof(long))
    cdef long *moved = <long *>malloc(n * sizeof(long))
    cdef long idx, rest, out, digit
    cdef int k
    cdef list target
    if weights == NULL or moved == NULL:
        free(weights)
        free(moved)
        raise MemoryError()
    try:
        for k in range(n - 1, -1, -1):
            weights[k] = total
            total *= d
        for k in range(n):
            moved[k] = weights[<int>perm[k]]
        target = [0] * total
        for idx in range(total):
            rest = idx
            out = 0
            for k in range(n):
                digit = rest // weights[k]
                rest -= digit * weights[k]
                out += digit * moved[k]
            target[idx] = out
        return target
    finally:
        free(weights)
        free(moved)
