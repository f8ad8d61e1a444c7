# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled subset-scan kernels; mirrors ``_pure`` exactly."""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def rank_table_from_flats(int n, flat_masks, flat_ranks):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t nflats = len(flat_masks)
    cdef unsigned long long *zmask = <unsigned long long *>malloc(nflats * sizeof(unsigned long long))
    cdef int *zrank = <int *>malloc(nflats * sizeof(int))
    cdef int *out = <int *>malloc(size * sizeof(int))
    if zmask == NULL or zrank == NULL or out == NULL:
        free(zmask); free(zrank); free(out)
        raise MemoryError()
    cdef Py_ssize_t i, x
    cdef int best, val
    try:
        for i in range(nflats):
            zmask[i] = flat_masks[i]
            zrank[i] = flat_ranks[i]
        with nogil:
            for x in range(size):
                best = __builtin_popcountll(<unsigned long long>x)
                for i in range(nflats):
                    val = zrank[i] + __builtin_popcountll((<unsigned long long>x) & ~zmask[i])
                    if val < best:
                        best = val
                out[x] = best
        return [out[x] for x in range(size)]
    finally:
        free(zmask); free(zrank); free(out)


def rank_table_from_independent(int n, independent):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef int *out = <int *>malloc(size * sizeof(int))
    cdef unsigned char *flag = <unsigned char *>malloc(size * sizeof(unsigned char))
    if out == NULL or flag == NULL:
        free(out); free(flag)
        raise MemoryError()
    cdef Py_ssize_t x, m
    cdef unsigned long long rest, low
    cdef int best, val
    try:
        for x in range(size):
            flag[x] = 0
        for m in independent:
            flag[m] = 1
        out[0] = 0
        with nogil:
            for x in range(1, size):
                if flag[x]:
                    out[x] = __builtin_popcountll(<unsigned long long>x)
                    continue
                best = 0
                rest = <unsigned long long>x
                while rest:
                    low = rest & (~rest + 1)
                    val = out[x ^ <Py_ssize_t>low]
                    if val > best:
                        best = val
                    rest ^= low
                out[x] = best
        return [out[x] for x in range(size)]
    finally:
        free(out); free(flag)


def max_deficient_size(table, int n):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef int *tab = <int *>malloc(size * sizeof(int))
    if tab == NULL:
        raise MemoryError()
    cdef Py_ssize_t y
    cdef int k, best, c
    try:
        for y in range(size):
            tab[y] = table[y]
        k = tab[size - 1]
        best = -1
        with nogil:
            for y in range(size):
                if tab[y] < k:
                    c = __builtin_popcountll(<unsigned long long>y)
                    if c > best:
                        best = c
        return best
    finally:
        free(tab)
