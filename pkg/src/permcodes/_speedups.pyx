# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-product kernels; same contract as ``_kernels_py``."""

from cpython cimport array
import array
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy


cdef inline int _absdiff(int a, int b) nogil:
    return a - b if a > b else b - a


cdef int _flatten(swaps, int **offsets_out, int **flat_out) except -1:
    cdef Py_ssize_t k = len(swaps), total = 0, i, p = 0
    for gen in swaps:
        total += len(gen)
    cdef int *offsets = <int *> malloc((k + 1) * sizeof(int))
    cdef int *flat = <int *> malloc((2 * total + 1) * sizeof(int))
    if offsets == NULL or flat == NULL:
        free(offsets)
        free(flat)
        raise MemoryError()
    offsets[0] = 0
    for i in range(k):
        for a, b in swaps[i]:
            flat[p] = a
            flat[p + 1] = b
            p += 2
        offsets[i + 1] = <int> p
    offsets_out[0] = offsets
    flat_out[0] = flat
    return 0


cdef inline int _flip(int *cur, int *hist, int *flat, int lo, int hi, int top) nogil:
    cdef int q, a, b, va, vb, da, db
    for q in range(lo, hi, 2):
        a = flat[q]
        b = flat[q + 1]
        va = cur[a]
        vb = cur[b]
        hist[_absdiff(va, a)] -= 1
        hist[_absdiff(vb, b)] -= 1
        cur[a] = vb
        cur[b] = va
        da = _absdiff(vb, a)
        db = _absdiff(va, b)
        hist[da] += 1
        hist[db] += 1
        if da > top:
            top = da
        if db > top:
            top = db
    while top and hist[top] == 0:
        top -= 1
    return top


cdef inline int _ctz(unsigned long long x) nogil:
    cdef int c = 0
    while (x & 1) == 0:
        x >>= 1
        c += 1
    return c


def subset_weights(swaps, int degree):
    cdef int k = len(swaps)
    cdef unsigned long long total = 1ULL << k, step, mask = 0
    cdef array.array out = array.clone(array.array("i"), <Py_ssize_t> total, zero=True)
    cdef int[:] view = out
    cdef int *offsets = NULL
    cdef int *flat = NULL
    cdef int *cur = <int *> malloc(max(degree, 1) * sizeof(int))
    cdef int *hist = <int *> malloc((degree + 1) * sizeof(int))
    cdef int i, bit, top = 0
    try:
        if cur == NULL or hist == NULL:
            raise MemoryError()
        _flatten(swaps, &offsets, &flat)
        for i in range(degree):
            cur[i] = i
            hist[i + 1] = 0
        hist[0] = degree
        with nogil:
            for step in range(1, total):
                bit = _ctz(step)
                mask ^= 1ULL << bit
                top = _flip(cur, hist, flat, offsets[bit], offsets[bit + 1], top)
                view[mask] = top
    finally:
        free(cur)
        free(hist)
        free(offsets)
        free(flat)
    return out


def min_subset_weight(swaps, int degree):
    cdef int k = len(swaps)
    cdef unsigned long long total = 1ULL << k, step, mask = 0, best_mask = 0
    cdef int *offsets = NULL
    cdef int *flat = NULL
    cdef int *cur = <int *> malloc(max(degree, 1) * sizeof(int))
    cdef int *best = <int *> malloc(max(degree, 1) * sizeof(int))
    cdef int *hist = <int *> malloc((degree + 1) * sizeof(int))
    cdef int i, bit, top = 0, best_w = 0
    try:
        if cur == NULL or hist == NULL or best == NULL:
            raise MemoryError()
        _flatten(swaps, &offsets, &flat)
        for i in range(degree):
            cur[i] = i
            hist[i + 1] = 0
        hist[0] = degree
        with nogil:
            for step in range(1, total):
                bit = _ctz(step)
                mask ^= 1ULL << bit
                top = _flip(cur, hist, flat, offsets[bit], offsets[bit + 1], top)
                if top == 0:
                    continue
                if best_w == 0 or top < best_w:
                    best_w = top
                    best_mask = mask
                    memcpy(best, cur, degree * sizeof(int))
                elif top == best_w:
                    for i in range(degree):
                        if cur[i] != best[i]:
                            break
                    if i < degree and cur[i] < best[i]:
                        best_mask = mask
                        memcpy(best, cur, degree * sizeof(int))
    finally:
        free(cur)
        free(best)
        free(hist)
        free(offsets)
        free(flat)
    return best_w, best_mask
