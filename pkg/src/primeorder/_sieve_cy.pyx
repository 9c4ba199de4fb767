# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sieve backend: segmented odd-only sieve and FNV-1a checksum.

Contract matches primeorder._sieve_py; this version keeps the hot loops in C.
"""

from cpython cimport array
from libc.stdlib cimport free, malloc
from libc.string cimport memset

import array as _array

DEF SEGMENT_ODDS = 1 << 20

ctypedef unsigned long long u64


cdef long long _isqrt(long long x):
    cdef long long r = <long long>((<double>x) ** 0.5)
    while r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    return r


def sieve_first_n(long long n, long long limit):
    """First ``n`` primes not exceeding ``limit``, ascending, as array('Q')."""
    cdef array.array out = _array.array("Q")
    if n < 1 or limit < 2:
        return out
    array.resize(out, n)
    cdef u64 *res = out.data.as_ulonglongs
    cdef long long count = 0
    res[count] = 2
    count += 1
    if count == n or limit < 3:
        array.resize(out, count)
        return out

    # Dense odd-only sieve for the base primes up to sqrt(limit).
    cdef long long root = _isqrt(limit)
    cdef long long base_odd = (root - 1) // 2 if root >= 3 else 0
    cdef unsigned char *base_flags = NULL
    cdef long long *base = NULL
    cdef long long n_base = 0
    cdef long long i, j, p, first, start, low, high, n_odd
    cdef unsigned char *seg = NULL

    if base_odd > 0:
        base_flags = <unsigned char *>malloc(base_odd)
        if base_flags == NULL:
            raise MemoryError("base sieve allocation failed")
        memset(base_flags, 1, base_odd)
        i = 0
        while True:
            p = 3 + 2 * i
            if p * p > root:
                break
            if base_flags[i]:
                j = (p * p - 3) // 2
                while j < base_odd:
                    base_flags[j] = 0
                    j += p
            i += 1
        base = <long long *>malloc(base_odd * sizeof(long long))
        if base == NULL:
            free(base_flags)
            raise MemoryError("base prime allocation failed")
        for i in range(base_odd):
            if base_flags[i]:
                base[n_base] = 3 + 2 * i
                n_base += 1
        free(base_flags)
        base_flags = NULL

    seg = <unsigned char *>malloc(SEGMENT_ODDS)
    if seg == NULL:
        free(base)
        raise MemoryError("segment allocation failed")

    try:
        low = 3
        while low <= limit and count < n:
            n_odd = (limit - low) // 2 + 1
            if n_odd > SEGMENT_ODDS:
                n_odd = SEGMENT_ODDS
            high = low + 2 * n_odd  # exclusive
            memset(seg, 1, n_odd)
            for i in range(n_base):
                p = base[i]
                if p * p >= high:
                    break
                start = ((low + p - 1) // p) * p
                if start < p * p:
                    start = p * p
                if start % 2 == 0:
                    start += p
                if start >= high:
                    continue
                j = (start - low) // 2
                while j < n_odd:
                    seg[j] = 0
                    j += p
            for j in range(n_odd):
                if seg[j]:
                    res[count] = <u64>(low + 2 * j)
                    count += 1
                    if count == n:
                        break
            low = high
    finally:
        free(seg)
        free(base)

    array.resize(out, count)
    return out


def fnv1a64(data) -> int:
    """64-bit FNV-1a fold over any contiguous buffer, viewed as bytes."""
    view_obj = memoryview(data)
    if view_obj.format != "B":
        view_obj = view_obj.cast("B")
    cdef const unsigned char[::1] view = view_obj
    cdef u64 h = 14695981039346656037ULL
    cdef Py_ssize_t i
    for i in range(view.shape[0]):
        h = (h ^ view[i]) * 1099511628211ULL
    return h
