"""Pure-Python sieve backend (stdlib only).

Fallback used when the compiled extension is not built. Same contract as
``primeorder._sieve_cy``, roughly an order of magnitude slower on large
tables. The segmented sieve works on odd numbers only and clears composite
flags with bytearray slice assignment, which keeps the inner loop in C.
"""

from __future__ import annotations

from array import array
from itertools import compress
from math import isqrt

# Odd numbers per segment; a 1 MiB working set stays cache-friendly.
_SEGMENT_ODDS = 1 << 20

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF


def _simple_sieve(limit: int) -> list[int]:
    """All primes <= limit via a dense odd-only sieve (for base primes)."""
    if limit < 2:
        return []
    if limit < 3:
        return [2]
    n_odd = (limit - 1) // 2  # flags for 3, 5, ..., the odd numbers <= limit
    flags = bytearray(b"\x01") * n_odd
    i = 0
    while True:
        p = 3 + 2 * i
        if p * p > limit:
            break
        if flags[i]:
            first = (p * p - 3) // 2
            count = len(range(first, n_odd, p))
            flags[first::p] = b"\x00" * count
        i += 1
    return [2] + [3 + 2 * j for j in range(n_odd) if flags[j]]


def sieve_first_n(n: int, limit: int) -> array:
    """First ``n`` primes not exceeding ``limit``, ascending, as array('Q').

    Returns fewer than ``n`` values when the range holds fewer primes; the
    caller decides whether to retry with a larger limit.
    """
    out = array("Q")
    if n < 1 or limit < 2:
        return out
    out.append(2)
    if n == 1 or limit < 3:
        return out
    base = _simple_sieve(isqrt(limit))[1:]  # odd base primes
    low = 3
    while low <= limit and len(out) < n:
        n_odd = min(_SEGMENT_ODDS, (limit - low) // 2 + 1)
        high = low + 2 * n_odd  # exclusive, keeps low odd across segments
        seg = bytearray(b"\x01") * n_odd
        for p in base:
            if p * p >= high:
                break
            start = max(p * p, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            first = (start - low) // 2
            count = len(range(first, n_odd, p))
            seg[first::p] = b"\x00" * count
        out.extend(compress(range(low, high, 2), seg))
        low = high
    return out[:n] if len(out) > n else out


def fnv1a64(data) -> int:
    """64-bit FNV-1a fold over a byte buffer. Integrity, not cryptography."""
    view = memoryview(data)
    if view.format != "B":
        view = view.cast("B")
    h = _FNV_OFFSET
    for b in view:
        h = ((h ^ b) * _FNV_PRIME) & _MASK64
    return h
