"""Prime table: build with the segmented sieve, persist, load, query.

The table maps the 1-based index-order u to the u-th prime and is the
single source of truth for every search. ``inverse_lookup`` is the
independent binary-search oracle used to verify controller results.

File format (all integers little-endian)::

    offset  size  field
    0       8     magic  b"PRIMTBL1"
    8       4     version (u32)
    12      4     reserved (u32, zero)
    16      8     count N (u64)
    24      8     FNV-1a 64 checksum over the prime payload (u64)
    32      8*N   primes p(1)..p(N) (u64 each)
"""

from __future__ import annotations

import struct
import sys
from array import array
from bisect import bisect_left
from math import log
from pathlib import Path
from typing import BinaryIO

from .sieve import fnv1a64, sieve_first_n

MAGIC = b"PRIMTBL1"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<8sIIQQ")
HEADER_SIZE = _HEADER.size

# Sieve range from the refined nth-prime estimate n(ln n + ln ln n - 1),
# inflated by a safety margin; grown again if the estimate proves short.
_BOUND_SAFETY = 1.2
_BOUND_GROWTH = 1.25
_MIN_BOUND = 15

_MONOTONICITY_SAMPLES = 1024


class TableError(Exception):
    """Base class for prime-table file errors."""


class TableFormatError(TableError):
    """Bad magic, version, structural size, or non-table content."""


class ChecksumMismatchError(TableError):
    """Stored checksum does not match the payload."""


class TruncatedTableError(TableFormatError):
    """File ends before the declared payload is complete."""


class TableHeader:
    """Parsed header of a table file."""

    __slots__ = ("magic", "version", "count", "checksum")

    def __init__(self, magic: bytes, version: int, count: int, checksum: int):
        self.magic = magic
        self.version = version
        self.count = count
        self.checksum = checksum


class PrimeTable:
    """Immutable, strictly increasing table of the first N primes.

    Orders are 1-based: ``nth_prime(1) == 2``. Instances are safe for
    concurrent readers.
    """

    __slots__ = ("_primes",)

    def __init__(self, primes: array):
        if not isinstance(primes, array) or primes.typecode != "Q":
            primes = array("Q", primes)
        if len(primes) < 1:
            raise ValueError("a prime table holds at least one prime")
        if primes[0] != 2:
            raise ValueError("a prime table starts at p(1) = 2")
        self._primes = primes

    @property
    def count(self) -> int:
        return len(self._primes)

    @property
    def largest(self) -> int:
        return self._primes[-1]

    def nth_prime(self, u: int) -> int:
        """p(u) for 1 <= u <= count; raises IndexError outside that range."""
        if not 1 <= u <= len(self._primes):
            raise IndexError(f"prime order {u} outside [1, {len(self._primes)}]")
        return self._primes[u - 1]

    def inverse_lookup(self, w: int) -> int | None:
        """Order u with p(u) == w, or None when w is not in the table.

        Binary search over the sorted payload; this is the oracle used to
        cross-check controller searches, never the controller itself.
        """
        i = bisect_left(self._primes, w)
        if i < len(self._primes) and self._primes[i] == w:
            return i + 1
        return None

    def payload_view(self) -> memoryview:
        """Read-only byte view of the prime payload (little-endian u64)."""
        view = memoryview(self._primes)
        if sys.byteorder != "little":  # pragma: no cover - LE hosts only here
            swapped = array("Q", self._primes)
            swapped.byteswap()
            view = memoryview(swapped)
        return view.cast("B")

    def __iter__(self):
        return iter(self._primes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrimeTable):
            return NotImplemented
        return self._primes == other._primes


def sieve_bound(n: int) -> int:
    """Sieve range needed for the first n primes, with safety margin."""
    if n < 6:
        return _MIN_BOUND
    ln_n = log(n)
    return max(_MIN_BOUND, int(n * (ln_n + log(ln_n) - 1) * _BOUND_SAFETY) + 1)


def build_table(n: int) -> PrimeTable:
    """Build the table of the first ``n`` primes with the segmented sieve.

    The sieve range starts from the refined nth-prime estimate times a
    safety factor and is re-extended by 25% whenever it proves short.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    bound = sieve_bound(n)
    primes = sieve_first_n(n, bound)
    while len(primes) < n:
        bound = int(bound * _BOUND_GROWTH) + 1
        primes = sieve_first_n(n, bound)
    return PrimeTable(primes)


def _open_maybe(destination, mode: str):
    if isinstance(destination, (str, Path)):
        return open(destination, mode), True
    return destination, False


def save_table(table: PrimeTable, destination: str | Path | BinaryIO) -> None:
    """Write ``table`` in the documented binary format.

    A write that dies midway leaves a file that ``load_table`` rejects
    (size or checksum mismatch), never one that loads successfully.
    """
    payload = table.payload_view()
    header = _HEADER.pack(
        MAGIC, FORMAT_VERSION, 0, table.count, fnv1a64(payload)
    )
    f, owned = _open_maybe(destination, "wb")
    try:
        f.write(header)
        f.write(payload)
    finally:
        if owned:
            f.close()


def read_header(source: str | Path | BinaryIO) -> TableHeader:
    """Parse and validate the fixed-size header of a table file."""
    f, owned = _open_maybe(source, "rb")
    try:
        raw = f.read(HEADER_SIZE)
    finally:
        if owned:
            f.close()
    if len(raw) < HEADER_SIZE:
        raise TruncatedTableError("file shorter than the table header")
    magic, version, _reserved, count, checksum = _HEADER.unpack(raw)
    if magic != MAGIC:
        raise TableFormatError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != FORMAT_VERSION:
        raise TableFormatError(f"unsupported format version {version}")
    if count < 1:
        raise TableFormatError("table declares zero primes")
    return TableHeader(magic, version, count, checksum)


def load_table(source: str | Path | BinaryIO) -> PrimeTable:
    """Load a table saved by :func:`save_table`, validating integrity.

    Raises TableFormatError / TruncatedTableError / ChecksumMismatchError on
    bad magic or version, short payload, or checksum disagreement. A sampled
    subset is checked for strict monotonicity as a final sanity pass.
    """
    f, owned = _open_maybe(source, "rb")
    try:
        header = read_header(f)
        expected = header.count * 8
        raw = f.read(expected)
        if len(raw) < expected:
            raise TruncatedTableError(
                f"payload holds {len(raw)} bytes, header declares {expected}"
            )
        if f.read(1):
            raise TableFormatError("trailing bytes after the declared payload")
    finally:
        if owned:
            f.close()
    if fnv1a64(raw) != header.checksum:
        raise ChecksumMismatchError("payload checksum mismatch")
    primes = array("Q")
    primes.frombytes(raw)
    if sys.byteorder != "little":  # pragma: no cover - LE hosts only here
        primes.byteswap()
    _check_sampled_monotonicity(primes)
    return PrimeTable(primes)


def _check_sampled_monotonicity(primes: array) -> None:
    n = len(primes)
    if primes[0] != 2:
        raise TableFormatError("payload does not start at p(1) = 2")
    step = max(1, n // _MONOTONICITY_SAMPLES)
    prev_i = 0
    for i in range(step, n, step):
        if primes[prev_i] >= primes[i]:
            raise TableFormatError("payload is not strictly increasing")
        prev_i = i
    if n > 1 and primes[n - 1] <= primes[prev_i] and prev_i != n - 1:
        raise TableFormatError("payload is not strictly increasing")
