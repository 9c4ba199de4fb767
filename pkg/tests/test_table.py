"""Prime table: build anchors, file round-trips, corruption rejection."""

from __future__ import annotations

import io
import struct
from array import array

import pytest
from hypothesis import given, settings, strategies as st

from primeorder import (
    ChecksumMismatchError,
    PrimeTable,
    TableFormatError,
    TruncatedTableError,
    build_table,
    load_table,
    read_header,
    save_table,
    sieve_bound,
)
from primeorder.sieve import fnv1a64
from primeorder.table import FORMAT_VERSION, HEADER_SIZE, MAGIC
from oracles import is_prime_trial

FIRST_TWENTY = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71]


def test_build_table_single_prime():
    table = build_table(1)
    assert list(table) == [2]
    assert table.count == 1
    assert table.largest == 2


@pytest.mark.parametrize("n", range(1, 21))
def test_build_table_small_counts_exact(n):
    assert list(build_table(n)) == FIRST_TWENTY[:n]


def test_nth_prime_anchors(table_1e4, table_1e6):
    assert table_1e4.nth_prime(1) == 2
    assert table_1e4.nth_prime(10) == 29
    assert table_1e4.nth_prime(100) == 541
    assert table_1e4.nth_prime(1000) == 7919
    assert table_1e6.nth_prime(1_000_000) == 15_485_863


def test_nth_prime_rejects_out_of_range(table_1e4):
    with pytest.raises(IndexError):
        table_1e4.nth_prime(0)
    with pytest.raises(IndexError):
        table_1e4.nth_prime(table_1e4.count + 1)


def test_inverse_lookup(table_1e4):
    assert table_1e4.inverse_lookup(2) == 1
    assert table_1e4.inverse_lookup(541) == 100
    assert table_1e4.inverse_lookup(table_1e4.largest) == table_1e4.count
    assert table_1e4.inverse_lookup(4) is None
    assert table_1e4.inverse_lookup(1) is None
    assert table_1e4.inverse_lookup(table_1e4.largest + 2) is None


def test_inverse_lookup_round_trip_sampled(table_1e6):
    for u in range(1, table_1e6.count + 1, 9973):
        assert table_1e6.inverse_lookup(table_1e6.nth_prime(u)) == u


def test_sampled_entries_are_prime(table_1e6):
    step = table_1e6.count // 200
    for u in range(1, table_1e6.count + 1, step):
        assert is_prime_trial(table_1e6.nth_prime(u))


def test_sieve_bound_minimum_and_coverage():
    for n in range(1, 6):
        assert sieve_bound(n) == 15
    assert sieve_bound(6) >= 13  # p(6)
    assert sieve_bound(1000) >= 7919
    assert sieve_bound(1_000_000) >= 15_485_863


def test_table_constructor_validates():
    with pytest.raises(ValueError):
        PrimeTable(array("Q", []))
    with pytest.raises(ValueError):
        PrimeTable(array("Q", [3, 5]))  # must start at 2


def _table_bytes(table: PrimeTable) -> bytes:
    buf = io.BytesIO()
    save_table(table, buf)
    return buf.getvalue()


def test_round_trip_path(tmp_path):
    table = build_table(100)
    path = tmp_path / "t.tbl"
    save_table(table, path)
    assert path.stat().st_size == HEADER_SIZE + 8 * table.count
    loaded = load_table(path)
    assert loaded == table
    assert loaded.nth_prime(100) == 541


def test_round_trip_file_object():
    table = build_table(1000)
    data = _table_bytes(table)
    loaded = load_table(io.BytesIO(data))
    assert loaded == table
    assert loaded.nth_prime(1000) == 7919


def test_read_header_fields(tmp_path):
    table = build_table(42)
    path = tmp_path / "t.tbl"
    save_table(table, path)
    header = read_header(path)
    assert header.magic == MAGIC
    assert header.version == FORMAT_VERSION
    assert header.count == 42
    assert header.checksum == fnv1a64(table.payload_view())


def test_payload_view_is_little_endian():
    table = build_table(3)
    assert bytes(table.payload_view()) == struct.pack("<3Q", 2, 3, 5)


def test_corrupted_payload_byte_fails_checksum():
    data = bytearray(_table_bytes(build_table(100)))
    data[HEADER_SIZE + 11] ^= 0x40
    with pytest.raises(ChecksumMismatchError):
        load_table(io.BytesIO(bytes(data)))


def test_wrong_magic_rejected():
    data = bytearray(_table_bytes(build_table(10)))
    data[:8] = b"NOTPRIM1"
    with pytest.raises(TableFormatError):
        load_table(io.BytesIO(bytes(data)))


def test_unknown_version_rejected():
    table = build_table(10)
    payload = bytes(table.payload_view())
    header = struct.pack("<8sIIQQ", MAGIC, FORMAT_VERSION + 1, 0, 10, fnv1a64(payload))
    with pytest.raises(TableFormatError):
        load_table(io.BytesIO(header + payload))


def test_truncated_payload_rejected():
    data = _table_bytes(build_table(50))
    with pytest.raises(TruncatedTableError):
        load_table(io.BytesIO(data[:-5]))


def test_truncated_header_rejected():
    data = _table_bytes(build_table(50))
    with pytest.raises(TableFormatError):
        load_table(io.BytesIO(data[: HEADER_SIZE - 4]))


def test_trailing_bytes_rejected():
    data = _table_bytes(build_table(50))
    with pytest.raises(TableFormatError):
        load_table(io.BytesIO(data + b"x"))


def test_zero_count_rejected():
    header = struct.pack("<8sIIQQ", MAGIC, FORMAT_VERSION, 0, 0, fnv1a64(b""))
    with pytest.raises(TableFormatError):
        load_table(io.BytesIO(header))


def test_non_monotone_payload_rejected_despite_valid_checksum():
    values = FIRST_TWENTY.copy()
    values[10], values[11] = values[11], values[10]
    payload = struct.pack(f"<{len(values)}Q", *values)
    header = struct.pack(
        "<8sIIQQ", MAGIC, FORMAT_VERSION, 0, len(values), fnv1a64(payload)
    )
    with pytest.raises(TableFormatError):
        load_table(io.BytesIO(header + payload))


def test_save_to_unwritable_path_raises():
    with pytest.raises(OSError):
        save_table(build_table(5), "/nonexistent-dir-for-test/t.tbl")


def test_full_monotonicity_small(table_1e4):
    previous = 1
    for value in table_1e4:
        assert value > previous
        previous = value


@settings(max_examples=60, deadline=None)
@given(n=st.integers(min_value=1, max_value=300))
def test_round_trip_identity_property(n):
    table = build_table(n)
    assert table.count == n
    loaded = load_table(io.BytesIO(_table_bytes(table)))
    assert loaded == table
    assert loaded.largest == table.nth_prime(n)
