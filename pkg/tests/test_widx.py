import io
import struct
from itertools import product

import pytest

from wpmx import build_index, dumps, generate_random, load, loads, save
from wpmx.widx import (
    BadMagicError,
    ChecksumError,
    IndexFormatError,
    TruncatedIndexError,
    VersionMismatchError,
)


def same_answers(a, b, alphabet, max_len=4):
    for m in range(max_len + 1):
        for letters in product(alphabet, repeat=m):
            P = "".join(letters)
            if a.report(P) != b.report(P) or a.count_occurrences(P) != b.count_occurrences(P):
                return False
    return True


def test_roundtrip(example_index):
    data = dumps(example_index)
    assert data[:4] == b"WIDX"
    assert struct.unpack("<I", data[4:8])[0] == 1
    back = loads(data)
    assert dumps(back) == data
    assert back.n == 10 and back.z == 4.0 and back.alphabet == "ab"
    assert back.maximal_factors() == example_index.maximal_factors()
    assert back.count == example_index.count
    assert same_answers(example_index, back, "ab")


def test_file_objects(example_index):
    buf = io.BytesIO()
    save(example_index, buf)
    buf.seek(0)
    assert load(buf).report("aba") == [1, 3, 5, 8]


def test_bad_magic(example_index):
    data = b"XIDW" + dumps(example_index)[4:]
    with pytest.raises(BadMagicError):
        loads(data)


def test_version_mismatch(example_index):
    data = bytearray(dumps(example_index))
    data[4:8] = struct.pack("<I", 2)
    with pytest.raises(VersionMismatchError):
        loads(bytes(data))


@pytest.mark.parametrize("cut", [0, 3, 7, 20, 100, -5])
def test_truncated(example_index, cut):
    data = dumps(example_index)
    with pytest.raises(IndexFormatError):
        loads(data[:cut])


def test_truncated_type(example_index):
    with pytest.raises(TruncatedIndexError):
        loads(dumps(example_index)[:2])


def test_every_single_byte_corruption_is_detected(example_index):
    data = dumps(example_index)
    for offset in range(len(data)):
        bad = bytearray(data)
        bad[offset] ^= 0x5A
        with pytest.raises(IndexFormatError):
            loads(bytes(bad))


@pytest.mark.parametrize("offset", [-10, -40, -200])
def test_payload_corruption_is_a_checksum_error(example_index, offset):
    data = bytearray(dumps(example_index))
    data[offset] ^= 0x5A
    with pytest.raises(ChecksumError):
        loads(bytes(data))


def test_errors_are_value_errors():
    assert issubclass(ChecksumError, ValueError)
    assert issubclass(TruncatedIndexError, IndexFormatError)


@pytest.mark.parametrize("seed", range(10))
def test_random_roundtrip(seed):
    X = generate_random(40, "acg", seed, 0.5)
    I = build_index(X, 8)
    J = loads(dumps(I))
    assert same_answers(I, J, "acg", 3)
