"""WIDX v1 binary index files.

Layout (all integers little-endian; ``u64`` unless noted)::

    b"WIDX"  u32 version=1
    body:
      n  f64:z  alphabet_len  alphabet_bytes(utf-8)
      trie_nodes  (parent, letter_code) * trie_nodes
      nodes  per node: parent depth edge_start n_children
                       (letter_code, child) * n_children  ol_lo ol_hi count
      ol_len  ol[0..ol_len)
    u32 crc32(body)

Missing links (parent of a root, edge of a ``$``-leaf) are stored as
2**64 - 1.  Letter code 0 is ``$`` (or "no letter" for the trie root);
code k + 1 is ``alphabet[k]``.
"""

from __future__ import annotations

import io
import struct
import zlib
from typing import BinaryIO, List

import numpy as np

from .index import WeightedIndex
from .pwm import TERMINATOR

MAGIC = b"WIDX"
VERSION = 1
NONE = (1 << 64) - 1


class IndexFormatError(ValueError):
    pass


class BadMagicError(IndexFormatError):
    pass


class VersionMismatchError(IndexFormatError):
    pass


class TruncatedIndexError(IndexFormatError):
    pass


class ChecksumError(IndexFormatError):
    pass


def _u(x: int) -> int:
    return NONE if x < 0 else x


def _s(x: int) -> int:
    return -1 if x == NONE else x


def dumps(index: WeightedIndex) -> bytes:
    code = {c: k + 1 for k, c in enumerate(index.alphabet)}
    code[TERMINATOR] = 0
    code[""] = 0
    alpha = index.alphabet.encode("utf-8")
    words: List[int] = []
    body = io.BytesIO()
    body.write(struct.pack("<Qd", index.n, index.z))
    body.write(struct.pack("<Q", len(alpha)))
    body.write(alpha)

    words.append(len(index.trie_parent))
    for p, c in zip(index.trie_parent, index.trie_letter):
        words.append(_u(p))
        words.append(code[c])
    words.append(len(index))
    for x in range(len(index)):
        words += [_u(index.parent[x]), index.depth[x], _u(index.edge_start[x])]
        ch = index.child_list[x]
        words.append(len(ch))
        for c in ch:
            words += [code[index.key[c]], c]
        words += [index.lo[x], index.hi[x], index.count[x]]
    words.append(len(index.ol))
    body.write(np.asarray(words, dtype="<u8").tobytes())
    body.write(index.ol.astype("<u8").tobytes())
    data = body.getvalue()
    return MAGIC + struct.pack("<I", VERSION) + data + struct.pack("<I", zlib.crc32(data))


def save(index: WeightedIndex, fp: BinaryIO) -> None:
    fp.write(dumps(index))


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, k: int) -> bytes:
        if self.pos + k > len(self.data):
            raise TruncatedIndexError("index stream is truncated")
        out = self.data[self.pos: self.pos + k]
        self.pos += k
        return out

    def u64(self) -> int:
        return struct.unpack("<Q", self.take(8))[0]

    def u64s(self, k: int) -> np.ndarray:
        return np.frombuffer(self.take(8 * k), dtype="<u8")


def loads(data: bytes) -> WeightedIndex:
    if len(data) < 4:
        raise TruncatedIndexError("index stream is truncated")
    if data[:4] != MAGIC:
        raise BadMagicError(f"bad magic {data[:4]!r}, expected {MAGIC!r}")
    if len(data) < 8:
        raise TruncatedIndexError("index stream is truncated")
    (version,) = struct.unpack("<I", data[4:8])
    if version != VERSION:
        raise VersionMismatchError(f"unsupported WIDX version {version}")
    body = data[8:-4] if len(data) >= 12 else b""
    crc_ok = len(data) >= 12 and struct.unpack("<I", data[-4:])[0] == zlib.crc32(body)
    try:
        fields = _parse_body(_Reader(body))
    except TruncatedIndexError:
        raise
    except (IndexFormatError, ValueError, IndexError) as exc:
        if not crc_ok:
            raise ChecksumError("CRC-32 mismatch") from exc
        raise IndexFormatError(f"corrupt index body: {exc}") from exc
    if not crc_ok:
        raise ChecksumError("CRC-32 mismatch")
    return WeightedIndex(*fields)


def _parse_body(r: _Reader):
    n, z = struct.unpack("<Qd", r.take(16))
    alphabet = r.take(r.u64()).decode("utf-8")
    letters = ["$"] + list(alphabet)

    nt = r.u64()
    tw = r.u64s(2 * nt).tolist()
    trie_parent = [_s(p) for p in tw[0::2]]
    trie_letter = ["" if c == 0 else letters[c] for c in tw[1::2]]

    V = r.u64()
    if V > (len(r.data) - r.pos) // 64:
        raise TruncatedIndexError("index stream is truncated")
    parent, depth, edge_start, lo, hi, count = [], [], [], [], [], []
    key = [""] * V
    for _ in range(V):
        p, d, e, k = r.u64s(4).tolist()
        parent.append(_s(p))
        depth.append(d)
        edge_start.append(_s(e))
        for c, child in r.u64s(2 * k).reshape(-1, 2).tolist():
            if child >= V or c >= len(letters):
                raise IndexFormatError("corrupt child table")
            key[child] = letters[c]
        a, b, cnt = r.u64s(3).tolist()
        lo.append(a)
        hi.append(b)
        count.append(cnt)
    ol = r.u64s(r.u64()).astype(np.int64)
    if r.pos != len(r.data):
        raise IndexFormatError("trailing bytes after index body")
    return (
        n, z, alphabet, trie_parent, trie_letter,
        parent, depth, edge_start, key, ol, lo, hi, count,
    )


def load(fp: BinaryIO) -> WeightedIndex:
    return loads(fp.read())
