"""Range-minimum structures: sparse table, Euler-tour LCA, min segment tree."""

from __future__ import annotations

from typing import List, Sequence

import numpy as np


class SparseTable:
    """Static range-minimum (argmin) over an integer array.

    O(N log N) preprocessing, O(1) query.  Ties resolve to the leftmost index.
    """

    def __init__(self, values: Sequence[int]):
        self.values = np.asarray(values, dtype=np.int64)
        n = len(self.values)
        self.table = [np.arange(n, dtype=np.int64)]
        j = 1
        while (1 << j) <= n:
            prev = self.table[-1]
            half = 1 << (j - 1)
            a = prev[: n - (1 << j) + 1]
            b = prev[half: half + len(a)]
            self.table.append(np.where(self.values[b] < self.values[a], b, a))
            j += 1

    def argmin(self, lo, hi):
        """Index of the minimum in ``values[lo:hi]`` (half-open, non-empty).

        Accepts scalars or equal-length integer arrays.
        """
        span = np.asarray(hi) - np.asarray(lo)
        if np.any(span <= 0):
            raise ValueError("empty range")
        k = np.floor(np.log2(span)).astype(np.int64)
        if np.ndim(k) == 0:
            k = int(k)
            a = self.table[k][lo]
            b = self.table[k][hi - (1 << k)]
            return int(b) if self.values[b] < self.values[a] else int(a)
        out = np.empty(len(k), dtype=np.int64)
        for kk in np.unique(k):
            sel = k == kk
            a = self.table[kk][np.asarray(lo)[sel]]
            b = self.table[kk][np.asarray(hi)[sel] - (1 << int(kk))]
            out[sel] = np.where(self.values[b] < self.values[a], b, a)
        return out


class LCA:
    """Lowest common ancestors via an Euler tour and a sparse table."""

    def __init__(self, parent: Sequence[int], children: Sequence[Sequence[int]], root: int = 0):
        n = len(parent)
        level = [0] * n
        first = [0] * n
        tour: List[int] = []
        depths: List[int] = []
        stack = [(root, 0)]
        while stack:
            x, i = stack.pop()
            if i == 0:
                first[x] = len(tour)
                if x != root:
                    level[x] = level[parent[x]] + 1
            tour.append(x)
            depths.append(level[x])
            ch = children[x]
            if i < len(ch):
                stack.append((x, i + 1))
                stack.append((ch[i], 0))
        self.tour = np.asarray(tour, dtype=np.int64)
        self.first = np.asarray(first, dtype=np.int64)
        self._first = first
        self._tour = tour
        self.rmq = SparseTable(depths)

    def query(self, x: int, y: int) -> int:
        a, b = self._first[x], self._first[y]
        if a > b:
            a, b = b, a
        return self._tour[self.rmq.argmin(a, b + 1)]

    def query_many(self, xs, ys) -> np.ndarray:
        a = self.first[np.asarray(xs, dtype=np.int64)]
        b = self.first[np.asarray(ys, dtype=np.int64)]
        lo = np.minimum(a, b)
        hi = np.maximum(a, b) + 1
        if len(lo) == 0:
            return np.zeros(0, dtype=np.int64)
        return self.tour[self.rmq.argmin(lo, hi)]


class MinSegmentTree:
    """Minimum segment tree answering "leftmost index in [lo, hi) with value < t"."""

    def __init__(self, values: Sequence[int]):
        n = len(values)
        size = 1
        while size < max(n, 1):
            size *= 2
        big = np.iinfo(np.int64).max
        tree = np.full(2 * size, big, dtype=np.int64)
        tree[size: size + n] = values
        i = size
        while i > 1:
            tree[i // 2: i] = np.minimum(tree[i: 2 * i: 2], tree[i + 1: 2 * i: 2])
            i //= 2
        self.n = n
        self.size = size
        self.tree = tree.tolist()

    def first_below(self, lo: int, hi: int, t: int) -> int:
        """Leftmost index in ``[lo, hi)`` whose value is ``< t``, or -1."""
        tree, size = self.tree, self.size
        l, r = lo + size, hi + size
        left, right = [], []
        while l < r:
            if l & 1:
                left.append(l)
                l += 1
            if r & 1:
                r -= 1
                right.append(r)
            l >>= 1
            r >>= 1
        for node in left + right[::-1]:
            if tree[node] < t:
                while node < size:
                    node = 2 * node if tree[2 * node] < t else 2 * node + 1
                return node - size
        return -1
