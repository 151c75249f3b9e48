"""Weighted longest common prefixes and the weighted prefix table."""

from __future__ import annotations

from typing import List, Optional

from .index import QueryStats, WeightedIndex, build_index
from .pwm import WeightedSequence


class WlcpOracle:
    """Answers ``wlcp(i, j)`` in O(z) time per query.

    ``leaves_at[i]`` lists, in pre-order, the leaves whose occurrence list
    contains position ``i``; one scan of the occurrence list produces them
    already sorted because leaf ids are pre-order numbers.
    """

    def __init__(self, index: WeightedIndex):
        self.index = index
        n = index.n
        self.leaves_at: List[List[int]] = [[] for _ in range(n + 1)]
        for leaf, pos in zip(index.leaf_of.tolist(), index.ol.tolist()):
            self.leaves_at[pos].append(leaf)
        depth = index.depth
        self.longest = [max((depth[x] for x in L), default=0) for L in self.leaves_at]

    def wlcp(self, i: int, j: int, stats: Optional[QueryStats] = None) -> int:
        n = self.index.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"positions ({i}, {j}) outside 1..{n}")
        if i == j:
            return self.longest[i]
        a, b = self.leaves_at[i], self.leaves_at[j]
        depth = self.index.depth
        lca = self.index.lca
        best = 0
        p = q = 0
        last_leaf, last_side = -1, -1
        examined = 0
        # merge by pre-order; only neighbours from different lists matter
        while p < len(a) or q < len(b):
            if q >= len(b) or (p < len(a) and a[p] <= b[q]):
                leaf, side = a[p], 0
                p += 1
            else:
                leaf, side = b[q], 1
                q += 1
            examined += 1
            if last_side >= 0 and side != last_side:
                d = depth[lca.query(last_leaf, leaf)]
                if d > best:
                    best = d
            last_leaf, last_side = leaf, side
        if stats is not None:
            stats.comparisons += examined
        return best


def weighted_prefix_table(X: WeightedSequence, z: float, index: Optional[WeightedIndex] = None) -> List[int]:
    """``WPT[i] = wlcp(1, i)`` for i = 1..n, returned as a 0-based list."""
    if index is None:
        index = build_index(X, z)
    w = WlcpOracle(index)
    return [w.wlcp(1, i) for i in range(1, X.n + 1)]
