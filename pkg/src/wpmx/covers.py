"""Covers of a weighted sequence.

A cover is a solid prefix P whose occurrences, together with n + 1, leave no
gap longer than |P|.  Covers are found on the prefix nodes of the index
(nodes whose occurrence list contains position 1) by maintaining a
:class:`MaxgapStructure` along each covering path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

import numpy as np

from .index import WeightedIndex


class MaxgapStructure:
    """Multiset over ``{2..n}`` with O(1) removal and O(1) maxgap.

    The maxgap is taken over the distinct elements together with the
    sentinels 1 and n + 1.  Removals only merge gaps, so the stored value
    never decreases.
    """

    def __init__(self, n: int, elements: Iterable[int] = ()):
        counts = [0] * (n + 2)
        for x in elements:
            if not 2 <= x <= n:
                raise ValueError(f"element {x} outside 2..{n}")
            counts[x] += 1
        self._setup(n, counts)

    @classmethod
    def from_counts(cls, n: int, counts) -> "MaxgapStructure":
        D = cls.__new__(cls)
        counts = list(np.asarray(counts).tolist())
        if len(counts) != n + 2:
            raise ValueError("counts must have length n + 2")
        counts[0] = counts[1] = counts[n + 1] = 0
        D._setup(n, counts)
        return D

    def _setup(self, n: int, counts: List[int]) -> None:
        self.n = n
        self.counts = counts
        self.nxt = [0] * (n + 2)
        self.prv = [0] * (n + 2)
        last = 1
        gap = 0
        for x in range(2, n + 2):
            if counts[x] or x == n + 1:
                self.prv[x] = last
                self.nxt[last] = x
                gap = max(gap, x - last)
                last = x
        self.maxgap = gap

    def value(self) -> int:
        return self.maxgap

    def remove(self, x: int) -> None:
        if not 2 <= x <= self.n or self.counts[x] == 0:
            raise KeyError(f"element {x} is not in the multiset")
        self.counts[x] -= 1
        if self.counts[x] == 0:
            a, b = self.prv[x], self.nxt[x]
            self.nxt[a] = b
            self.prv[b] = a
            if b - a > self.maxgap:
                self.maxgap = b - a

    def elements(self) -> List[int]:
        """Distinct stored elements plus both sentinels, ascending."""
        out = [1]
        x = 1
        while x != self.n + 1:
            x = self.nxt[x]
            out.append(x)
        return out


@dataclass(frozen=True)
class CoverEntry:
    node: int
    min_len: int
    max_len: int


@dataclass
class CoverReport:
    """Every prefix of ``str(node)`` with length in ``[min_len, max_len]`` is a cover."""

    entries: List[CoverEntry]
    inserted: np.ndarray = field(repr=False, default=None)
    removed: np.ndarray = field(repr=False, default=None)

    def size(self) -> int:
        return sum(e.max_len - e.min_len + 1 for e in self.entries)

    def expansion_chars(self) -> int:
        return sum(
            sum(range(e.min_len, e.max_len + 1)) for e in self.entries
        )

    def materialize(self, index: WeightedIndex) -> List[str]:
        out = []
        for e in self.entries:
            s = index.string(e.node)
            out.extend(s[:k] for k in range(e.min_len, e.max_len + 1))
        return sorted(set(out), key=lambda s: (len(s), s))


def prefix_nodes(index: WeightedIndex) -> List[bool]:
    """Mark ancestors of every leaf whose occurrence list holds position 1."""
    mark = [False] * len(index)
    for k in np.nonzero(index.ol == 1)[0].tolist():
        x = int(index.leaf_of[k])
        while x >= 0 and not mark[x]:
            mark[x] = True
            x = index.parent[x]
    return mark


def compute_covers(index: WeightedIndex) -> CoverReport:
    n = index.n
    ol = index.ol
    V = len(index)
    inserted = np.zeros(len(ol), dtype=np.int64)
    removed = np.zeros(len(ol), dtype=np.int64)
    if n == 0:
        return CoverReport([], inserted, removed)

    is_prefix = prefix_nodes(index)
    pchildren: Dict[int, List[int]] = {
        x: [c for c in index.child_list[x] if is_prefix[c]] for x in range(V) if is_prefix[x]
    }

    def add_range(C: np.ndarray, lo: int, hi: int) -> None:
        ks = np.arange(lo, hi)
        ks = ks[ol[lo:hi] != 1]
        np.add.at(C, ol[ks], 1)
        inserted[ks] += 1

    # bottom-up: counts for every prefix node, kept for starting nodes only
    carr: Dict[int, np.ndarray] = {}
    for x in range(V - 1, -1, -1):
        if not is_prefix[x]:
            continue
        pc = pchildren[x]
        if not pc:
            C = np.zeros(n + 2, dtype=np.int64)
            add_range(C, index.lo[x], index.hi[x])
        elif len(pc) == 1:
            C = carr.pop(pc[0])
        else:
            C = np.zeros(n + 2, dtype=np.int64)
            for w in pc:
                C += carr[w]
        for w in index.child_list[x]:
            if not is_prefix[w]:
                add_range(C, index.lo[w], index.hi[w])
        carr[x] = C

    entries: List[CoverEntry] = []
    depth = index.depth

    def cover_check(w: int, dv: int, D: MaxgapStructure) -> None:
        if w == 0:
            return
        mg = D.value()
        if mg <= depth[w]:
            lo = max(mg, dv + 1)
            if lo <= depth[w]:
                entries.append(CoverEntry(w, lo, depth[w]))

    # top-down along each covering path
    for s in sorted(carr):
        D = MaxgapStructure.from_counts(n, carr[s])
        cover_check(s, depth[index.parent[s]] if s else 0, D)
        v = s
        while len(pchildren[v]) == 1:
            w = pchildren[v][0]
            for c in index.child_list[v]:
                if c == w:
                    continue
                for k in range(index.lo[c], index.hi[c]):
                    D.remove(int(ol[k]))
                    removed[k] += 1
            cover_check(w, depth[v], D)
            v = w
    entries.sort(key=lambda e: (e.min_len, e.node))
    return CoverReport(entries, inserted, removed)


def shortest_covers(report: CoverReport, index: WeightedIndex) -> List[str]:
    if not report.entries:
        return []
    m = min(e.min_len for e in report.entries)
    return sorted({index.string(e.node)[:m] for e in report.entries if e.min_len == m})


def covers(index: WeightedIndex, shortest: bool = False) -> List[str]:
    report = compute_covers(index)
    if shortest:
        return shortest_covers(report, index)
    return report.materialize(index)
