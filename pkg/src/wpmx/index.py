"""Weighted index: compacted trie of maximal solid factors plus query support.

Pipeline::

    T  = build_trie(X, z)          # solid factor trie with end/len
    S  = build_suffix_tree(T)      # suffix tree of the trie
    T2 = trim(S, T)                # compacted trie of maximal solid factors
    I  = finalize(T2, X, z)        # $-leaves, occurrence list, counts

or simply ``build_index(X, z)``.

Edge labels of the index are ``(trie node, length)`` pairs read upward in
the solid factor trie, so the index keeps the trie's parent/letter arrays.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from .pwm import TERMINATOR, WeightedSequence
from .rmq import LCA, MinSegmentTree
from .suffix_tree import SuffixTreeOfTrie, build_suffix_tree
from .trie import ROOT, SolidFactorTrie, build_trie

NO_NODE = -1


@dataclass(frozen=True)
class MatchPoint:
    node: int
    depth: int


@dataclass
class QueryStats:
    """Per-call instrumentation counters."""

    comparisons: int = 0
    probes: int = 0


class CompactedMaxFactorTrie:
    """Compacted trie whose root-to-terminal strings are the maximal solid factors.

    ``labels[x]`` lists, ascending, the positions where the string of `x`
    is a maximal solid factor; a node with a non-empty list is a terminal.
    """

    def __init__(self, T: SolidFactorTrie):
        self.T = T
        self.parent: List[int] = []
        self.depth: List[int] = []
        self.rep: List[int] = []
        self.labels: List[List[int]] = []
        self.children: List[Dict[str, int]] = []
        self.edge_start: List[int] = []

    def __len__(self) -> int:
        return len(self.parent)

    def string(self, x: int) -> str:
        return self.T.upward(self.rep[x], self.depth[x])

    def terminals(self) -> List[int]:
        return [x for x in range(len(self)) if self.labels[x]]

    def factors(self) -> Dict[str, List[int]]:
        """``{maximal solid factor: positions}``."""
        return {self.string(x): list(self.labels[x]) for x in self.terminals()}


def _maxlen(S: SuffixTreeOfTrie, T: SolidFactorTrie, order: Sequence[int]) -> List[int]:
    maxlen = [-1] * len(S)
    for x in reversed(order):
        u = S.terminal[x]
        m = T.length[u] if u >= 0 else -1
        for c in S.children[x].values():
            m = max(m, maxlen[c])
        maxlen[x] = m
    return maxlen


def _landings(S: SuffixTreeOfTrie, T: SolidFactorTrie) -> Dict[int, List[tuple]]:
    """Where each terminal lands once lifted to depth len.

    Returns ``{S node y: [(depth, position), ...]}``; every landing point
    lies on the edge entering `y` (or at the root for length 0).
    """
    land: Dict[int, List[tuple]] = defaultdict(list)
    path: List[int] = []
    pdepth: List[int] = []
    stack = [(0, True)]
    while stack:
        x, entering = stack.pop()
        if not entering:
            path.pop()
            pdepth.pop()
            continue
        path.append(x)
        pdepth.append(S.depth[x])
        u = S.terminal[x]
        if u >= 0:
            L = T.length[u]
            y = path[bisect_left(pdepth, L)]
            land[y].append((L, T.position(u)))
        stack.append((x, False))
        stack.extend((c, True) for c in S.children[x].values())
    return land


def trim(S: SuffixTreeOfTrie, T: SolidFactorTrie) -> CompactedMaxFactorTrie:
    """Cut the suffix tree of the trie down to the maximal solid factors.

    Every terminal is lifted to string depth ``len`` of its trie node.  A
    point survives iff some terminal below it has ``len`` at least its depth
    (its ``maxlen``).  Positions landing on the same point share one label
    list; points that end up unary and unlabeled are compacted away.
    """
    order = list(S.preorder())
    maxlen = _maxlen(S, T, order)
    land = _landings(S, T)

    # provisional tree, one node per surviving edge end or landing point
    p_parent = [NO_NODE]
    p_depth = [0]
    p_rep = [ROOT]
    p_labels = [sorted(pos for _, pos in land.get(0, ()))]
    bottom = {0: 0}
    for y in order[1:]:
        p = S.parent[y]
        if p not in bottom:
            continue
        dp = S.depth[p]
        if maxlen[y] <= dp:
            continue
        e = min(S.depth[y], maxlen[y])
        groups: Dict[int, List[int]] = defaultdict(list)
        for d, pos in land.get(y, ()):
            groups[d].append(pos)
        cur = bottom[p]
        for d in sorted(set(groups) | {e}):
            p_parent.append(cur)
            p_depth.append(d)
            p_rep.append(S.rep[y])
            p_labels.append(sorted(groups.get(d, ())))
            cur = len(p_parent) - 1
        if e == S.depth[y]:
            bottom[y] = cur

    nchild = [0] * len(p_parent)
    for x in range(1, len(p_parent)):
        nchild[p_parent[x]] += 1

    C = CompactedMaxFactorTrie(T)
    kept_anc = [NO_NODE] * len(p_parent)
    for x in range(len(p_parent)):
        if x == 0 or p_labels[x] or nchild[x] != 1:
            new = len(C.parent)
            par = kept_anc[p_parent[x]] if x else NO_NODE
            C.parent.append(par)
            C.depth.append(p_depth[x])
            C.rep.append(p_rep[x])
            C.labels.append(p_labels[x])
            C.children.append({})
            if x == 0:
                C.edge_start.append(ROOT)
            else:
                start = T.ancestor(p_rep[x], C.depth[par])
                C.edge_start.append(start)
                C.children[par][T.letter[start]] = new
            kept_anc[x] = new
        else:
            kept_anc[x] = kept_anc[p_parent[x]]
    return C


class WeightedIndex:
    """Queryable index over the maximal solid factors of a weighted sequence.

    Nodes are numbered in pre-order (children ordered ``$`` first, then by
    alphabet), so the subtree of `x` occupies a contiguous id range and a
    contiguous slice ``OL[lo[x]:hi[x]]`` of the global occurrence list.
    ``$``-leaves have ``edge_start == -1`` and the same string depth as
    their parent.  Immutable after construction; queries are re-entrant.
    """

    def __init__(
        self,
        n: int,
        z: float,
        alphabet: str,
        trie_parent: Sequence[int],
        trie_letter: Sequence[str],
        parent: Sequence[int],
        depth: Sequence[int],
        edge_start: Sequence[int],
        key: Sequence[str],
        ol: Sequence[int],
        lo: Sequence[int],
        hi: Sequence[int],
        count: Optional[Sequence[int]] = None,
    ):
        self.n = n
        self.z = float(z)
        self.alphabet = alphabet
        self.trie_parent = list(trie_parent)
        self.trie_letter = list(trie_letter)
        self.parent = list(parent)
        self.depth = list(depth)
        self.edge_start = list(edge_start)
        self.key = list(key)
        self.ol = np.asarray(ol, dtype=np.int64)
        self.lo = list(lo)
        self.hi = list(hi)
        self._letters = set(alphabet)

        V = len(self.parent)
        self.children: List[Dict[str, int]] = [{} for _ in range(V)]
        self.child_list: List[List[int]] = [[] for _ in range(V)]
        for x in range(1, V):
            p = self.parent[x]
            self.children[p][self.key[x]] = x
            self.child_list[p].append(x)
        self.leaves = [x for x in range(V) if not self.child_list[x]]

        leaf_of = np.empty(len(self.ol), dtype=np.int64)
        for x in self.leaves:
            leaf_of[self.lo[x]: self.hi[x]] = x
        self.leaf_of = leaf_of
        last: Dict[int, int] = {}
        prev = np.empty(len(self.ol), dtype=np.int64)
        for k, pos in enumerate(self.ol.tolist()):
            prev[k] = last.get(pos, -1)
            last[pos] = k
        self.prev = prev
        self._prev_tree = MinSegmentTree(prev)
        self._ol_list = self.ol.tolist()
        self.lca = LCA(self.parent, self.child_list)
        self.count = list(count) if count is not None else self._color_set_sizes()

    def __len__(self) -> int:
        return len(self.parent)

    # -- construction helpers -------------------------------------------

    def _color_set_sizes(self) -> List[int]:
        """Distinct positions per subtree.

        Each occurrence-list entry is a unit leaf; consecutive equal entries
        (in pre-order) are double counted exactly at their LCA, where one is
        subtracted.
        """
        V = len(self.parent)
        corr = np.zeros(V, dtype=np.int64)
        ks = np.nonzero(self.prev >= 0)[0]
        if len(ks):
            at = self.lca.query_many(self.leaf_of[self.prev[ks]], self.leaf_of[ks])
            np.add.at(corr, at, 1)
        corr = corr.tolist()
        for x in range(V - 1, 0, -1):
            corr[self.parent[x]] += corr[x]
        return [self.hi[x] - self.lo[x] - corr[x] for x in range(V)]

    # -- navigation -----------------------------------------------------

    def is_dollar(self, x: int) -> bool:
        return self.key[x] == TERMINATOR

    def edge_label(self, x: int) -> str:
        if x == 0 or self.is_dollar(x):
            return ""
        out = []
        t = self.edge_start[x]
        for _ in range(self.depth[x] - self.depth[self.parent[x]]):
            out.append(self.trie_letter[t])
            t = self.trie_parent[t]
        return "".join(out)

    def string(self, x: int) -> str:
        parts = []
        while x > 0:
            parts.append(self.edge_label(x))
            x = self.parent[x]
        return "".join(reversed(parts))

    def leaf_positions(self, x: int) -> List[int]:
        return self._ol_list[self.lo[x]: self.hi[x]]

    def maximal_factors(self) -> Dict[str, List[int]]:
        return {self.string(x): self.leaf_positions(x) for x in self.leaves}

    # -- queries --------------------------------------------------------

    def locate(self, P: str, stats: Optional[QueryStats] = None) -> Optional[MatchPoint]:
        """Descend from the root spelling `P`; None if `P` leaves the trie.

        The first letter of each edge is matched by the child lookup; every
        other pattern letter is compared at most once.
        """
        m = len(P)
        x = 0
        k = 0
        comps = 0
        tl, tp = self.trie_letter, self.trie_parent
        try:
            while k < m:
                c = P[k]
                if c not in self._letters:
                    return None
                child = self.children[x].get(c)
                if child is None:
                    return None
                t = tp[self.edge_start[child]]
                j = 1
                k += 1
                L = self.depth[child] - self.depth[x]
                while j < L and k < m:
                    comps += 1
                    if tl[t] != P[k]:
                        return None
                    t = tp[t]
                    j += 1
                    k += 1
                x = child
            return MatchPoint(x, m)
        finally:
            if stats is not None:
                stats.comparisons += comps

    def exists(self, P: str) -> bool:
        if self.n < 1:
            return False
        return self.locate(P) is not None

    def count_occurrences(self, P: str) -> int:
        mp = self.locate(P)
        return 0 if mp is None else self.count[mp.node]

    def report(self, P: str, stats: Optional[QueryStats] = None) -> List[int]:
        mp = self.locate(P, stats)
        if mp is None:
            return []
        return sorted(self.crl_query(self.lo[mp.node], self.hi[mp.node], stats))

    def crl_query(self, lo: int, hi: int, stats: Optional[QueryStats] = None) -> List[int]:
        """Distinct values of ``OL[lo:hi]`` in order of first appearance.

        Entry k is the first of its value inside the range iff its previous
        occurrence lies before `lo`; each probe finds the next such entry or
        ends the scan, so probes = output size + 1.
        """
        if lo < 0 or hi > len(self._ol_list) or lo > hi:
            raise IndexError(f"range [{lo}, {hi}) outside occurrence list of size {len(self._ol_list)}")
        out = []
        cur = lo
        probes = 0
        while cur < hi:
            probes += 1
            k = self._prev_tree.first_below(cur, hi, lo)
            if k < 0:
                break
            out.append(self._ol_list[k])
            cur = k + 1
        if stats is not None:
            stats.probes += probes
        return out


def _child_order(alphabet: str):
    rank = {c: i for i, c in enumerate(alphabet)}
    rank[TERMINATOR] = -1
    return rank


def finalize(C: CompactedMaxFactorTrie, X: WeightedSequence, z: float) -> WeightedIndex:
    """Add ``$``-leaves, renumber in pre-order and lay out the occurrence list."""
    T = C.T
    rank = _child_order(X.alphabet)
    # (kind, id): kind 0 = node of C, kind 1 = $-leaf hanging off node id
    parent: List[int] = []
    depth: List[int] = []
    edge_start: List[int] = []
    key: List[str] = []
    lists: List[List[int]] = []
    stack = [((0, 0), NO_NODE, "")]
    while stack:
        (kind, x), par, k = stack.pop()
        new = len(parent)
        parent.append(par)
        key.append(k)
        depth.append(C.depth[x])
        if kind == 1:
            edge_start.append(NO_NODE)
            lists.append(C.labels[x])
            continue
        edge_start.append(C.edge_start[x])
        ch = sorted(C.children[x].items(), key=lambda e: rank[e[0]])
        if not ch:
            lists.append(C.labels[x])
            continue
        lists.append([])
        pending = [((0, c), new, letter) for letter, c in ch]
        if C.labels[x]:
            pending.insert(0, ((1, x), new, TERMINATOR))
        stack.extend(reversed(pending))

    V = len(parent)
    lo = [0] * V
    hi = [0] * V
    ol: List[int] = []
    for x in range(V):
        lo[x] = len(ol)
        ol.extend(lists[x])
    # subtree of x in pre-order ends where the next non-descendant starts
    size = [1] * V
    for x in range(V - 1, 0, -1):
        size[parent[x]] += size[x]
    for x in range(V):
        end = x + size[x]
        hi[x] = lo[end] if end < V else len(ol)
    return WeightedIndex(
        X.n, z, X.alphabet, T.parent, T.letter,
        parent, depth, edge_start, key, ol, lo, hi,
    )


def build_index(X: WeightedSequence, z: float) -> WeightedIndex:
    T = build_trie(X, z)
    S = build_suffix_tree(T)
    return finalize(trim(S, T), X, z)
