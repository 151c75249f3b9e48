"""Suffix tree of a trie.

A compacted trie of all upward strings ``str(u, root)`` of a
:class:`~wpmx.trie.SolidFactorTrie`.  Edge labels are never materialized:
an edge is the pair ``(trie node, length)`` meaning "read `length` letters
walking up from that trie node".

Construction sorts the upward strings by prefix doubling over the trie's
binary-lifting table and then builds the compacted trie from the sorted
order and adjacent longest common prefixes, in O(N log N) time overall.
"""

from __future__ import annotations

from typing import Dict, Iterator, List

import numpy as np

from .trie import ROOT, SolidFactorTrie


def level_ancestors(J: np.ndarray, nodes: np.ndarray, k: np.ndarray) -> np.ndarray:
    """Vectorized k-th ancestor lookup against a binary-lifting table."""
    nodes = np.array(nodes, dtype=np.int64)
    k = np.asarray(k, dtype=np.int64)
    for bit in range(J.shape[0]):
        sel = ((k >> bit) & 1).astype(bool)
        if sel.any():
            nodes[sel] = J[bit][nodes[sel]]
    return nodes


def sort_upward_strings(T: SolidFactorTrie):
    """Sort trie nodes by upward string.

    Returns ``(order, lcp)`` where ``order`` lists node ids in increasing
    lexicographic order of their upward strings (root, the empty string,
    first) and ``lcp[i]`` is the longest common prefix of the strings of
    ``order[i - 1]`` and ``order[i]`` (``lcp[0] = 0``).
    """
    N = len(T)
    codes = {c: k + 1 for k, c in enumerate(T.X.alphabet)}
    R = np.fromiter((codes.get(c, 0) for c in T.letter), dtype=np.int64, count=N)
    J = T.jump_table()
    ranks = [R]
    k = 0
    while len(np.unique(R)) < N and (1 << k) <= T.n:
        key = R * (int(R.max()) + 1) + R[J[k]]
        _, R = np.unique(key, return_inverse=True)
        R = R.astype(np.int64)
        ranks.append(R)
        k += 1
    order = np.argsort(ranks[-1], kind="stable")

    a = order[:-1].copy()
    b = order[1:].copy()
    lcp = np.zeros(N, dtype=np.int64)
    acc = np.zeros(len(a), dtype=np.int64)
    # ranks[j] compares the first 2^j letters; the last level may be total
    for j in range(len(ranks) - 2, -1, -1):
        eq = ranks[j][a] == ranks[j][b]
        if eq.any():
            acc[eq] += 1 << j
            a[eq] = J[j][a[eq]]
            b[eq] = J[j][b[eq]]
    lcp[1:] = acc
    return order, lcp


class SuffixTreeOfTrie:
    def __init__(self, T: SolidFactorTrie):
        self.T = T
        self.parent: List[int] = []
        self.depth: List[int] = []
        self.children: List[Dict[str, int]] = []
        self.rep: List[int] = []
        self.terminal: List[int] = []
        self.edge_start: List[int] = []

    def __len__(self) -> int:
        return len(self.parent)

    def _new_node(self, parent: int, depth: int, rep: int) -> int:
        x = len(self.parent)
        self.parent.append(parent)
        self.depth.append(depth)
        self.children.append({})
        self.rep.append(rep)
        self.terminal.append(-1)
        return x

    def edge(self, x: int):
        """``(trie node, length)`` of the edge entering `x`."""
        if x == 0:
            return (ROOT, 0)
        return (self.edge_start[x], self.depth[x] - self.depth[self.parent[x]])

    def label(self, x: int) -> int:
        """Starting position stored at terminal `x`."""
        u = self.terminal[x]
        if u < 0:
            raise ValueError(f"node {x} is not a terminal")
        return self.T.position(u)

    def string(self, x: int) -> str:
        return self.T.upward(self.rep[x], self.depth[x])

    def preorder(self) -> Iterator[int]:
        stack = [0]
        while stack:
            x = stack.pop()
            yield x
            ch = self.children[x]
            stack.extend(ch[c] for c in sorted(ch, reverse=True))

    def terminals(self) -> List[int]:
        return [x for x in range(len(self)) if self.terminal[x] >= 0]

    def dump(self) -> str:
        lines = []
        for x in self.preorder():
            start, ln = self.edge(x)
            term = self.terminal[x] >= 0
            lines.append(
                f"{x} {self.depth[x]} {self.parent[x]} edge=({start},{ln}) "
                f"{'T' if term else '-'} {self.label(x) if term else '-'}"
            )
        return "\n".join(lines) + "\n"


def upward_label(T: SolidFactorTrie, edge) -> str:
    start, length = edge
    return T.upward(start, length)


def build_suffix_tree(T: SolidFactorTrie) -> SuffixTreeOfTrie:
    S = SuffixTreeOfTrie(T)
    S._new_node(-1, 0, ROOT)
    N = len(T)
    if N == 1:
        S.edge_start = [ROOT]
        return S
    order, lcp = sort_upward_strings(T)
    J = T.jump_table()
    level = np.asarray(T.level, dtype=np.int64)
    # letter right after the common prefix, for the new string and its predecessor
    cur_next = level_ancestors(J, order[1:], lcp[1:])
    prev_next = level_ancestors(J, order[:-1], np.minimum(lcp[1:], level[order[:-1]]))
    letter = T.letter
    depth = S.depth
    stack = [0]
    for i in range(1, N):
        u = int(order[i])
        d = int(level[u])
        ell = int(lcp[i])
        last = -1
        while depth[stack[-1]] > ell:
            last = stack.pop()
        top = stack[-1]
        if depth[top] < ell:
            mid = S._new_node(top, ell, S.rep[last])
            S.children[top][letter[T.ancestor(S.rep[last], depth[top])]] = mid
            S.parent[last] = mid
            S.children[mid][letter[int(prev_next[i - 1])]] = last
            stack.append(mid)
            top = mid
        x = S._new_node(top, d, u)
        S.terminal[x] = u
        S.children[top][letter[int(cur_next[i - 1])]] = x
        stack.append(x)

    reps = np.asarray(S.rep, dtype=np.int64)
    par = np.asarray(S.parent, dtype=np.int64)
    par[0] = 0
    pdepth = np.asarray(S.depth, dtype=np.int64)[par]
    S.edge_start = level_ancestors(J, reps, pdepth).tolist()
    S.edge_start[0] = ROOT
    return S
