"""Solid factor trie.

The trie stores, read bottom-up, every extension of a solid factor: a solid
factor starting at some position followed by the heavy string up to the end
of the sequence.  Level ``i`` holds extensions of length ``i``, i.e. strings
starting at position ``n - i + 1``.  A node's upward string (from the node to
the root) is therefore a suffix-aligned extension, and the downward spelling
is its reversal.

Nodes live in flat parallel lists indexed by integer id; id 0 is the root.
"""

from __future__ import annotations

from typing import List

import numpy as np

from .pwm import WeightedSequence, heavy_string, meets_threshold, require_valid, sorted_letters

ROOT = 0


class SolidFactorTrie:
    def __init__(self, X: WeightedSequence, z: float):
        self.X = X
        self.z = float(z)
        self.n = X.n
        self.parent: List[int] = []
        self.letter: List[str] = []
        self.prob: List[float] = []
        self.level: List[int] = []
        self.back: List[int] = []
        self.pi_back: List[float] = []
        self.children: List[List[int]] = []
        self.end: List[int] = []
        self.length: List[int] = []
        self.levels: List[List[int]] = []
        self.heavy: List[int] = []
        self._jump = None

    def __len__(self) -> int:
        return len(self.parent)

    def _new_node(self, parent: int, letter: str, prob: float, level: int) -> int:
        u = len(self.parent)
        self.parent.append(parent)
        self.letter.append(letter)
        self.prob.append(prob)
        self.level.append(level)
        self.back.append(u)
        self.pi_back.append(1.0)
        self.children.append([])
        self.end.append(-1)
        self.length.append(-1)
        if parent >= 0:
            self.children[parent].append(u)
        return u

    @property
    def leaf(self) -> int:
        """Bottom node of the heavy path."""
        return self.heavy[-1]

    def position(self, u: int) -> int:
        """Starting position (1-based) of the extension represented by `u`."""
        return self.n - self.level[u] + 1

    def upward(self, u: int, k: int | None = None) -> str:
        """First `k` letters read from `u` towards the root (all if None)."""
        if k is None:
            k = self.level[u]
        if k > self.level[u]:
            raise ValueError(f"node {u} has only {self.level[u]} letters above it")
        out = []
        for _ in range(k):
            out.append(self.letter[u])
            u = self.parent[u]
        return "".join(out)

    def maximal_factor(self, u: int) -> str:
        return self.upward(u, self.length[u])

    def is_ancestor(self, a: int, u: int) -> bool:
        """True if `a` is an ancestor of `u` (or `u` itself)."""
        d = self.level[u] - self.level[a]
        return d >= 0 and self.ancestor(u, d) == a

    def jump_table(self) -> np.ndarray:
        """Binary lifting table: ``J[k, u]`` is the 2^k-th ancestor of u (root saturates)."""
        if self._jump is None:
            par = np.asarray(self.parent, dtype=np.int64)
            par[ROOT] = ROOT
            rows = [par]
            span = 1
            while span * 2 <= max(self.n, 1):
                rows.append(rows[-1][rows[-1]])
                span *= 2
            self._jump = np.vstack(rows)
        return self._jump

    def ancestor(self, u: int, k: int) -> int:
        """The ancestor of `u` exactly `k` levels up."""
        if k < 0 or k > self.level[u]:
            raise ValueError("ancestor distance out of range")
        J = self.jump_table()
        bit = 0
        while k:
            if k & 1:
                u = int(J[bit, u])
            k >>= 1
            bit += 1
        return u

    def dump(self) -> str:
        """One line per node: ``id level letter parent back pi_back end len``."""
        lines = []
        for lvl in self.levels:
            for u in lvl:
                lines.append(
                    f"{u} {self.level[u]} {self.letter[u] or '-'} {self.parent[u]} "
                    f"{self.back[u]} {self.pi_back[u]:.12g} {self.end[u]} {self.length[u]}"
                )
        return "\n".join(lines) + "\n"


def build_trie(X: WeightedSequence, z: float, annotate: bool = True) -> SolidFactorTrie:
    """Construct the solid factor trie level by level.

    Level ``i`` is grown from level ``i - 1`` by prepending letters of
    position ``n - i + 1``; a node ``v`` gets a child for letter ``s`` iff
    ``s`` followed by the upward string from ``v`` to ``back(v)`` is solid.
    Letters are tried by non-increasing probability so the first failure
    ends the scan for ``v``.
    """
    require_valid(X)
    if z < 1:
        raise ValueError("z must be at least 1")
    T = SolidFactorTrie(X, z)
    n = X.n
    heavy = heavy_string(X)
    root = T._new_node(-1, "", 1.0, 0)
    T.heavy.append(root)
    T.levels.append([root])
    for i in range(1, n + 1):
        pos = n - i + 1
        letters = sorted_letters(X, pos)
        hletter = heavy[pos - 1]
        hprev = T.heavy[i - 1]
        h = T._new_node(hprev, hletter, X.prob(pos, hletter), i)
        T.heavy.append(h)
        level = [h]
        for v in T.levels[i - 1]:
            pb = T.pi_back[v]
            for s, p in letters:
                if v == hprev and s == hletter:
                    continue
                q = p * pb
                if not meets_threshold(q, z):
                    break
                u = T._new_node(v, s, p, i)
                T.back[u] = T.back[v]
                T.pi_back[u] = q
                level.append(u)
        T.levels.append(level)
    if annotate:
        annotate_end_len(T)
    return T


def _hanging_leaves(T: SolidFactorTrie, v: int, skip: int) -> List[int]:
    """Leaves of the subtrees rooted at children of `v` other than `skip`."""
    out = []
    stack = [c for c in T.children[v] if c != skip]
    while stack:
        u = stack.pop()
        ch = T.children[u]
        if ch:
            stack.extend(ch)
        else:
            out.append(u)
    return out


def annotate_end_len(T: SolidFactorTrie) -> SolidFactorTrie:
    """Set ``end`` and ``length`` for every node by sweeping up the heavy path.

    The active set maps a node whose children are all resolved to the
    probability of the path from it up to the heavy-path node currently
    being considered.  A node leaves the set when the next heavy letter
    would push that probability below 1/z.
    """
    z = T.z
    H = T.heavy
    pending = [len(c) for c in T.children]
    end = T.end
    active: dict[int, float] = {}
    for lvl in range(T.n, 0, -1):
        v = H[lvl]
        if lvl == T.n:
            active[v] = 1.0
        else:
            for leaf in _hanging_leaves(T, v, H[lvl + 1]):
                active[leaf] = T.pi_back[leaf]
        w = H[lvl - 1]
        q = T.prob[v]
        survivors: dict[int, float] = {}
        work = list(active.items())
        while work:
            u, p = work.pop()
            pw = p * q
            if meets_threshold(pw, z):
                survivors[u] = pw
                continue
            end[u] = v
            par = T.parent[u]
            pending[par] -= 1
            if pending[par] == 0:
                if u == v:
                    survivors[par] = 1.0
                else:
                    work.append((par, p / T.prob[u]))
        active = survivors
    for u in range(len(T)):
        if end[u] < 0:
            end[u] = ROOT
    for u in range(len(T)):
        T.length[u] = T.level[u] - T.level[end[u]]
    return T
