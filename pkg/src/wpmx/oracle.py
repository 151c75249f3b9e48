"""Brute-force reference implementations.

Everything here is a direct transcription of a definition and shares no
code with the index except :func:`wpmx.pwm.meets_threshold`.  Inputs are
capped at desk scale.
"""

from __future__ import annotations

from typing import List

from .pwm import WeightedSequence, meets_threshold

MAX_N = 64
MAX_Z = 64


def _check_bounds(X: WeightedSequence, z: float) -> None:
    assert X.n <= MAX_N, f"oracle limited to n <= {MAX_N}"
    assert z <= MAX_Z, f"oracle limited to z <= {MAX_Z}"


def _window_prob(P: str, X: WeightedSequence, i: int) -> float:
    p = 1.0
    for k, c in enumerate(P):
        p *= dict(X.dist[i - 1 + k]).get(c, 0.0)
    return p


def naive_occurrences(P: str, X: WeightedSequence, z: float) -> List[int]:
    _check_bounds(X, z)
    last = X.n - max(len(P), 1) + 1
    return [
        i for i in range(1, last + 1)
        if meets_threshold(_window_prob(P, X, i), z)
    ]


def naive_maximal_factors(X: WeightedSequence, z: float, i: int) -> List[str]:
    """All right-maximal solid factors starting at position `i`, sorted."""
    _check_bounds(X, z)
    out = []
    stack = [("", 1.0)]
    while stack:
        f, p = stack.pop()
        j = i + len(f)
        extended = False
        if j <= X.n:
            for c, q in X.dist[j - 1]:
                if meets_threshold(p * q, z):
                    stack.append((f + c, p * q))
                    extended = True
        if not extended:
            out.append(f)
    return sorted(out)


def _lcp(a: str, b: str) -> int:
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


def naive_wlcp(X: WeightedSequence, z: float, i: int, j: int) -> int:
    mi = naive_maximal_factors(X, z, i)
    mj = naive_maximal_factors(X, z, j)
    return max(_lcp(a, b) for a in mi for b in mj)


def maxgap(values) -> int:
    s = sorted(set(values))
    return max((b - a for a, b in zip(s, s[1:])), default=0)


def naive_covers(X: WeightedSequence, z: float) -> List[str]:
    """All covers, sorted by length then lexicographically."""
    prefixes = set()
    for f in naive_maximal_factors(X, z, 1):
        for k in range(1, len(f) + 1):
            prefixes.add(f[:k])
    out = []
    for P in prefixes:
        occ = naive_occurrences(P, X, z)
        if 1 in occ and maxgap(occ + [X.n + 1]) <= len(P):
            out.append(P)
    return sorted(out, key=lambda s: (len(s), s))


def naive_extensions(X: WeightedSequence, z: float, heavy: str) -> set:
    """Extensions of all solid factors: factor followed by the heavy suffix.

    `heavy` is passed in so the caller controls the heavy-letter tie-break.
    """
    out = {""}
    for i in range(1, X.n + 1):
        for f in naive_maximal_factors(X, z, i):
            for k in range(len(f) + 1):
                out.add(f[:k] + heavy[i - 1 + k:])
    return out
