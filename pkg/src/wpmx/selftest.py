"""Randomized comparison of the index against the brute-force oracles."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

from . import oracle
from .covers import compute_covers, shortest_covers
from .index import QueryStats, WeightedIndex, build_index
from .pwm import WeightedSequence, generate_random
from .wlcp import WlcpOracle

LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass
class SelftestResult:
    instances: int = 0
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    cost_violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.cost_violations


def random_instances(
    n: int, sigma: int, zs: Sequence[float], cases: int, seed: int
) -> Iterator[Tuple[WeightedSequence, float]]:
    """Deterministic stream of small random instances.

    Lengths, alphabet sizes and uncertainty levels are drawn per case; z
    cycles through `zs`.  Probability grids of 1/4 and 1/16 produce many
    products exactly at the threshold, the continuous case covers the rest.
    """
    rng = random.Random(seed)
    for c in range(cases):
        nc = rng.randint(1, n)
        sc = rng.randint(1, sigma)
        frac = rng.random()
        resolution = rng.choice([4, 16, None])
        X = generate_random(nc, LETTERS[:sc], rng.randrange(1 << 30), frac, resolution)
        yield X, zs[c % len(zs)]


def check_instance(
    X: WeightedSequence, z: float, max_pattern: int, result: SelftestResult
) -> WeightedIndex:
    I = build_index(X, z)
    tag = f"n={X.n} z={z} pwm={[dict(r) for r in X.dist]}"
    for m in range(max_pattern + 1):
        for letters in itertools.product(X.alphabet, repeat=m):
            P = "".join(letters)
            occ = oracle.naive_occurrences(P, X, z)
            stats = QueryStats()
            got = I.report(P, stats)
            result.checks += 3
            if got != occ:
                result.failures.append(f"report({P!r}) = {got} != {occ}; {tag}")
            if I.count_occurrences(P) != len(occ):
                result.failures.append(f"count({P!r}) != {len(occ)}; {tag}")
            if I.exists(P) != bool(occ):
                result.failures.append(f"exists({P!r}) != {bool(occ)}; {tag}")
            if stats.comparisons > len(P) or stats.probes > len(got) + 1:
                result.cost_violations.append(
                    f"{P!r}: {stats.comparisons} comparisons, {stats.probes} probes; {tag}"
                )
    W = WlcpOracle(I)
    for i in range(1, X.n + 1):
        result.checks += 1
        expect = oracle.naive_wlcp(X, z, 1, i)
        if W.wlcp(1, i) != expect:
            result.failures.append(f"WPT[{i}] = {W.wlcp(1, i)} != {expect}; {tag}")
    report = compute_covers(I)
    expect = oracle.naive_covers(X, z)
    result.checks += 2
    if report.materialize(I) != expect:
        result.failures.append(f"covers {report.materialize(I)} != {expect}; {tag}")
    shortest = [c for c in expect if len(c) == len(expect[0])] if expect else []
    if shortest_covers(report, I) != sorted(shortest):
        result.failures.append(f"shortest covers != {shortest}; {tag}")
    return I


def run_selftest(
    n: int = 12,
    sigma: int = 3,
    zs: Sequence[float] = (2, 4, 8),
    cases: int = 1000,
    seed: int = 7,
    max_pattern: int = 6,
) -> SelftestResult:
    result = SelftestResult()
    for X, z in random_instances(n, sigma, zs, cases, seed):
        check_instance(X, z, max_pattern, result)
        result.instances += 1
    return result
