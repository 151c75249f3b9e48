"""
Sizes and build times on random input
=====================================

Each level of the trie holds at most z nodes, so every structure stays
O(nz).  This script grows n and z and prints sizes and build times.
"""

import time

from wpmx import build_index, build_suffix_tree, build_trie, finalize, generate_random, trim
from wpmx.selftest import run_selftest

print("n\tz\ttrie\tS(T)\tindex\tbuild_s")
for n in [1000, 5000]:
    for z in [2, 8, 16]:
        X = generate_random(n, "acgt", seed=n, uncertain_fraction=0.3)
        t0 = time.perf_counter()
        T = build_trie(X, z)
        S = build_suffix_tree(T)
        I = finalize(trim(S, T), X, z)
        dt = time.perf_counter() - t0
        assert max(len(level) for level in T.levels) <= z
        print(f"{n}\t{z}\t{len(T)}\t{len(S)}\t{len(I)}\t{dt:.2f}")

# a quick cross-check against brute force
res = run_selftest(n=8, sigma=2, cases=50, max_pattern=4)
print(f"selftest: {res.instances} instances, {res.checks} checks, ok={res.ok}")
