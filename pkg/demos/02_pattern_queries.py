"""
Building the index and asking where a pattern occurs
====================================================

The index is built once in O(nz) time.  Each query then walks |P| letters
down a compacted trie and lists the distinct starting positions.
"""

import os

from wpmx import QueryStats, build_index, parse_pwm
from wpmx.oracle import naive_occurrences

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "data", "example.pwm")) as fh:
    X = parse_pwm(fh)

z = 4
index = build_index(X, z)
print("index nodes:", len(index), "occurrence entries:", len(index.ol))

# the maximal solid factors become the leaves
for factor, positions in sorted(index.maximal_factors().items()):
    print(f"  {factor:12s} {positions}")

for P in ["aba", "abab", "bbb", "aaaaaa"]:
    stats = QueryStats()
    occ = index.report(P, stats)
    print(f"{P}: report={occ} count={index.count_occurrences(P)} "
          f"comparisons={stats.comparisons} probes={stats.probes}")
    # a brute-force scan agrees
    assert occ == naive_occurrences(P, X, z)

# a lower z makes the threshold stricter
print("bbb with z=2:", build_index(X, 2).report("bbb"))
