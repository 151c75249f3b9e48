"""
Weighted prefix table and covers
================================

WPT[i] is the longest string that is solid both at position 1 and at
position i.  A cover is a solid prefix whose occurrences leave no gap
longer than the prefix itself.
"""

import os

from wpmx import WlcpOracle, build_index, compute_covers, parse_pwm, shortest_covers
from wpmx import WeightedSequence, covers

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "data", "example.pwm")) as fh:
    X = parse_pwm(fh)

index = build_index(X, 4)
W = WlcpOracle(index)
print("WPT:", [W.wlcp(1, i) for i in range(1, X.n + 1)])
print("wlcp(3, 5) =", W.wlcp(3, 5))

# covers come back as (node, length range) entries
report = compute_covers(index)
for e in report.entries:
    print(f"{index.string(e.node)} range=[{e.min_len}..{e.max_len}]")
print("covers:", report.materialize(index))
print("shortest:", shortest_covers(report, index))

# a solid string is the z = 1 special case
print("covers of abaababaab:", covers(build_index(WeightedSequence.solid("abaababaab"), 1)))
