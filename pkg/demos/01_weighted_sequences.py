"""
Weighted sequences and solid factors
====================================

A weighted sequence gives, at every position, a probability for each
letter.  A string is a solid factor at position i when the product of its
letter probabilities, read from i, is at least 1/z.
"""

import os

from wpmx import heavy_string, match_probability, parse_pwm
from wpmx.oracle import naive_maximal_factors

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "data", "example.pwm")) as fh:
    X = parse_pwm(fh)

print("length:", X.n, "alphabet:", X.alphabet)
for i in range(1, X.n + 1):
    print(i, X.row(i))

# the heavy string picks the most likely letter everywhere
print("heavy string:", heavy_string(X))

# probabilities of a few windows starting at position 1
for P in ["a", "ab", "abab", "ababa", "ababab"]:
    print(f"P({P!r} at 1) = {match_probability(P, X, 1)}")

# with z = 4 the threshold is 1/4; these are the longest solid factors at 1
print("maximal solid factors at 1:", naive_maximal_factors(X, 4, 1))
