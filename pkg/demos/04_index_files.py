"""
Saving and loading indexes
==========================

WIDX files hold everything a query needs, so a large index is built once
and reloaded later.  A CRC-32 trailer catches damaged files.
"""

import io

from wpmx import build_index, dumps, generate_random, load, loads, save
from wpmx.widx import IndexFormatError

X = generate_random(2000, "acgt", seed=3, uncertain_fraction=0.4)
index = build_index(X, 8)

buf = io.BytesIO()
save(index, buf)
print("WIDX bytes:", buf.tell())

buf.seek(0)
again = load(buf)
for P in ["acg", "tt", "gattaca"]:
    assert again.report(P) == index.report(P)
    print(P, again.count_occurrences(P))

data = bytearray(dumps(index))
data[len(data) // 2] ^= 1
try:
    loads(bytes(data))
except IndexFormatError as exc:
    print("damaged file rejected:", type(exc).__name__)
