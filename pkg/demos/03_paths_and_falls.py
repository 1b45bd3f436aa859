"""
Paths, codes and falls
======================

Inside one pattern class, members correspond to paths from the entry
sequence down to the empty sequence.  West moves (label 0) lower the last
entry; southwest moves (label 1 when a west move was possible) drop it.
"""

from phorma import PhormaSpec, build, encode_sequence, falls_of, format_seq, unrank_in_class
from phorma.oracle import iter_paths

# a one-class phorma whose entry point is (2, 3, 5)
g = build(PhormaSpec.from_text((2, 3, 5), "a1<a2 & a2<a3"))
for r in range(g.total):
    gamma = unrank_in_class(g, (2, 3, 5), r)
    code = "".join(map(str, encode_sequence(g, (2, 3, 5), gamma)))
    print(r, format_seq(gamma), code)

# the same paths, vertex by vertex
for _, path in iter_paths(g):
    print(" -> ".join(format_seq(v) for v in path))

# falls are computed in closed form, without walking the graph
top, gamma = (8, 12, 15, 19), (3, 4, 7, 14)
print([format_seq(f, base20=True) for f in falls_of(top, gamma)])
