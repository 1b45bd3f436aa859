"""
Packing a symmetric matrix
==========================

A symmetric p x q matrix only needs the entries with i >= j.  The phorma
(a=(p, q), a1>=a2) hashes exactly those index pairs onto 0..N-1, so the
matrix can live in a flat numpy buffer.
"""

import numpy as np

from phorma import PhormaSpec, build, rank, unrank

p = q = 6
g = build(PhormaSpec.from_text((p, q), "a1>=a2"))
print("stored entries:", g.total, "instead of", p * q)

# fill a dense symmetric matrix and pack its lower triangle
rng = np.random.default_rng(0)
dense = rng.integers(0, 100, size=(p, q))
dense = np.tril(dense) + np.tril(dense, -1).T

packed = np.empty(g.total, dtype=dense.dtype)
for r in range(g.total):
    i, j = unrank(g, r)
    packed[r] = dense[i - 1, j - 1]


def get(i, j):
    # symmetric access: order the pair before hashing
    return packed[rank(g, (max(i, j), min(i, j)))]


assert all(get(i, j) == dense[i - 1, j - 1] for i in range(1, p + 1) for j in range(1, q + 1))
print("round trip through the packed buffer ok")

# the hash groups entries by order pattern: the diagonal (pattern 11)
# first, then the strict lower triangle (pattern 21)
print([unrank(g, r) for r in range(8)])
