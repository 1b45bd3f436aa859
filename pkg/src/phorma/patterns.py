"""Order patterns of integer vectors.

An ``(n, m)``-pattern is a length-``n`` tuple in which each of the symbols
``1..m`` occurs at least once.  ``beta_of(alpha)`` replaces each entry of
``alpha`` by its rank among the distinct entries, so ``beta_of((7, 4, 1, 2))
== (4, 3, 1, 2)``.  Vectors with the same pattern compare coordinate-wise in
the same way, which is why a restriction can be tested on the pattern alone.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .errors import EnumerationLimitError
from .sequences import gamma_star

__all__ = ["beta_of", "is_pattern", "enumerate_patterns", "DEFAULT_PATTERN_LIMIT"]

DEFAULT_PATTERN_LIMIT = 8


def beta_of(alpha: Sequence[int]) -> tuple:
    if len(alpha) == 0:
        raise ValueError("empty vector")
    rank = {v: k for k, v in enumerate(sorted(set(alpha)), start=1)}
    return tuple(rank[v] for v in alpha)


def is_pattern(seq: Sequence[int]) -> Optional[int]:
    """Return ``m`` if the distinct values of ``seq`` are exactly ``1..m``."""
    values = set(seq)
    m = len(values)
    if m and values == set(range(1, m + 1)):
        return m
    return None


def enumerate_patterns(a: Sequence[int], restriction, limit: int = DEFAULT_PATTERN_LIMIT) -> list:
    """Sorted list of the patterns induced by members of ``A(a, restriction)``.

    Brute force over all ``n**n`` tuples with symbols ``1..n``.  A pattern is
    kept when it satisfies the restriction and is realisable under ``a``
    (its maximal value sequence has positive entries).
    """
    n = len(a)
    if n > limit:
        raise EnumerationLimitError(
            f"dimension {n} exceeds the pattern enumeration limit {limit}; "
            f"pass a larger limit to enumerate {n}**{n} candidates"
        )
    out = []
    # product() yields in lexicographic order, so the result is already sorted
    for cand in itertools.product(range(1, n + 1), repeat=n):
        if is_pattern(cand) is None:
            continue
        if not restriction(cand):
            continue
        if gamma_star(a, cand) is None:
            continue
        out.append(cand)
    return out
