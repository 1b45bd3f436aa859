"""Counting, ranking, unranking, sequencing and sampling over a built graph.

Ranks order members first by the lexicographic order of their patterns,
then, within a pattern class, by the colexicographic order of their value
sequences.  Ranking uses the arithmetic fall decomposition and touches the
vertex table once per distinct value of the member.
"""

from __future__ import annotations

import bisect
from typing import Iterator, List, Optional, Sequence

import numpy as np

from .errors import NotAMemberError, RankRangeError
from .graph import PhormaGraph
from .patterns import beta_of
from .sequences import alpha_star, falls_of, gamma_of, gamma_star, step_west

__all__ = [
    "count",
    "rank",
    "rank_in_class",
    "unrank",
    "unrank_in_class",
    "next_member",
    "sample",
    "sampler",
    "encode_path",
    "encode_sequence",
]


def count(graph: PhormaGraph) -> int:
    return graph.total


def _check_member(graph, alpha):
    alpha = tuple(int(x) for x in alpha)
    spec = graph.spec
    if len(alpha) != spec.n:
        raise NotAMemberError(f"{alpha} is not a member: dimension {len(alpha)}, expected {spec.n}")
    for x, b in zip(alpha, spec.a):
        if not 1 <= x <= b:
            raise NotAMemberError(f"{alpha} is not a member: not dominated by {spec.a}")
    if not spec.restriction(alpha):
        raise NotAMemberError(f"{alpha} is not a member: restriction is false")
    return alpha


def _west_count(graph, fall, trace):
    """Paths below the west neighbour of ``fall``, 0 if it has none.

    One table probe: the west neighbour of a length-``i`` vertex is keyed by
    ``(i, last - 1)``.  When ``last == i`` that cell cannot hold a strictly
    increasing sequence, so the probe answers 0 without a search.
    """
    if trace is not None:
        trace.append(fall)
    w = step_west(fall)
    if w is None:
        return 0
    return graph.table.lookup(len(w), w[-1], w[:-1]).count


def rank_in_class(graph: PhormaGraph, top: Sequence[int], gamma: Sequence[int],
                  trace: Optional[list] = None) -> int:
    """Rank of ``gamma`` among the sequences dominated by ``top``.

    ``top`` must be a stored vertex.  If ``trace`` is a list, each fall
    whose west neighbour is probed is appended to it.
    """
    return sum(_west_count(graph, f, trace) for f in falls_of(tuple(top), tuple(gamma)))


def rank(graph: PhormaGraph, alpha: Sequence[int], trace: Optional[list] = None) -> int:
    """Perfect hash of ``alpha`` into ``range(graph.total)``.

    Raises :class:`NotAMemberError` unless ``alpha`` is dominated by the
    bound and satisfies the restriction.
    """
    alpha = _check_member(graph, alpha)
    beta = beta_of(alpha)
    j = bisect.bisect_left(graph.patterns, beta)
    if j == len(graph.patterns) or graph.patterns[j] != beta:
        # members always induce a listed pattern
        raise RuntimeError(f"pattern {beta} of member {alpha} missing from pattern list")
    top = gamma_star(graph.spec.a, beta)
    return graph.prefix_counts[j] + rank_in_class(graph, top, gamma_of(alpha), trace)


def _walk(graph, top, r):
    """Follow the ``r``-th path down from ``top``, reading off its falls."""
    v = tuple(top)
    gamma = [0] * len(v)
    while v:
        w = step_west(v)
        west = graph.count_of(w) if w is not None else 0
        if r >= west:
            r -= west
            gamma[len(v) - 1] = v[-1]
            v = v[:-1]
        else:
            v = w
    return tuple(gamma)


def unrank_in_class(graph: PhormaGraph, top: Sequence[int], r: int) -> tuple:
    """The ``r``-th sequence (colexicographic order) dominated by ``top``."""
    n_paths = graph.count_of(top)
    if not 0 <= r < n_paths:
        raise RankRangeError(f"rank {r} outside [0, {n_paths})")
    return _walk(graph, top, r)


def unrank(graph: PhormaGraph, r: int) -> tuple:
    """Inverse of :func:`rank`."""
    r = int(r)
    if not 0 <= r < graph.total:
        raise RankRangeError(f"rank {r} outside [0, {graph.total})")
    j = bisect.bisect_right(graph.prefix_counts, r) - 1
    gamma = _walk(graph, graph.gammas[j], r - graph.prefix_counts[j])
    return alpha_star(graph.patterns[j], gamma)


def next_member(graph: PhormaGraph, alpha: Sequence[int]) -> Optional[tuple]:
    """Member following ``alpha`` in rank order, or ``None`` after the last."""
    r = rank(graph, alpha) + 1
    if r == graph.total:
        return None
    return unrank(graph, r)


def sample(graph: PhormaGraph, xi: float) -> tuple:
    """Map ``xi`` in ``[0, 1)`` to the member of rank ``floor(total * xi)``."""
    if graph.total == 0:
        raise RankRangeError("cannot sample from an empty family")
    if not 0.0 <= xi < 1.0:
        raise ValueError(f"xi must lie in [0, 1), got {xi}")
    # guard against total * xi rounding up to total
    return unrank(graph, min(int(graph.total * xi), graph.total - 1))


def sampler(graph: PhormaGraph, seed: Optional[int] = None) -> Iterator[tuple]:
    """Endless stream of uniform members driven by numpy's PCG64 generator."""
    rng = np.random.Generator(np.random.PCG64(seed))
    while True:
        yield sample(graph, float(rng.random()))


def encode_sequence(graph: PhormaGraph, top: Sequence[int], gamma: Sequence[int]) -> List[int]:
    """Local rank labels of the path from ``top`` that encodes ``gamma``."""
    v, gamma = tuple(top), tuple(gamma)
    if len(v) != len(gamma):
        raise ValueError("sequences differ in length")
    codes = []
    while v:
        w = step_west(v)
        # the first vertex of each length whose last entry matches is a fall
        if v[-1] == gamma[len(v) - 1]:
            codes.append(0 if w is None else 1)
            v = v[:-1]
        elif w is None or v[-1] < gamma[len(v) - 1]:
            raise ValueError(f"{gamma} is not dominated by {top}")
        else:
            codes.append(0)
            v = w
    return codes


def encode_path(graph: PhormaGraph, alpha: Sequence[int]) -> List[int]:
    """Edge labels (0 = west, 1 = southwest beside a west edge) of the
    sequence-layer path of ``alpha``, from its class entry point to the sink."""
    alpha = _check_member(graph, alpha)
    top = gamma_star(graph.spec.a, beta_of(alpha))
    return encode_sequence(graph, top, gamma_of(alpha))
