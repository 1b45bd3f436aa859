"""Brute-force reference implementations for cross-checking the hash.

Nothing here consults the vertex table or the closed-form moves:

* :func:`enumerate_members` scans the whole box ``1..a_1 x ... x 1..a_n``
  and never touches the digraph;
* :func:`enumerate_paths` and :func:`walk_rank` traverse the digraph one
  edge at a time, with path counts computed by their own memoised
  recursion.

:func:`run_checks` bundles the cross-checks used by ``phorma check``.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

from .errors import EnumerationLimitError, NotAMemberError
from .graph import PhormaGraph, PhormaSpec
from .patterns import beta_of
from .sequences import alpha_star, gamma_of, step_southwest, step_west

__all__ = [
    "DEFAULT_ORACLE_LIMIT",
    "enumerate_members",
    "path_count",
    "iter_paths",
    "decode_path",
    "path_of",
    "path_labels",
    "enumerate_paths",
    "walk_rank",
    "run_checks",
]

DEFAULT_ORACLE_LIMIT = 10**7


def enumerate_members(spec: PhormaSpec, limit: int = DEFAULT_ORACLE_LIMIT) -> List[tuple]:
    """All members of ``A(a, B)`` in lexicographic order, by exhaustive scan."""
    size = math.prod(spec.a)
    if size > limit:
        raise EnumerationLimitError(f"box of {size} vectors exceeds the oracle limit {limit}")
    boxes = [range(1, b + 1) for b in spec.a]
    return [v for v in itertools.product(*boxes) if spec.restriction(v)]


@lru_cache(maxsize=None)
def path_count(gamma: tuple) -> int:
    """Number of west/southwest paths from ``gamma`` to the empty sequence."""
    if not gamma:
        return 1
    w = step_west(gamma)
    return (path_count(w) if w is not None else 0) + path_count(gamma[:-1])


def _out_edges(v):
    """Heads of the out-edges of a sequence vertex in local-rank order."""
    w = step_west(v)
    sw = step_southwest(v)
    return [w, sw] if w is not None else [sw]


def _paths_from(v):
    if not v:
        yield [()]
        return
    for head in _out_edges(v):
        for rest in _paths_from(head):
            yield [v] + rest


def iter_paths(graph: PhormaGraph):
    """Depth-first over all ``s``-``t`` paths, smallest local rank first.

    Yields ``(j, vertices)``: the pattern index and the sequence-layer
    vertices from the class entry point down to ``()``.
    """
    for j, top in enumerate(graph.gammas):
        for path in _paths_from(top):
            yield j, path


def decode_path(graph: PhormaGraph, j: int, path: Sequence[tuple]) -> tuple:
    """Member encoded by a path: the falls' last entries, read bottom-up."""
    gamma = {}
    for v, head in zip(path, path[1:]):
        if len(head) < len(v):
            gamma[len(v)] = v[-1]
    seq = tuple(gamma[i] for i in range(1, len(path[0]) + 1))
    return alpha_star(graph.patterns[j], seq)


def path_of(graph: PhormaGraph, alpha: Sequence[int]) -> Tuple[int, list]:
    """Walk the path of ``alpha`` edge by edge; return ``(j, vertices)``."""
    alpha = tuple(alpha)
    if not graph.spec.contains(alpha):
        raise NotAMemberError(f"{alpha} is not a member")
    beta = beta_of(alpha)
    j = graph.patterns.index(beta)
    gamma = gamma_of(alpha)
    v = graph.gammas[j]
    path = [v]
    while v:
        i = len(v)
        if v[-1] == gamma[i - 1]:
            v = step_southwest(v)
        elif v[-1] > gamma[i - 1]:
            v = step_west(v)
        else:
            raise AssertionError(f"walk overshot {gamma} at {v}")
        path.append(v)
    return j, path


def path_labels(path: Sequence[tuple]) -> List[int]:
    """Local rank label of each edge along a sequence-layer path."""
    return [_out_edges(v).index(head) for v, head in zip(path, path[1:])]


def enumerate_paths(graph: PhormaGraph) -> List[tuple]:
    """Members in the order their paths are visited depth-first."""
    return [decode_path(graph, j, path) for j, path in iter_paths(graph)]


def walk_rank(graph: PhormaGraph, alpha: Sequence[int]) -> int:
    """Rank of ``alpha`` as the sum, over the edges of its path, of the
    counts below lower-labelled sibling edges."""
    j, path = path_of(graph, alpha)
    offset = sum(path_count(g) for g in graph.gammas[:j])
    total = offset
    for v, head in zip(path, path[1:]):
        for sib in _out_edges(v):
            if sib == head:
                break
            total += path_count(sib)
    return total


def run_checks(graph: PhormaGraph, limit: int = DEFAULT_ORACLE_LIMIT) -> List[Tuple[str, bool]]:
    """Exhaustive cross-checks of ``graph`` against the brute-force routines.

    Returns ``(description, passed)`` pairs.
    """
    from . import hashing

    members = enumerate_members(graph.spec, limit)
    paths = list(iter_paths(graph))
    walked = [decode_path(graph, j, p) for j, p in paths]
    ranks = []
    bad_rank = False
    for alpha in members:
        try:
            ranks.append(hashing.rank(graph, alpha))
        except Exception:
            bad_rank = True

    def guard(fn: Callable[[], bool]) -> bool:
        try:
            return bool(fn())
        except Exception:
            return False

    checks = [
        ("count equals box enumeration", lambda: graph.total == len(members)),
        ("path decoding hits every member once", lambda: sorted(walked) == members),
        ("rank is a bijection onto [0, total)",
         lambda: not bad_rank and sorted(ranks) == list(range(graph.total))),
        ("unrank inverts rank",
         lambda: all(hashing.unrank(graph, r) == a for a, r in zip(members, ranks))),
        ("rank inverts unrank",
         lambda: all(hashing.rank(graph, hashing.unrank(graph, r)) == r
                     for r in range(graph.total))),
        ("rank order equals depth-first path order",
         lambda: all(hashing.rank(graph, a) == k for k, a in enumerate(walked))),
        ("fast rank equals edge-walk rank",
         lambda: all(walk_rank(graph, a) == r for a, r in zip(members, ranks))),
        ("path encode/decode round trip",
         lambda: all(path_of(graph, decode_path(graph, j, p)) == (j, p) for j, p in paths)),
        ("table counts satisfy the path recursion",
         lambda: all(path_count(g) == c for g, c in graph.table)),
        ("class counts sum to total", lambda: sum(graph.class_counts) == graph.total),
    ]
    return [(name, guard(fn)) for name, fn in checks]
