"""Construction of the counting digraph of a phorma.

The digraph has a root ``s`` with one child per pattern ``beta`` in the
sorted pattern list; each pattern points to its maximal value sequence
``gamma_star(a, beta)``, and from there west/southwest moves lead down to
the empty sequence ``t``.  Every ``s``-to-``t`` path corresponds to exactly
one member of ``A(a, B)``.

Sequence vertices are kept in a :class:`SeqTable`, bucketed by (length,
last entry) with each bucket sorted by prefix, so that the number of paths
below any vertex is one binary search away.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import TableLookupError
from .expr import Restriction, parse_expr
from .patterns import DEFAULT_PATTERN_LIMIT, enumerate_patterns
from .sequences import format_seq, gamma_star, step_southwest, step_west

__all__ = [
    "PhormaSpec",
    "SeqEntry",
    "SeqTable",
    "PhormaGraph",
    "build",
    "count_of",
    "lookup",
    "export_dot",
]


@dataclass(frozen=True)
class PhormaSpec:
    """A bound vector ``a`` together with a restriction over ``len(a)`` coordinates."""

    a: tuple
    restriction: Restriction

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not self.a:
            raise ValueError("bound vector is empty")
        if any(x < 1 for x in self.a):
            raise ValueError(f"bounds must be positive, got {self.a}")
        if self.restriction.n != len(self.a):
            raise ValueError(
                f"restriction parsed for dimension {self.restriction.n}, bound has {len(self.a)}"
            )

    @classmethod
    def from_text(cls, a: Sequence[int], where: str = "") -> "PhormaSpec":
        return cls(tuple(a), parse_expr(where, len(a)))

    @property
    def n(self) -> int:
        return len(self.a)

    def contains(self, alpha: Sequence[int]) -> bool:
        return (
            len(alpha) == self.n
            and all(1 <= x <= b for x, b in zip(alpha, self.a))
            and self.restriction(alpha)
        )


class SeqEntry(NamedTuple):
    prefix: tuple
    count: int


class SeqTable:
    """Vertex store keyed by ``(m, p)``: sequences of length ``m`` ending in ``p``.

    Each cell holds :class:`SeqEntry` records sorted by prefix (the sequence
    minus its last entry).  Row ``m = 0`` is implicit: the sink has count 1.
    """

    def __init__(self, counts: dict):
        cells = {}
        for gamma, c in counts.items():
            cells.setdefault((len(gamma), gamma[-1]), []).append(SeqEntry(gamma[:-1], c))
        self._cells = {}
        for key, entries in cells.items():
            entries.sort()
            self._cells[key] = (tuple(e.prefix for e in entries), tuple(entries))

    def cell(self, m: int, p: int) -> tuple:
        """Entries of cell ``(m, p)``; empty tuple for an unused cell."""
        found = self._cells.get((m, p))
        return found[1] if found else ()

    def cell_keys(self):
        return sorted(self._cells)

    def __len__(self):
        return sum(len(v[1]) for v in self._cells.values())

    def __iter__(self):
        """Yield ``(gamma, count)`` for every stored vertex."""
        for (m, p) in self.cell_keys():
            for e in self._cells[(m, p)][1]:
                yield e.prefix + (p,), e.count

    def lookup(self, m: int, p: int, prefix: tuple) -> SeqEntry:
        found = self._cells.get((m, p))
        if found is None:
            raise TableLookupError(f"no vertices of length {m} ending in {p}")
        prefixes, entries = found
        k = bisect.bisect_left(prefixes, prefix)
        if k == len(prefixes) or prefixes[k] != prefix:
            raise TableLookupError(f"{prefix + (p,)} is not a stored vertex")
        return entries[k]


def lookup(table: SeqTable, m: int, p: int, prefix: Sequence[int]) -> SeqEntry:
    return table.lookup(m, p, tuple(prefix))


@dataclass(frozen=True)
class PhormaGraph:
    spec: PhormaSpec
    patterns: tuple
    gammas: tuple
    class_counts: tuple
    prefix_counts: tuple
    total: int
    table: SeqTable = field(repr=False)

    @property
    def a_max(self) -> int:
        return max(self.spec.a)

    def count_of(self, gamma: Sequence[int]) -> int:
        return count_of(self, gamma)


def count_of(graph: PhormaGraph, gamma: Sequence[int]) -> int:
    """Number of paths from ``gamma`` to the sink (1 for the sink itself)."""
    gamma = tuple(gamma)
    if not gamma:
        return 1
    return graph.table.lookup(len(gamma), gamma[-1], gamma[:-1]).count


def _close(roots):
    seen = set()
    stack = [g for g in roots]
    while stack:
        g = stack.pop()
        if not g or g in seen:
            continue
        seen.add(g)
        w = step_west(g)
        if w is not None:
            stack.append(w)
        stack.append(g[:-1])
    return seen


def build(spec: PhormaSpec, pattern_limit: int = DEFAULT_PATTERN_LIMIT) -> PhormaGraph:
    """Enumerate patterns, close their maximal sequences under both moves,
    and count paths bottom-up."""
    patterns = enumerate_patterns(spec.a, spec.restriction, limit=pattern_limit)
    gammas = [gamma_star(spec.a, beta) for beta in patterns]

    vertices = _close(gammas)
    counts = {(): 1}
    # west lowers the last entry and southwest shortens, so (length, last)
    # order puts both successors first
    for g in sorted(vertices, key=lambda g: (len(g), g[-1], g)):
        w = step_west(g)
        counts[g] = (counts[w] if w is not None else 0) + counts[step_southwest(g)]
    del counts[()]

    class_counts = [counts[g] for g in gammas]
    prefix_counts = []
    running = 0
    for c in class_counts:
        prefix_counts.append(running)
        running += c

    return PhormaGraph(
        spec=spec,
        patterns=tuple(patterns),
        gammas=tuple(gammas),
        class_counts=tuple(class_counts),
        prefix_counts=tuple(prefix_counts),
        total=running,
        table=SeqTable(counts),
    )


def _fmt(seq):
    return ",".join(str(x) for x in seq) if seq else "t"


def export_dot(graph: PhormaGraph) -> str:
    """Graphviz DOT rendering of the digraph.

    Vertices carry a ``count`` attribute (paths to the sink); pattern
    vertices also carry ``prefix_count`` (rank of the first member of their
    class).  Edges from ``s`` and from pattern vertices are dashed; every
    edge is labelled with its local rank (0 = west, 1 = southwest when a
    west edge exists).
    """
    lines = [
        "digraph phorma {",
        "  rankdir=TB;",
        f'  s [label="s\\n{graph.total}", count={graph.total}];',
        '  t [label="t\\n1", count=1];',
    ]
    for beta, c, pc in zip(graph.patterns, graph.class_counts, graph.prefix_counts):
        lines.append(
            f'  "b:{_fmt(beta)}" [label="{format_seq(beta)}\\n{c} / {pc}", '
            f"shape=box, count={c}, prefix_count={pc}];"
        )
    for gamma, c in graph.table:
        lines.append(f'  "g:{_fmt(gamma)}" [label="{format_seq(gamma)}\\n{c}", count={c}];')

    for j, (beta, gamma) in enumerate(zip(graph.patterns, graph.gammas)):
        lines.append(f'  s -> "b:{_fmt(beta)}" [label={j}, style=dashed];')
        lines.append(f'  "b:{_fmt(beta)}" -> "g:{_fmt(gamma)}" [label=0, style=dashed];')
    for gamma, _ in graph.table:
        w = step_west(gamma)
        sw = gamma[:-1]
        sw_name = f'"g:{_fmt(sw)}"' if sw else "t"
        if w is not None:
            lines.append(f'  "g:{_fmt(gamma)}" -> "g:{_fmt(w)}" [label=0];')
            lines.append(f'  "g:{_fmt(gamma)}" -> {sw_name} [label=1];')
        else:
            lines.append(f'  "g:{_fmt(gamma)}" -> {sw_name} [label=0];')
    lines.append("}")
    return "\n".join(lines) + "\n"
