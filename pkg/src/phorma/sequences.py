"""Strictly increasing sequences and the moves between them.

Sequences are plain tuples of positive integers, ``()`` being the sink.
Every member ``alpha`` of a restricted index set splits into its order
pattern (see :mod:`phorma.patterns`) and the sorted tuple of its distinct
values, ``gamma_of(alpha)``; :func:`alpha_star` glues the two back.

Two moves generate the vertex sets of the counting digraph:

* :func:`step_west` -- the colexicographic predecessor-with-repair of a
  sequence of the same length (decrement the last entry, then clamp the
  earlier entries so the tuple stays strictly increasing);
* :func:`step_southwest` -- drop the last entry.

:func:`jump_west` applies ``j`` west steps in closed form and
:func:`falls_of` recovers, without walking, the vertices at which the path
of a sequence turns southwest.
"""

from __future__ import annotations

from typing import Optional, Sequence

__all__ = [
    "gamma_of",
    "alpha_star",
    "gamma_star",
    "step_west",
    "step_southwest",
    "jump_west",
    "falls_of",
    "is_increasing",
    "dominates",
    "format_seq",
    "parse_seq",
]

Seq = tuple


def is_increasing(seq: Sequence[int]) -> bool:
    return all(x >= 1 for x in seq) and all(x < y for x, y in zip(seq, seq[1:]))


def dominates(upper: Sequence[int], lower: Sequence[int]) -> bool:
    """True when ``lower[i] <= upper[i]`` for every ``i`` (equal lengths)."""
    return len(upper) == len(lower) and all(x <= y for x, y in zip(lower, upper))


def gamma_of(alpha: Sequence[int]) -> Seq:
    if len(alpha) == 0:
        raise ValueError("empty vector")
    return tuple(sorted(set(alpha)))


def alpha_star(beta: Sequence[int], gamma: Sequence[int]) -> Seq:
    """Rebuild the vector whose entry ``i`` is ``gamma[beta[i] - 1]``."""
    m = max(beta) if beta else 0
    if m != len(gamma):
        raise ValueError(f"pattern uses {m} symbols but sequence has length {len(gamma)}")
    return tuple(gamma[b - 1] for b in beta)


def gamma_star(a: Sequence[int], beta: Sequence[int]) -> Optional[Seq]:
    """Lexicographically largest ``gamma`` with ``alpha_star(beta, gamma) <= a``.

    Returns ``None`` when no such sequence has all entries positive, i.e.
    the pattern cannot be realised under the bound ``a``.
    """
    if len(a) != len(beta):
        raise ValueError(f"bound has length {len(a)}, pattern has length {len(beta)}")
    m = max(beta)
    caps = [None] * m
    for bound, symbol in zip(a, beta):
        k = symbol - 1
        if caps[k] is None or bound < caps[k]:
            caps[k] = bound
    out = [0] * m
    out[m - 1] = caps[m - 1]
    for k in range(m - 2, -1, -1):
        out[k] = min(caps[k], out[k + 1] - 1)
    if out[0] < 1:
        return None
    return tuple(out)


def step_west(gamma: Sequence[int]) -> Optional[Seq]:
    m = len(gamma)
    if m == 0 or gamma[-1] == m:
        return None
    out = [0] * m
    out[-1] = gamma[-1] - 1
    for k in range(m - 2, -1, -1):
        out[k] = min(out[k + 1] - 1, gamma[k])
    return tuple(out)


def step_southwest(gamma: Sequence[int]) -> Optional[Seq]:
    if len(gamma) == 0:
        return None
    return tuple(gamma[:-1])


def jump_west(gamma: Sequence[int], j: int) -> Optional[Seq]:
    """``j`` consecutive west steps; ``None`` if any of them does not exist."""
    m = len(gamma)
    if m == 0 or j < 0:
        return None
    top = gamma[-1]
    if top < m + j:
        return None
    # entry i (1-based) is min(top - j - m + i, gamma_i)
    return tuple(min(top - j - m + k + 1, g) for k, g in enumerate(gamma))


def falls_of(gamma_star: Sequence[int], gamma: Sequence[int]) -> list:
    """Falls ``[gamma^m, ..., gamma^1]`` of the path from ``gamma_star`` to ``gamma``.

    ``gamma^i`` has length ``i`` and last entry ``gamma[i-1]``; it is the
    last vertex of length ``i`` on the path.
    """
    m = len(gamma)
    if len(gamma_star) != m:
        raise ValueError("sequences differ in length")
    if m == 0:
        raise ValueError("empty sequence has no falls")
    if not dominates(gamma_star, gamma):
        raise ValueError(f"{gamma} is not dominated by {gamma_star}")
    falls = []
    fall = jump_west(gamma_star, gamma_star[-1] - gamma[-1])
    falls.append(fall)
    for i in range(m - 1, 0, -1):
        head = fall[:-1]
        fall = jump_west(head, head[-1] - gamma[i - 1])
        falls.append(fall)
    return falls


_BASE20 = "0123456789ABCDEFGHIJ"


def format_seq(seq: Sequence[int], base20: bool = False) -> str:
    """Compact display: digit string if every entry < 10 (or < 20 with
    ``base20``), else comma separated.  ``()`` renders as ``t``."""
    if len(seq) == 0:
        return "t"
    limit = 20 if base20 else 10
    if all(0 <= x < limit for x in seq):
        return "".join(_BASE20[x] for x in seq)
    return ",".join(str(x) for x in seq)


def parse_seq(text: str) -> Seq:
    """Inverse of :func:`format_seq`; comma-separated input always works."""
    text = text.strip()
    if text in ("", "t"):
        return ()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    try:
        return tuple(_BASE20.index(c) for c in text.upper())
    except ValueError:
        raise ValueError(f"cannot parse sequence {text!r}") from None
