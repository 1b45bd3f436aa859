"""Perfect hashing of order-restricted multidimensional index sets.

>>> from phorma import PhormaSpec, build, rank, unrank
>>> g = build(PhormaSpec.from_text((3, 3), "a1>=a2"))
>>> g.total
6
>>> [unrank(g, r) for r in range(g.total)]
[(1, 1), (2, 2), (3, 3), (2, 1), (3, 1), (3, 2)]
>>> rank(g, (3, 1))
4
"""

from .errors import (
    EnumerationLimitError,
    ExprSyntaxError,
    NotAMemberError,
    PhormaError,
    RankRangeError,
    TableLookupError,
)
from .expr import OrderOp, Restriction, evaluate, parse_expr
from .graph import PhormaGraph, PhormaSpec, SeqEntry, SeqTable, build, count_of, export_dot, lookup
from .hashing import (
    count,
    encode_path,
    encode_sequence,
    next_member,
    rank,
    rank_in_class,
    sample,
    sampler,
    unrank,
    unrank_in_class,
)
from .patterns import beta_of, enumerate_patterns, is_pattern
from .sequences import (
    alpha_star,
    falls_of,
    format_seq,
    gamma_of,
    gamma_star,
    jump_west,
    parse_seq,
    step_southwest,
    step_west,
)

__version__ = "0.1.0"

__all__ = [
    "EnumerationLimitError",
    "ExprSyntaxError",
    "NotAMemberError",
    "PhormaError",
    "RankRangeError",
    "TableLookupError",
    "OrderOp",
    "Restriction",
    "evaluate",
    "parse_expr",
    "PhormaGraph",
    "PhormaSpec",
    "SeqEntry",
    "SeqTable",
    "build",
    "count_of",
    "export_dot",
    "lookup",
    "count",
    "encode_path",
    "encode_sequence",
    "next_member",
    "rank",
    "rank_in_class",
    "sample",
    "sampler",
    "unrank",
    "unrank_in_class",
    "beta_of",
    "enumerate_patterns",
    "is_pattern",
    "alpha_star",
    "falls_of",
    "format_seq",
    "gamma_of",
    "gamma_star",
    "jump_west",
    "parse_seq",
    "step_southwest",
    "step_west",
]
