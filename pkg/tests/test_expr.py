import itertools

import pytest
from hypothesis import given, strategies as st

from phorma import ExprSyntaxError, OrderOp, beta_of, evaluate, parse_expr
from phorma.expr import And, Literal, Not, Or, Restriction, TRUE

from conftest import B_L

N = 4


def test_single_literal():
    assert parse_expr("a1>=a2", 2).root == Literal(1, OrderOp.GE, 2)


def test_b_l_structure():
    r = parse_expr(B_L, 4)
    assert isinstance(r.root, And)
    assert len(r.root.children) == 6
    assert r.root.children[0] == Literal(1, OrderOp.GE, 3)
    assert r.root.children[3] == Or((Literal(1, OrderOp.NE, 2), Literal(3, OrderOp.GE, 4)))


def test_b_l_matches_hand_written_predicate():
    r = parse_expr(B_L, 4)

    def ref(x1, x2, x3, x4):
        return (x1 >= x3 and x2 >= x4 and x1 >= x2 and (x1 != x2 or x3 >= x4)
                and (x1 != x3 or x2 == x4) and (x2 != x4 or x1 == x3))

    for v in itertools.product(range(1, 6), repeat=4):
        assert evaluate(r, v) == ref(*v)


def test_index_out_of_range():
    with pytest.raises(ExprSyntaxError, match="out of range"):
        parse_expr("a1>=a5", 4)
    with pytest.raises(ExprSyntaxError):
        parse_expr("a0<a1", 4)


@pytest.mark.parametrize("text", ["a1>=", "a1 >= a2 &", "(a1<a2", "a1<a2)", "a1 ~ a2", "!", "a1<a2 & !"])
def test_syntax_errors(text):
    with pytest.raises(ExprSyntaxError):
        parse_expr(text, 2)


def test_error_position():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("a1<a2 & a1 ? a2", 2)
    assert info.value.position == 11


def test_precedence():
    # ! binds tighter than &, & tighter than |
    r = parse_expr("a1<a2 | a2<a3 & !a1=a3", 3)
    assert r.root == Or((
        Literal(1, OrderOp.LT, 2),
        And((Literal(2, OrderOp.LT, 3), Not(Literal(1, OrderOp.EQ, 3)))),
    ))
    assert parse_expr("a1<a2|a2<a3&!a1=a3", 3) == r


def test_evaluate_examples():
    r = parse_expr(B_L, 4)
    assert evaluate(r, (7, 4, 1, 2))
    assert not evaluate(r, (1, 2, 3, 4))
    t = parse_expr("", 3)
    assert t.root is TRUE
    assert evaluate(t, (9, 1, 5))


def test_length_mismatch():
    with pytest.raises(ValueError):
        evaluate(parse_expr("a1<a2", 2), (1, 2, 3))


def test_str_round_trip():
    r = parse_expr(B_L, 4)
    assert parse_expr(str(r), 4) == r
    r = parse_expr("!(a1<a2 | a2<a3) & a1!=a3", 3)
    assert parse_expr(str(r), 3) == r


# -- properties ---------------------------------------------------------------

ops = st.sampled_from(list(OrderOp))
idx = st.integers(1, N)
literals = st.builds(Literal, idx, ops, idx)
trees = st.recursive(
    literals,
    lambda kids: st.one_of(
        st.builds(lambda c: And(tuple(c)), st.lists(kids, min_size=1, max_size=3)),
        st.builds(lambda c: Or(tuple(c)), st.lists(kids, min_size=1, max_size=3)),
        st.builds(Not, kids),
    ),
    max_leaves=8,
)
vectors = st.lists(st.integers(1, 9), min_size=N, max_size=N)


@given(trees, vectors)
def test_order_isomorphism(tree, v):
    r = Restriction(tree, N)
    assert evaluate(r, v) == evaluate(r, beta_of(v))


@given(trees, trees, vectors)
def test_de_morgan(x, y, v):
    lhs = Restriction(Not(And((x, y))), N)
    rhs = Restriction(Or((Not(x), Not(y))), N)
    assert evaluate(lhs, v) == evaluate(rhs, v)


@given(literals, vectors)
def test_negation_table(lit, v):
    neg = Literal(lit.i, lit.op.negation, lit.j)
    assert lit.evaluate(v) != neg.evaluate(v)


@given(trees)
def test_printed_tree_reparses_equivalently(tree):
    r = Restriction(tree, N)
    again = parse_expr(str(r), N)
    for v in itertools.product(range(1, 4), repeat=N):
        assert evaluate(again, v) == evaluate(r, v)
