import re

import pytest

from phorma import PhormaSpec, TableLookupError, build, count_of, export_dot, lookup, step_west
from phorma.oracle import enumerate_members, path_count

from conftest import B_L, TEST_PHORMAS


def test_spec_validation():
    with pytest.raises(ValueError):
        PhormaSpec.from_text((), "")
    with pytest.raises(ValueError):
        PhormaSpec.from_text((3, 0), "")
    s = PhormaSpec.from_text((3, 3), "a1>=a2")
    assert s.n == 2
    assert s.contains((2, 1)) and not s.contains((1, 2)) and not s.contains((4, 1))


def test_7575_totals(graph_7575):
    assert graph_7575.total == 190
    assert graph_7575.gammas == (
        (5,), (5, 7), (4, 5), (4, 5, 7), (4, 5, 7), (3, 4, 5), (4, 5, 6, 7), (3, 4, 5, 7), (3, 4, 5, 7),
    )
    assert sum(graph_7575.class_counts) == 190


def test_small_symmetric():
    g = build(PhormaSpec.from_text((2, 2), "a1>=a2"))
    assert g.patterns == ((1, 1), (2, 1))
    assert g.class_counts == (2, 1)
    assert g.prefix_counts == (0, 2)
    assert g.total == 3


def test_count_of(graph_235):
    assert count_of(graph_235, (2, 3, 5)) == 7
    assert count_of(graph_235, ()) == 1
    assert count_of(graph_235, (1, 2, 3)) == 1
    assert path_count((1, 2, 3)) == 1
    with pytest.raises(TableLookupError):
        count_of(graph_235, (1, 2, 9))


def test_lookup(graph_7575):
    e = lookup(graph_7575.table, 1, 3, ())
    assert e.count == path_count((3,)) == 3
    assert len(graph_7575.table.cell(4, 7)) == 2
    assert [x.prefix for x in graph_7575.table.cell(4, 7)] == [(3, 4, 5), (4, 5, 6)]
    with pytest.raises(TableLookupError):
        lookup(graph_7575.table, 4, 7, (1, 2, 3))
    with pytest.raises(TableLookupError):
        lookup(graph_7575.table, 2, 1, (0,))


def test_cells_sorted_and_distinct(any_graph):
    for key in any_graph.table.cell_keys():
        prefixes = [e.prefix for e in any_graph.table.cell(*key)]
        assert prefixes == sorted(set(prefixes))


def test_count_recursion(any_graph):
    counts = dict(any_graph.table)
    counts[()] = 1
    for g, c in any_graph.table:
        w = step_west(g)
        assert c == (counts[w] if w is not None else 0) + counts[g[:-1]]
        assert c >= 1


def test_vertices_reachable(any_graph):
    # every stored vertex is reachable from some entry point
    reached = set()
    stack = list(any_graph.gammas)
    while stack:
        v = stack.pop()
        if not v or v in reached:
            continue
        reached.add(v)
        w = step_west(v)
        stack += [v[:-1]] + ([w] if w else [])
    assert reached == {g for g, _ in any_graph.table}


@pytest.mark.parametrize("label, a, where", TEST_PHORMAS)
def test_total_matches_box(label, a, where):
    spec = PhormaSpec.from_text(a, where)
    assert build(spec).total == len(enumerate_members(spec))


@pytest.mark.parametrize("a", [(4, 4), (5, 5, 5), (3, 3, 3, 3)])
def test_equal_bounds_single_entry_cells(a):
    g = build(PhormaSpec.from_text(a, ""))
    assert all(len(g.table.cell(*k)) == 1 for k in g.table.cell_keys())


def test_empty_family():
    g = build(PhormaSpec.from_text((2, 2), "a1>a2 & a2>a1"))
    assert g.total == 0 and g.patterns == () and len(g.table) == 0
    dot = export_dot(g)
    assert "s [" in dot and "t [" in dot
    assert "count=0" in dot
    assert "->" not in dot


def test_export_dot_7575(graph_7575):
    dot = export_dot(graph_7575)
    assert re.search(r"\bs \[label=\"s\\n190\", count=190\]", dot)
    assert dot.count("style=dashed") == 2 * 9
    assert 'prefix_count=0' in dot
    # last pattern 4321 starts at 190 - |3457|
    assert f"prefix_count={190 - count_of(graph_7575, (3, 4, 5, 7))}" in dot
    nodes = re.findall(r'^\s+"g:([\d,]+)" \[', dot, re.M)
    assert len(nodes) == len(graph_7575.table)


def test_export_dot_2d():
    g = build(PhormaSpec.from_text((5, 5), "a1>=a2"))
    assert g.gammas == ((5,), (4, 5))
    # closure of (4,5) and (5,) under both moves, brute force
    expected = set()
    stack = [(5,), (4, 5)]
    while stack:
        v = stack.pop()
        if v and v not in expected:
            expected.add(v)
            w = step_west(v)
            stack += [v[:-1]] + ([w] if w else [])
    dot = export_dot(g)
    names = set(re.findall(r'^\s+"g:([\d,]+)" \[', dot, re.M))
    assert names == {",".join(map(str, v)) for v in expected}
    assert {(1,), (2,), (3,), (4,), (5,)} <= expected
