from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from tristrip import (
    ComplexParseError, DomainError, FamilyId, LargePlacement, StripComplex, TriCell, build_family,
    conflict_graph, count_dfs, large_placements, parse_complex, serialize_complex,
)
from tristrip.lattice import expected_cell_count

FAMILIES = [f.value for f in FamilyId]


def up(i):
    return LargePlacement(i, 0)


def down(j):
    return LargePlacement(j, 1)


def test_cell_validation():
    with pytest.raises(ValueError):
        TriCell(2, 0)
    with pytest.raises(ValueError):
        TriCell(0, -1)
    with pytest.raises(ValueError):
        LargePlacement(1, 0)


def test_orientation_rule():
    assert TriCell(0, 0).is_up and not TriCell(0, 1).is_up
    assert TriCell(1, 1).is_up and not TriCell(1, 0).is_up


@pytest.mark.parametrize("family", FAMILIES)
def test_embedding_matches_parity(family):
    for n in range(1, 21):
        for c in build_family(family, n).cells:
            (x0, y0), (x1, y1), (xa, ya) = c.vertices()
            assert y0 == y1 and x1 - x0 == 2 and xa == x0 + 1
            # apex above the base for up cells
            assert (ya > y0) == c.is_up


@pytest.mark.parametrize("family", FAMILIES)
def test_adjacency_iff_shared_edge(family):
    for n in (1, 2, 3, 6):
        cells = sorted(build_family(family, n).cells)
        for a, b in combinations(cells, 2):
            shared = len(set(a.vertices()) & set(b.vertices()))
            assert a.adjacent(b) == (shared == 2), (a, b)


@pytest.mark.parametrize("family", FAMILIES)
def test_cell_count_contract(family):
    for n in range(1, 101):
        assert len(build_family(family, n)) == expected_cell_count(family, n)


def test_build_examples():
    h1 = build_family("H", 1)
    assert h1.cells == {TriCell(0, 0), TriCell(1, 0)}
    assert h1.placements == ()
    assert len(build_family("X", 1)) == 0
    b1 = build_family("B", 1)
    assert b1.cells == {TriCell(0, 0), TriCell(0, 1), TriCell(0, 2), TriCell(1, 1)}
    assert b1.placements == (up(0),)
    a3 = build_family("A", 3)
    assert len(a3) == 12
    assert set(a3.placements) == {up(0), up(2), down(2), down(4)}
    assert count_dfs(a3) == 8


def test_build_rejects_small_n():
    with pytest.raises(DomainError):
        build_family("H", 0)
    with pytest.raises(ValueError):
        build_family("Q", 3)


def test_z_is_alias_of_h():
    for n in range(1, 8):
        assert build_family("Z", n).cells == build_family("H", n).cells


def test_placement_examples():
    h2 = build_family("H", 2)
    assert list(large_placements(h2.cells)) == [up(0), down(0)]
    assert up(0).cells & down(0).cells == {TriCell(0, 1), TriCell(1, 1)}
    assert large_placements(build_family("H", 1).cells) == []
    b3 = build_family("B", 3)
    assert set(b3.placements) == {up(0), up(2), up(4), down(2)}
    for a, b in combinations([up(0), up(4), down(2)], 2):
        assert not a.cells & b.cells
    assert count_dfs(b3) == 9


def test_placements_sorted_and_cached():
    cx = build_family("A", 5)
    assert list(cx.placements) == sorted(cx.placements, key=lambda p: (p.anchor_index, p.anchor_row))
    assert list(cx.placements) == large_placements(cx.cells)


@pytest.mark.parametrize("family", FAMILIES)
def test_placement_hull_is_side_two_triangle(family):
    for n in range(1, 8):
        for p in build_family(family, n).placements:
            i = p.anchor_index
            assert len(p.cells) == 4
            hull = set().union(*(set(c.vertices()) for c in p.cells))
            corners = set(p.vertices())
            if p.is_up:
                assert corners == {(i, 0), (i + 4, 0), (i + 2, 2)}
            else:
                assert corners == {(i, 2), (i + 4, 2), (i + 2, 0)}
            # the six lattice points of a side-2 triangle: corners plus edge midpoints
            (a, b, c) = p.vertices()
            mids = {((a[0] + b[0]) // 2, (a[1] + b[1]) // 2), ((b[0] + c[0]) // 2, (b[1] + c[1]) // 2),
                    ((a[0] + c[0]) // 2, (a[1] + c[1]) // 2)}
            assert hull == corners | mids
            assert sum(1 for c in p.cells if c.is_up == p.is_up) == 3


def test_conflict_graph_examples():
    g = conflict_graph(build_family("H", 2))
    assert len(g.vertices) == 2 and g.edges == ((0, 1),)
    assert conflict_graph(build_family("X", 1)).vertices == ()
    z3 = conflict_graph(build_family("Z", 3))
    assert len(z3.vertices) == 4 and len(z3.edges) == 4
    disjoint = [pair for pair in combinations(range(4), 2) if pair not in z3.edges]
    assert len(disjoint) == 2
    assert 1 + 4 + len(disjoint) == count_dfs(build_family("Z", 3)) == 7


def test_conflict_graph_edges_iff_overlap():
    g = conflict_graph(build_family("B", 6))
    for a, b in combinations(range(len(g.vertices)), 2):
        assert ((a, b) in g.edges) == bool(g.vertices[a].cells & g.vertices[b].cells)
    assert all(a != b for a, b in g.edges)


def test_mirror_isomorphism():
    for n in range(1, 16):
        w = 2 * n - 2
        h = build_family("H", n)
        p, y = build_family("P", n), build_family("Y", n)
        assert h.mirrored(w).cells == h.cells
        py = p.mirrored(w)
        assert py.cells == y.cells
        assert len(py.placements) == len(y.placements)
        assert count_dfs(p) == count_dfs(y)
    with pytest.raises(ValueError):
        build_family("H", 2).mirrored(3)


def test_parse_examples():
    h2 = parse_complex("name h2\nrow0 0..2\nrow1 0..2")
    assert h2.name == "h2" and h2.cells == build_family("H", 2).cells
    assert parse_complex("row0 0..2\nrow1 0..2\ndel 1,2").cells == build_family("P", 2).cells
    odd = parse_complex("row0 0..1\nadd 1,5")
    assert len(odd) == 3 and odd.placements == () and count_dfs(odd) == 1
    assert parse_complex("# nothing\nrow0 empty\nrow1 empty").cells == frozenset()


@pytest.mark.parametrize("text, lineno", [
    ("row0 0..2\nrow0 1..3", 2),
    ("row0 0..2\nfoo 1", 2),
    ("row0 0..2\nadd 0,1", 2),
    ("row0 0..2\ndel 1,0", 2),
    ("row0 0..2\nadd 2,1", 2),
    ("row0 3..1", 1),
    ("row0 0..2\nadd 0,-1", 2),
])
def test_parse_errors_carry_line(text, lineno):
    with pytest.raises(ComplexParseError) as info:
        parse_complex(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


@pytest.mark.parametrize("family", FAMILIES)
def test_serialize_round_trip_builtins(family):
    for n in range(1, 6):
        cx = build_family(family, n)
        back = parse_complex(serialize_complex(cx))
        assert back.cells == cx.cells and back.name == cx.name


@given(st.frozensets(st.tuples(st.integers(0, 1), st.integers(0, 30)), max_size=40))
def test_serialize_round_trip_arbitrary(pairs):
    cx = StripComplex("t", frozenset(TriCell(r, i) for r, i in pairs))
    assert parse_complex(serialize_complex(cx)).cells == cx.cells


def test_from_cells_rejects_duplicates():
    with pytest.raises(ValueError):
        StripComplex.from_cells("d", [TriCell(0, 0), TriCell(0, 0)])
