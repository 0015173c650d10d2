import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atflood.generators import GenSpec, generate
from atflood.graph import (
    ColoredGraph,
    closed_neighborhood,
    component_containing,
    components_avoiding,
    induced_subgraph,
    iter_vertices,
    mask_of,
    set_of,
)

from conftest import complete_graph, m, path_graph


def test_closed_neighborhood_path(p5):
    assert closed_neighborhood(p5, 2) == m(1, 2, 3)


def test_closed_neighborhood_isolated():
    g = ColoredGraph.from_edges(3, [(0, 1)], [0, 0, 0])
    assert closed_neighborhood(g, 2) == m(2)


def test_closed_neighborhood_complete():
    g = complete_graph(4)
    assert closed_neighborhood(g, 0) == m(0, 1, 2, 3)


def test_components_avoiding_path(p5):
    assert components_avoiding(p5, m(1, 2, 3)) == [m(0), m(4)]


def test_components_avoiding_nothing_removed(p5):
    assert components_avoiding(p5, 0) == [p5.all_vertices]


def test_components_avoiding_cycle():
    from conftest import cycle_graph

    c6 = cycle_graph(6)
    assert components_avoiding(c6, m(5, 0, 1)) == [m(2, 3, 4)]


def test_component_containing(p5):
    assert component_containing(p5, m(1, 2, 3), 4) == m(4)
    assert component_containing(p5, m(1, 2, 3), 2) is None
    assert component_containing(p5, 0, 3) == p5.all_vertices


def test_from_edges_rejects_self_loop():
    with pytest.raises(ValueError):
        ColoredGraph.from_edges(2, [(0, 0)], [0, 0])


def test_from_edges_rejects_out_of_range():
    with pytest.raises(ValueError):
        ColoredGraph.from_edges(2, [(0, 5)], [0, 0])


def test_from_edges_rejects_color_gap():
    with pytest.raises(ValueError):
        ColoredGraph.from_edges(2, [(0, 1)], [0, 2])


def test_induced_subgraph_compacts_colors():
    g = path_graph(4, [0, 1, 2, 1])
    sub, old_ids = induced_subgraph(g, m(2, 3))
    assert old_ids == [2, 3]
    assert sub.colors == (1, 0)
    assert list(sub.edges()) == [(0, 1)]


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_components_partition(seed):
    g = generate(GenSpec(family="interval", n=10, colors=3, seed=seed))
    removed = mask_of(v for v in range(g.n) if (seed >> v) & 1)
    comps = components_avoiding(g, removed)
    union = 0
    for comp in comps:
        assert comp & union == 0
        union |= comp
    assert union == g.all_vertices & ~removed
    # deterministic order by smallest member
    mins = [min(iter_vertices(c)) for c in comps]
    assert mins == sorted(mins)


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_neighborhood_symmetry(seed):
    g = generate(GenSpec(family="permutation", n=9, colors=2, seed=seed))
    for x in range(g.n):
        nx = closed_neighborhood(g, x)
        assert nx >> x & 1
        for y in set_of(nx):
            assert closed_neighborhood(g, y) >> x & 1
