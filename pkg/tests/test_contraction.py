import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atflood.atfree import is_atfree
from atflood.contraction import contract_edge, contract_monochromatic
from atflood.generators import GenSpec, SplitMix64, connected_instance, generate
from atflood.oracle import oracle_min_moves

from conftest import complete_graph, cycle_graph, path_graph


def test_contract_edge_triangle():
    g = complete_graph(3, [0, 0, 0])
    h, cmap = contract_edge(g, 0, 1, 0)
    assert h.n == 2 and h.edge_count() == 1
    assert cmap.image(0) == cmap.image(1)


def test_contract_edge_path():
    g = path_graph(3, [0, 0, 0])
    h, cmap = contract_edge(g, 0, 1, 0)
    assert h.n == 2
    assert list(h.edges()) == [(0, 1)]


def test_contract_edge_cycle():
    c6 = cycle_graph(6, [0] * 6)
    h, _ = contract_edge(c6, 2, 3, 0)
    assert h.n == 5 and h.edge_count() == 5
    assert all(a.bit_count() == 2 for a in h.adj)  # still a cycle


def test_contract_edge_rejects_non_edge(p5):
    with pytest.raises(ValueError):
        contract_edge(p5, 0, 2, 0)


def test_contract_monochromatic_path():
    g = path_graph(3, [0, 0, 1])
    h, cmap, src = contract_monochromatic(g, 0)
    assert h.n == 2
    assert h.colors == (0, 1)
    assert src == 0
    assert cmap.image(0) == cmap.image(1) == 0


def test_contract_monochromatic_clique():
    g = complete_graph(3, [0, 0, 0])
    h, _, src = contract_monochromatic(g, 1)
    assert h.n == 1 and src == 0


def test_contract_monochromatic_proper_is_identity_like(p5):
    h, cmap, src = contract_monochromatic(p5, 2)
    assert h.n == p5.n and src == 2
    assert cmap.original_to_contracted == tuple(range(5))


@given(st.integers(0, 10_000))
@settings(max_examples=80, deadline=None)
def test_contraction_properness(seed):
    g = generate(GenSpec(family="permutation", n=9, colors=3, seed=seed))
    h, cmap, _ = contract_monochromatic(g, 0)
    for u, v in h.edges():
        assert h.colors[u] != h.colors[v]
    # map groups exactly the monochromatic components
    assert set(cmap.original_to_contracted) == set(range(h.n))


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_contraction_idempotent(seed):
    g = generate(GenSpec(family="interval", n=9, colors=3, seed=seed))
    h, _, hs = contract_monochromatic(g, 0)
    h2, cmap2, _ = contract_monochromatic(h, hs)
    assert h2.n == h.n
    assert cmap2.original_to_contracted == tuple(range(h.n))


@given(st.integers(0, 10_000))
@settings(max_examples=25, deadline=None)
def test_atfree_closed_under_edge_contraction(seed):
    spec = GenSpec(family="interval", n=9, colors=1, seed=seed)
    g, _ = connected_instance(spec, 0)
    if g.edge_count() == 0:
        return
    rng = SplitMix64(seed)
    edges = list(g.edges())
    u, v = edges[rng.below(len(edges))]
    h, _ = contract_edge(g, u, v, g.colors[u])
    assert is_atfree(h)


@given(st.integers(0, 10_000))
@settings(max_examples=25, deadline=None)
def test_game_value_invariant_under_contraction(seed):
    spec = GenSpec(family="rejection", n=7, colors=3, seed=seed)
    g, src = connected_instance(spec, 0)
    h, _, hsrc = contract_monochromatic(g, src)
    assert oracle_min_moves(g, src).optimum == oracle_min_moves(h, hsrc).optimum
