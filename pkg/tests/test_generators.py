import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atflood.atfree import is_atfree
from atflood.generators import (
    GenSpec,
    InfeasibleSpecError,
    SplitMix64,
    connected_instance,
    generate,
)
from atflood.graph import is_connected


def test_splitmix64_reference_stream():
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_determinism():
    spec = GenSpec(family="interval", n=15, colors=4, seed=123)
    g1, g2 = generate(spec), generate(spec)
    assert g1 == g2


@pytest.mark.parametrize("seed", [0, 1, 7, 99, 1234])
def test_interval_family_atfree(seed):
    g = generate(GenSpec(family="interval", n=20, colors=3, seed=seed))
    assert is_atfree(g)


@pytest.mark.parametrize("seed", [0, 1, 7, 99, 1234])
def test_permutation_family_atfree(seed):
    g = generate(GenSpec(family="permutation", n=14, colors=3, seed=seed))
    assert is_atfree(g)


def test_rejection_family_atfree_and_capped():
    g = generate(GenSpec(family="rejection", n=9, colors=2, seed=5))
    assert is_atfree(g)
    with pytest.raises(InfeasibleSpecError):
        generate(GenSpec(family="rejection", n=30, colors=2, seed=5))


def test_grid_line_proper_two_coloring():
    g = generate(GenSpec(family="grid", rows=1, cols=6, colors=2, seed=3, proper=True))
    assert g.n == 6
    assert list(g.edges()) == [(i, i + 1) for i in range(5)]
    for u, v in g.edges():
        assert g.colors[u] != g.colors[v]
    assert set(g.colors) == {0, 1}


def test_proper_needs_enough_colors():
    with pytest.raises(InfeasibleSpecError):
        generate(GenSpec(family="grid", rows=2, cols=2, colors=1, seed=0, proper=True))


def test_colors_capped_by_vertices():
    with pytest.raises(InfeasibleSpecError):
        generate(GenSpec(family="interval", n=3, colors=5, seed=0))


def test_unknown_family():
    with pytest.raises(InfeasibleSpecError):
        generate(GenSpec(family="moebius", n=3, colors=2, seed=0))


@given(st.integers(0, 100_000))
@settings(max_examples=60, deadline=None)
def test_every_color_appears(seed):
    k = 2 + seed % 4
    g = generate(GenSpec(family="permutation", n=10, colors=k, seed=seed))
    assert set(g.colors) == set(range(k))


@given(st.integers(0, 100_000))
@settings(max_examples=60, deadline=None)
def test_proper_colorings_are_proper(seed):
    try:
        g = generate(GenSpec(family="interval", n=10, colors=6, seed=seed, proper=True))
    except InfeasibleSpecError:
        return  # chromatic need above the budget is a legitimate refusal
    for u, v in g.edges():
        assert g.colors[u] != g.colors[v]
    assert set(g.colors) == set(range(6))


@given(st.integers(0, 100_000))
@settings(max_examples=40, deadline=None)
def test_connected_instance_is_connected(seed):
    g, src = connected_instance(GenSpec(family="interval", n=12, colors=3, seed=seed), 0)
    assert is_connected(g)
    assert 0 <= src < g.n
