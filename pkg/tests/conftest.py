import pytest

from atflood.graph import ColoredGraph, mask_of


def m(*vertices: int) -> int:
    return mask_of(vertices)


def path_graph(n: int, colors=None) -> ColoredGraph:
    """Path 0-1-...-(n-1); default coloring alternates 0,1."""
    if colors is None:
        colors = [i % 2 for i in range(n)]
    return ColoredGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], colors)


def cycle_graph(n: int, colors=None) -> ColoredGraph:
    if colors is None:
        colors = [i % 2 for i in range(n)]
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return ColoredGraph.from_edges(n, edges, colors)


def complete_graph(n: int, colors=None) -> ColoredGraph:
    if colors is None:
        colors = list(range(n))
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return ColoredGraph.from_edges(n, edges, colors)


def star_graph(leaf_colors) -> ColoredGraph:
    """Center is vertex 0 with color 0; leaves get the given colors."""
    n = len(leaf_colors) + 1
    return ColoredGraph.from_edges(
        n, [(0, i) for i in range(1, n)], [0] + list(leaf_colors)
    )


def two_ray_pinch_graph() -> ColoredGraph:
    """C4 (1,2,3,5) with pendants 0 at 1 and 4 at 3; AT-free, and vertex 5
    forms a one-vertex block at source 2 inside the widest interval."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 5)]
    return ColoredGraph.from_edges(6, edges, [0, 1, 0, 1, 0, 2])


def figure_witness_graph() -> ColoredGraph:
    """Six-vertex graph whose smallest asteroidal triple is (0, 3, 4):
    0 adjacent to 1,2; edge 1-2; 1-3, 2-4; 3-5, 4-5."""
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5)]
    return ColoredGraph.from_edges(6, edges, [0, 1, 2, 0, 1, 2])


@pytest.fixture
def p5():
    return path_graph(5)
