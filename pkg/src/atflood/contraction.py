"""Edge contraction and monochromatic-component contraction.

Contracting every connected monochromatic subgraph yields a properly
colored graph with the same game value, which is the preprocessing step
the polynomial solver relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ColoredGraph, iter_vertices


@dataclass(frozen=True)
class ContractionMap:
    """Witness of a contraction: old vertex id -> new vertex id.

    Surjective onto 0..contracted_n-1; two originals map to the same id
    iff they were contracted together.
    """

    original_to_contracted: tuple[int, ...]
    contracted_n: int

    def image(self, v: int) -> int:
        return self.original_to_contracted[v]

    def preimage(self, new_id: int) -> list[int]:
        return [v for v, w in enumerate(self.original_to_contracted) if w == new_id]


def _contract_groups(
    g: ColoredGraph, groups: list[int], group_color: list[int]
) -> tuple[ColoredGraph, ContractionMap]:
    """Contract each group mask to one vertex.

    Groups must partition V.  New ids are assigned by ascending smallest
    original member, which keeps contractions deterministic.
    """
    order = sorted(range(len(groups)), key=lambda i: groups[i] & -groups[i])
    new_id_of_group = {gi: ni for ni, gi in enumerate(order)}
    orig_to_new = [0] * g.n
    for gi, mask in enumerate(groups):
        for v in iter_vertices(mask):
            orig_to_new[v] = new_id_of_group[gi]
    new_n = len(groups)
    colors = [0] * new_n
    for gi, mask in enumerate(groups):
        colors[new_id_of_group[gi]] = group_color[gi]
    edges = set()
    for u, v in g.edges():
        a, b = orig_to_new[u], orig_to_new[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    # color ids are preserved verbatim; a recolored input (hint residuals)
    # may leave gaps in the id space, which downstream code tolerates
    contracted = ColoredGraph.from_edges(
        new_n, sorted(edges), colors, require_dense_colors=False
    )
    return contracted, ContractionMap(tuple(orig_to_new), new_n)


def contract_edge(
    g: ColoredGraph, u: int, v: int, new_color: int
) -> tuple[ColoredGraph, ContractionMap]:
    """Contract edge {u,v} into one vertex carrying ``new_color``.

    The new vertex's neighborhood is N(u) | N(v) minus the endpoints.
    Rejects non-edges.  Raises if the contraction would orphan a color id
    (color ids stay dense; pick ``new_color`` accordingly).
    """
    if u == v or not g.has_edge(u, v):
        raise ValueError(f"{{{u},{v}}} is not an edge")
    if not 0 <= new_color < g.k:
        raise ValueError(f"new_color {new_color} outside 0..{g.k - 1}")
    pair = (1 << u) | (1 << v)
    groups = [pair] + [1 << w for w in range(g.n) if not (pair >> w & 1)]
    group_color = [new_color] + [g.colors[w] for w in range(g.n) if not (pair >> w & 1)]
    try:
        return _contract_groups(g, groups, group_color)
    except ValueError as exc:
        raise ValueError(f"contraction orphans a color id: {exc}") from exc


def contract_monochromatic(
    g: ColoredGraph, source: int
) -> tuple[ColoredGraph, ContractionMap, int]:
    """Contract every maximal connected monochromatic subgraph to one vertex.

    The result is properly colored (no edge joins equal colors) and has the
    same game value as ``g``; returns (graph, map, image of source).
    """
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    groups: list[int] = []
    group_color: list[int] = []
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        c = g.colors[v]
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = 0
            for w in iter_vertices(frontier):
                grown |= g.adj[w]
            grown &= ~comp
            grown &= g.color_class(c)
            comp |= grown
            frontier = grown
        seen |= comp
        groups.append(comp)
        group_color.append(c)
    contracted, cmap = _contract_groups(g, groups, group_color)
    return contracted, cmap, cmap.image(source)
