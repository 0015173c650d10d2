"""Immutable colored graphs over dense integer vertex ids.

Vertex sets are plain Python ints used as bitmasks (bit v set <=> vertex v
in the set), which gives O(n/word) set algebra and hashable set values for
free.  All neighborhood/component primitives below work on such masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

VertexSet = int  # bitmask over vertices 0..n-1


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: VertexSet) -> set[int]:
    return set(iter_vertices(mask))


def iter_vertices(mask: VertexSet) -> Iterator[int]:
    """Yield members of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class ColoredGraph:
    """Simple undirected graph with a vertex coloring.

    ``adj[v]`` is the neighbor bitmask of v (v itself excluded).  Colors are
    dense ids 0..k-1; ``k`` equals ``max(colors) + 1``.  Instances are
    immutable and safe to share across threads.
    """

    n: int
    adj: tuple[int, ...]
    colors: tuple[int, ...]
    k: int

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        colors: Iterable[int],
        require_dense_colors: bool = True,
    ) -> "ColoredGraph":
        colors = tuple(colors)
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(colors) != n:
            raise ValueError(f"expected {n} colors, got {len(colors)}")
        if any(c < 0 for c in colors):
            raise ValueError("colors must be non-negative")
        k = max(colors) + 1
        if require_dense_colors:
            present = set(colors)
            missing = [c for c in range(k) if c not in present]
            if missing:
                raise ValueError(f"color ids not dense, missing {missing}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n=n, adj=tuple(adj), colors=colors, k=k)

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in iter_vertices(rest):
                yield (u, u + 1 + off)

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def color_class(self, c: int) -> VertexSet:
        return mask_of(v for v in range(self.n) if self.colors[v] == c)


def closed_neighborhood(g: ColoredGraph, x: int) -> VertexSet:
    """N[x] = {x} union adj(x)."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    return g.adj[x] | (1 << x)


def neighbors_of_set(g: ColoredGraph, s: VertexSet) -> VertexSet:
    """N(S): vertices outside S with a neighbor in S."""
    acc = 0
    for v in iter_vertices(s):
        acc |= g.adj[v]
    return acc & ~s


def components_avoiding(g: ColoredGraph, removed: VertexSet) -> list[VertexSet]:
    """Connected components of G - removed, ordered by smallest member."""
    live = g.all_vertices & ~removed
    out: list[VertexSet] = []
    seen = 0
    for v in iter_vertices(live):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            grown = 0
            for u in iter_vertices(frontier):
                grown |= g.adj[u]
            grown &= live & ~comp
            comp |= grown
            frontier = grown
        seen |= comp
        out.append(comp)
    return out


def component_containing(g: ColoredGraph, removed: VertexSet, x: int) -> VertexSet | None:
    """The component of G - removed that contains x, or None if x is removed."""
    if removed >> x & 1:
        return None
    live = g.all_vertices & ~removed
    comp = 1 << x
    frontier = comp
    while frontier:
        grown = 0
        for u in iter_vertices(frontier):
            grown |= g.adj[u]
        grown &= live & ~comp
        comp |= grown
        frontier = grown
    return comp


def is_connected(g: ColoredGraph) -> bool:
    if g.n == 0:
        return True
    return component_containing(g, 0, 0) == g.all_vertices


def induced_subgraph(g: ColoredGraph, keep: VertexSet) -> tuple[ColoredGraph, list[int]]:
    """Induced subgraph on ``keep`` with colors compacted to dense ids.

    Returns (subgraph, old_ids) where old_ids[new] is the original vertex id.
    """
    old_ids = list(iter_vertices(keep))
    if not old_ids:
        raise ValueError("cannot induce on the empty set")
    new_of = {old: new for new, old in enumerate(old_ids)}
    used = sorted({g.colors[v] for v in old_ids})
    cmap = {c: i for i, c in enumerate(used)}
    edges = [
        (new_of[u], new_of[v])
        for u, v in g.edges()
        if (keep >> u & 1) and (keep >> v & 1)
    ]
    colors = [cmap[g.colors[v]] for v in old_ids]
    return ColoredGraph.from_edges(len(old_ids), edges, colors), old_ids
