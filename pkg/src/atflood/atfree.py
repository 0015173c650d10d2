"""Asteroidal-triple detection by triple enumeration.

An asteroidal triple is an independent triple where every pair is joined
by a path avoiding the closed neighborhood of the third.  Precomputing,
for each vertex z, the component labeling of G - N[z] makes the triple
scan a constant-time membership test per pair.
"""

from __future__ import annotations

from typing import NamedTuple

from .graph import ColoredGraph, closed_neighborhood, components_avoiding, iter_vertices


class AsteroidalTriple(NamedTuple):
    a: int
    b: int
    c: int


def _component_labels(g: ColoredGraph) -> list[list[int]]:
    """labels[z][v] = component id of v in G - N[z], or -1 if v in N[z]."""
    out = []
    for z in range(g.n):
        removed = closed_neighborhood(g, z)
        label = [-1] * g.n
        for i, comp in enumerate(components_avoiding(g, removed)):
            for v in iter_vertices(comp):
                label[v] = i
        out.append(label)
    return out


def find_asteroidal_triple(g: ColoredGraph) -> AsteroidalTriple | None:
    """Lexicographically smallest asteroidal triple, or None if AT-free."""
    labels = _component_labels(g)
    n = g.n
    for a in range(n):
        for b in range(a + 1, n):
            if g.has_edge(a, b):
                continue
            for c in range(b + 1, n):
                if g.has_edge(a, c) or g.has_edge(b, c):
                    continue
                la, lb, lc = labels[a], labels[b], labels[c]
                if (
                    lc[a] == lc[b] != -1
                    and lb[a] == lb[c] != -1
                    and la[b] == la[c] != -1
                ):
                    return AsteroidalTriple(a, b, c)
    return None


def is_atfree(g: ColoredGraph) -> bool:
    return find_asteroidal_triple(g) is None


def verify_triple(g: ColoredGraph, triple: AsteroidalTriple) -> bool:
    """Re-check a witness by independent component searches (test aid)."""
    a, b, c = triple
    if len({a, b, c}) != 3:
        return False
    if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
        return False

    def pair_connected(x: int, y: int, avoid: int) -> bool:
        removed = closed_neighborhood(g, avoid)
        if removed >> x & 1 or removed >> y & 1:
            return False
        for comp in components_avoiding(g, removed):
            if comp >> x & 1:
                return bool(comp >> y & 1)
        return False

    return (
        pair_connected(a, b, c)
        and pair_connected(a, c, b)
        and pair_connected(b, c, a)
    )
