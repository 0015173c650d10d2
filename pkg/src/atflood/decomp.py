"""Blocks, intervals, extremes and the widest-interval decomposition context.

A block at x is a component of G - N[x].  A vertex z lies between two
nonadjacent vertices x and y when z shares a component with x in G - N[y]
and with y in G - N[x]; the interval I(x,y) collects all such z.  Extremes
maximize the largest block size; the widest nonadjacent pair (alpha, omega)
with its end sets and separators drives the general-source solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    ColoredGraph,
    VertexSet,
    closed_neighborhood,
    component_containing,
    components_avoiding,
    iter_vertices,
    neighbors_of_set,
    popcount,
)


def blocks_at(g: ColoredGraph, x: int) -> list[VertexSet]:
    """Components of G - N[x], ordered by smallest member."""
    return components_avoiding(g, closed_neighborhood(g, x))


def interval(g: ColoredGraph, x: int, y: int) -> VertexSet:
    """I(x,y): vertices between nonadjacent x and y.

    z is between x and y iff x,z share a component of G - N[y] and y,z
    share a component of G - N[x].  Rejects adjacent or equal pairs.
    """
    if x == y:
        raise ValueError("interval endpoints must differ")
    if g.has_edge(x, y):
        raise ValueError(f"interval endpoints {x},{y} are adjacent")
    comp_x_side = component_containing(g, closed_neighborhood(g, y), x)
    comp_y_side = component_containing(g, closed_neighborhood(g, x), y)
    if comp_x_side is None or comp_y_side is None:
        return 0
    return comp_x_side & comp_y_side & ~(1 << x) & ~(1 << y)


def _largest_block_size(g: ColoredGraph, x: int, within: VertexSet) -> int:
    removed = ~within | closed_neighborhood(g, x)
    blocks = components_avoiding(g, removed & g.all_vertices)
    return max((popcount(b) for b in blocks), default=0)


def is_extreme(g: ColoredGraph, x: int) -> bool:
    """x maximizes the largest block size within its own component."""
    comp = component_containing(g, 0, x)
    best = max(_largest_block_size(g, v, comp) for v in iter_vertices(comp))
    return _largest_block_size(g, x, comp) == best


def find_extremes(g: ColoredGraph) -> VertexSet:
    out = 0
    for comp in components_avoiding(g, 0):
        best = max(_largest_block_size(g, v, comp) for v in iter_vertices(comp))
        for v in iter_vertices(comp):
            if _largest_block_size(g, v, comp) == best:
                out |= 1 << v
    return out


@dataclass(frozen=True)
class ExtremeContext:
    """Largest block C at an extreme x, its separator S=N(C), and the
    module X = V - (C u S), every member of which joins completely to S."""

    x: int
    largest_block: VertexSet
    separator: VertexSet
    module: VertexSet


def extreme_context(g: ColoredGraph, x: int, within: VertexSet | None = None) -> ExtremeContext:
    comp = within if within is not None else component_containing(g, 0, x)
    removed = (~comp | closed_neighborhood(g, x)) & g.all_vertices
    blocks = components_avoiding(g, removed)
    largest = max(blocks, key=lambda b: (popcount(b), -(b & -b))) if blocks else 0
    sep = neighbors_of_set(g, largest) & comp if largest else 0
    module = comp & ~(largest | sep)
    return ExtremeContext(x=x, largest_block=largest, separator=sep, module=module)


def _is_union_of_cliques(g: ColoredGraph, within: VertexSet) -> bool:
    removed = g.all_vertices & ~within
    for comp in components_avoiding(g, removed):
        for v in iter_vertices(comp):
            if (g.adj[v] & comp) != comp ^ (1 << v):
                return False
    return True


def global_extremes(g: ColoredGraph) -> VertexSet:
    """Global extremes: the recursive refinement of extremes through X.

    The definition admits any extreme as the pivot, so the result is the
    union over all pivots of the recursion; each level either stops (X
    induces a disjoint union of cliques) or recurses into G[X].
    """
    memo: dict[VertexSet, VertexSet] = {}

    def solve(live: VertexSet) -> VertexSet:
        if live in memo:
            return memo[live]
        memo[live] = 0  # cycle guard; overwritten below
        result = 0
        removed = g.all_vertices & ~live
        for comp in components_avoiding(g, removed):
            sizes = {v: _largest_block_size(g, v, comp) for v in iter_vertices(comp)}
            best = max(sizes.values())
            for x, size in sizes.items():
                if size != best:
                    continue
                ctx = extreme_context(g, x, within=comp)
                if ctx.module == 0:
                    result |= 1 << x
                elif _is_union_of_cliques(g, ctx.module):
                    result |= ctx.module
                else:
                    result |= solve(ctx.module)
        memo[live] = result
        return result

    return solve(g.all_vertices)


@dataclass(frozen=True)
class DecompContext:
    """Widest nonadjacent pair (alpha, omega) with the sets around it.

    far_of_alpha is the component of G - N[alpha] containing omega (and
    symmetrically); sep_* are their neighborhoods; ends_alpha is everything
    left of sep_alpha (alpha's end of the graph) and joins completely to
    sep_alpha, likewise ends_omega.
    """

    alpha: int
    omega: int
    far_of_alpha: VertexSet
    far_of_omega: VertexSet
    sep_alpha: VertexSet
    sep_omega: VertexSet
    ends_alpha: VertexSet
    ends_omega: VertexSet
    interval: VertexSet


def _context_for(g: ColoredGraph, alpha: int, omega: int) -> DecompContext:
    far_a = component_containing(g, closed_neighborhood(g, alpha), omega)
    far_o = component_containing(g, closed_neighborhood(g, omega), alpha)
    assert far_a is not None and far_o is not None
    sep_a = neighbors_of_set(g, far_a)
    sep_o = neighbors_of_set(g, far_o)
    ends_a = g.all_vertices & ~(sep_a | far_a)
    ends_o = g.all_vertices & ~(sep_o | far_o)
    return DecompContext(
        alpha=alpha,
        omega=omega,
        far_of_alpha=far_a,
        far_of_omega=far_o,
        sep_alpha=sep_a,
        sep_omega=sep_o,
        ends_alpha=ends_a,
        ends_omega=ends_o,
        interval=far_a & far_o & ~(1 << alpha) & ~(1 << omega),
    )


def widest_pair(g: ColoredGraph) -> DecompContext | None:
    """Scan nonadjacent pairs for maximal |I|, then enforce the end joins.

    An end vertex violating the join with its separator is replaced by the
    violator, but only when the replacement keeps the interval maximal
    (the far component always grows, yet the opposite side can collapse on
    some inputs, so each replacement is checked).  If no maximal pair
    reaches full joins, the lexicographically smallest maximal pair is
    returned as-is; downstream side labels treat the end sets as hints.
    Returns None on complete graphs.
    """
    candidates: list[tuple[int, int]] = []
    best_size = -1
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y):
                continue
            size = popcount(interval(g, x, y))
            if size > best_size:
                candidates, best_size = [(x, y)], size
            elif size == best_size:
                candidates.append((x, y))
    if not candidates:
        return None

    def join_violators(ends: VertexSet, sep: VertexSet) -> list[int]:
        return [a for a in iter_vertices(ends) if sep & ~g.adj[a] & ~(1 << a)]

    def settle(alpha: int, omega: int) -> DecompContext | None:
        seen = set()
        while (alpha, omega) not in seen:
            seen.add((alpha, omega))
            ctx = _context_for(g, alpha, omega)
            bad_a = join_violators(ctx.ends_alpha, ctx.sep_alpha)
            if bad_a:
                rep = next(
                    (a for a in bad_a
                     if not g.has_edge(a, omega) and a != omega
                     and popcount(interval(g, a, omega)) >= best_size),
                    None,
                )
                if rep is None:
                    return None
                alpha = rep
                continue
            bad_o = join_violators(ctx.ends_omega, ctx.sep_omega)
            if bad_o:
                rep = next(
                    (w for w in bad_o
                     if not g.has_edge(alpha, w) and w != alpha
                     and popcount(interval(g, alpha, w)) >= best_size),
                    None,
                )
                if rep is None:
                    return None
                omega = rep
                continue
            return ctx
        return None

    for alpha, omega in candidates:
        ctx = settle(alpha, omega)
        if ctx is not None:
            return ctx
    return _context_for(g, *candidates[0])
