"""Exact game semantics: territory initialization, moves, simulation.

The player's territory is the conquered vertex set; calling a color adds
every vertex reachable from the territory through a monochromatic path of
that color.  States are immutable snapshots; applying a move returns a new
state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import ColoredGraph, VertexSet, iter_vertices


@dataclass(frozen=True)
class Strategy:
    """A sequence of called colors."""

    colors: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def length(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class GameState:
    graph: ColoredGraph
    source: int
    territory: VertexSet
    current_color: int
    moves: tuple[int, ...] = ()
    last_was_idle: bool = False

    @property
    def finished(self) -> bool:
        return self.territory == self.graph.all_vertices


def flood(g: ColoredGraph, territory: VertexSet, color: int) -> VertexSet:
    """Territory after calling ``color``: closure along color-c paths."""
    cmask = g.color_class(color)
    grown = territory
    frontier = territory
    while frontier:
        new = 0
        for v in iter_vertices(frontier):
            new |= g.adj[v]
        new &= cmask & ~grown
        grown |= new
        frontier = new
    return grown


def initial_state(g: ColoredGraph, source: int) -> GameState:
    """Territory = maximal connected monochromatic subgraph containing source."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    color = g.colors[source]
    territory = flood(g, 1 << source, color)
    return GameState(graph=g, source=source, territory=territory, current_color=color)


def apply_move(state: GameState, color: int) -> GameState:
    """Call a color.  Calling the current color is legal but idle."""
    g = state.graph
    if not 0 <= color < g.k:
        raise ValueError(f"color {color} outside 0..{g.k - 1}")
    territory = flood(g, state.territory, color)
    return GameState(
        graph=g,
        source=state.source,
        territory=territory,
        current_color=color,
        moves=state.moves + (color,),
        last_was_idle=color == state.current_color,
    )


def simulate(g: ColoredGraph, source: int, strategy: Strategy) -> tuple[GameState, bool]:
    state = initial_state(g, source)
    for color in strategy.colors:
        state = apply_move(state, color)
    return state, state.finished


def replay_territory(state: GameState) -> VertexSet:
    """Recompute the territory from the move log (invariant check aid)."""
    fresh = initial_state(state.graph, state.source)
    for color in state.moves:
        fresh = apply_move(fresh, color)
    return fresh.territory


def outside_colors(g: ColoredGraph, source: int) -> set[int]:
    """Colors occurring outside the initial territory of ``source``."""
    territory = initial_state(g, source).territory
    return {g.colors[v] for v in range(g.n) if not territory >> v & 1}
