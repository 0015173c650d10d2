"""Exact minimal-move computation by breadth-first search over territories.

The territory alone determines the future of the game: after any move the
whole territory is recolored, so two positions with equal territory have
equal optimal remaining values.  A level-by-level search over distinct
territory bitmasks therefore yields a provably minimal winning strategy.
No pruning heuristics are used; this is the trust anchor for the
polynomial solver.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .engine import Strategy, flood, initial_state, simulate
from .graph import ColoredGraph, is_connected


class OracleBudgetError(Exception):
    """Instance exceeds the oracle's size or state budget (not 'no solution')."""


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    strategy: Strategy
    states_explored: int


def oracle_min_moves(
    g: ColoredGraph,
    source: int,
    max_vertices: int = 14,
    max_states: int = 2_000_000,
) -> OracleResult:
    """Provably minimal move count and a witnessing strategy.

    Raises OracleBudgetError when the instance is over budget and
    ValueError for disconnected inputs (which have no solution).
    """
    if g.n > max_vertices:
        raise OracleBudgetError(f"n={g.n} exceeds oracle cap {max_vertices}")
    if not is_connected(g):
        raise ValueError("oracle requires a connected graph")
    start = initial_state(g, source).territory
    goal = g.all_vertices
    if start == goal:
        return OracleResult(0, Strategy(()), 1)
    colors = range(g.k)
    parent: dict[int, tuple[int, int]] = {}
    seen = {start}
    queue = deque([start])
    depth_of = {start: 0}
    explored = 0
    while queue:
        territory = queue.popleft()
        explored += 1
        if explored > max_states:
            raise OracleBudgetError(f"state budget {max_states} exceeded")
        for c in colors:
            nxt = flood(g, territory, c)
            if nxt == territory or nxt in seen:
                continue
            seen.add(nxt)
            parent[nxt] = (territory, c)
            depth_of[nxt] = depth_of[territory] + 1
            if nxt == goal:
                moves: list[int] = []
                cur = nxt
                while cur != start:
                    prev, color = parent[cur]
                    moves.append(color)
                    cur = prev
                moves.reverse()
                strategy = Strategy(tuple(moves))
                _, won = simulate(g, source, strategy)
                assert won and len(moves) == depth_of[nxt]
                return OracleResult(depth_of[nxt], strategy, explored)
            queue.append(nxt)
    raise AssertionError("connected instance has a winning strategy")


def oracle_all_sources(
    g: ColoredGraph, max_vertices: int = 14, max_states: int = 2_000_000
) -> dict[int, int]:
    return {
        s: oracle_min_moves(g, s, max_vertices, max_states).optimum
        for s in range(g.n)
    }
