"""Polynomial Flood-It solver for AT-free graphs, oracle-calibrated.

Pipeline: contract monochromatic components (game value is invariant),
check AT-freeness, then either

* extreme-style: for sources at an end of the decomposition, a 0/1
  vertex-weighted cheapest path from the source to a farthest chain
  maximum (weight 0 on chain maxima, 1 elsewhere), plus one move per
  color still pending outside the initial territory; or

* pair dynamic program: for sources inside the widest interval, a
  cheapest-path search over two-front states.  A state is the pair of
  last-advanced tie groups on the two sides; calling a color advances
  both fronts to their deepest enabled groups at once, and the move is
  free exactly when it finishes its color class (conquers the class's
  last outstanding top).  Total cost = essential moves + pending colors.

Every result is re-simulated through the game engine before being
returned; a mismatch raises instead of reporting a wrong optimum.

The recurrence for the pair program admits several readings of its
zero/one move discount; ``variant`` selects between the operational
reading used by default ("derived") and the literal ones ("printed",
"transposed") kept for calibration.  scripts/calibrate.py adjudicates
them against the oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any

from .atfree import AsteroidalTriple, find_asteroidal_triple
from .contraction import contract_monochromatic
from .decomp import DecompContext, global_extremes, widest_pair
from .engine import GameState, Strategy, apply_move, flood, initial_state, outside_colors, simulate
from .graph import (
    ColoredGraph,
    VertexSet,
    closed_neighborhood,
    component_containing,
    is_connected,
    iter_vertices,
    neighbors_of_set,
    popcount,
)
from .oracle import OracleBudgetError, oracle_min_moves
from .ordering import ChainOrderError, ChainStructure, build_chains

DEFAULT_VARIANT = "derived"
ORACLE_FALLBACK_CAP = 14


class NotAtFreeError(Exception):
    """Input graph is not AT-free; carries a witness triple."""

    def __init__(self, witness: AsteroidalTriple):
        self.witness = witness
        super().__init__(f"graph contains an asteroidal triple {tuple(witness)}")


class SolverInternalError(Exception):
    """The computed plan did not replay to its claimed value."""


class HintUnavailableError(Exception):
    """Residual game is neither AT-free nor oracle-sized."""


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    strategy: Strategy
    method: str
    diagnostics: dict[str, Any] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class PairTable:
    """Costs of two-front states plus predecessors for reconstruction."""

    costs: dict[tuple[int, int], int]
    predecessors: dict[tuple[int, int], tuple[tuple[int, int], int]]


def pending_color_count(g: ColoredGraph, source: int) -> int:
    """Colors occurring outside the initial territory (each needs a call)."""
    return len(outside_colors(g, source))


def _adjacency_of(g: ColoredGraph, mask: VertexSet) -> VertexSet:
    acc = 0
    for v in iter_vertices(mask):
        acc |= g.adj[v]
    return acc


# ---------------------------------------------------------------------------
# plan replay


def _replay_plan(
    g: ColoredGraph, source: int, planned: list[int], claimed: int, method: str,
    diagnostics: dict[str, Any],
) -> SolveResult:
    """Replay planned calls (skipping no-ops), finish pending colors, verify.

    The cleanup loop prefers calls that finish their whole color class;
    the final move count must equal the claimed optimum exactly.
    """
    state = initial_state(g, source)
    emitted: list[int] = []

    def call(color: int) -> None:
        nonlocal state
        state = apply_move(state, color)
        emitted.append(color)

    for color in planned:
        if flood(g, state.territory, color) != state.territory:
            call(color)
    guard = 0
    while not state.finished:
        guard += 1
        if guard > 4 * g.n + 8:
            raise SolverInternalError(f"{method}: cleanup failed to terminate")
        remaining = g.all_vertices & ~state.territory
        pending = sorted({g.colors[v] for v in iter_vertices(remaining)})
        chosen = None
        for c in pending:
            grown = flood(g, state.territory, c)
            if grown == state.territory:
                continue
            if not (g.color_class(c) & ~grown):
                chosen = c
                break
            if chosen is None:
                chosen = c
        if chosen is None:
            raise SolverInternalError(f"{method}: no progressing color in cleanup")
        call(chosen)
    if len(emitted) != claimed:
        raise SolverInternalError(
            f"{method}: plan replayed to {len(emitted)} moves, claimed {claimed}"
        )
    strategy = Strategy(tuple(emitted))
    _, won = simulate(g, source, strategy)
    if not won:
        raise SolverInternalError(f"{method}: replay did not win")
    return SolveResult(optimum=claimed, strategy=strategy, method=method,
                       diagnostics=diagnostics)


# ---------------------------------------------------------------------------
# extreme-style solve (source at an end of the decomposition)


def _zero_one_path(
    g: ColoredGraph, zero_mask: VertexSet, source: int, goal: VertexSet
) -> tuple[int, list[int]]:
    """Cheapest path by vertex weights (0 inside zero_mask, else 1).

    The source's own weight is excluded.  Deque-based 0/1 relaxation.
    """
    INF = 1 << 30
    dist = [INF] * g.n
    prev = [-1] * g.n
    dist[source] = 0
    dq = deque([source])
    while dq:
        v = dq.popleft()
        for u in iter_vertices(g.adj[v]):
            w = 0 if zero_mask >> u & 1 else 1
            if dist[v] + w < dist[u]:
                dist[u] = dist[v] + w
                prev[u] = v
                if w == 0:
                    dq.appendleft(u)
                else:
                    dq.append(u)
    best = min(
        (t for t in iter_vertices(goal)), key=lambda t: (dist[t], t), default=None
    )
    if best is None or dist[best] >= INF:
        raise SolverInternalError("no path to a goal maximum")
    path = [best]
    while path[-1] != source:
        path.append(prev[path[-1]])
    path.reverse()
    return dist[best], path


def solve_extreme(
    g: ColoredGraph, source: int, chains: ChainStructure | None = None
) -> SolveResult:
    """Solve with the single-chain analysis (correct for global-extreme
    sources; also applied to sources in the end sets or separators).

    Picks the vertex whose removal leaves the largest component around the
    source, forms the opposite end of that split, and runs the 0/1-weighted
    cheapest path from the source into the chain maxima of that end.
    """
    if chains is None:
        chains = build_chains(g, source, None)
    pending = pending_color_count(g, source)
    diagnostics: dict[str, Any] = {"pending_colors": pending}
    if pending == 0:
        return _replay_plan(g, source, [], 0, "extreme-path", diagnostics)
    maxima = chains.maxima_mask
    best_size, best_comp = -1, 0
    for x in range(g.n):
        comp = component_containing(g, closed_neighborhood(g, x), source)
        size = popcount(comp) if comp else 0
        if size > best_size:
            best_size, best_comp = size, comp or 0
    around_source = best_comp
    rim = neighbors_of_set(g, around_source) if around_source else 0
    far_end = g.all_vertices & ~(around_source | rim)
    goal = far_end & maxima
    diagnostics.update(far_end=far_end, goal=goal)
    if goal == 0:
        raise SolverInternalError("no chain maximum inside the far end")
    cost, path = _zero_one_path(g, maxima, source, goal)
    diagnostics["path"] = path
    planned = [g.colors[v] for v in path[1:]]
    return _replay_plan(g, source, planned, cost + pending, "extreme-path", diagnostics)


# ---------------------------------------------------------------------------
# pair dynamic program (source inside the widest interval)


def _pair_dp_derived(
    g: ColoredGraph, source: int, chains: ChainStructure
) -> tuple[int, list[int], PairTable]:
    """Two-front 0/1 search; see module docstring for the state semantics.

    A state is final when every chain top is conquered or enabled: from
    there one call per pending color finishes the game (conquering a top
    drags the rest of its chain along in the same move).
    """
    masks = chains.group_masks
    below = chains.below
    blob = initial_state(g, source).territory
    colors = sorted(chains.a_chain.keys() | chains.o_chain.keys())
    all_tops = [gid for tops in chains.tops_of.values() for gid in tops]

    def conq(xa: int, xo: int) -> VertexSet:
        acc = blob
        if xa >= 0:
            acc |= below[xa] | masks[xa]
        if xo >= 0:
            acc |= below[xo] | masks[xo]
        return acc

    def deepest_enabled(chain: tuple[int, ...], reach: VertexSet, cq: VertexSet) -> int | None:
        for gid in reversed(chain):
            if masks[gid] & reach:
                if masks[gid] & ~cq:
                    return gid
                return None  # side already conquered up to its enabled depth
        return None

    start = (-1, -1)
    costs: dict[tuple[int, int], int] = {start: 0}
    preds: dict[tuple[int, int], tuple[tuple[int, int], int]] = {}
    dq: deque[tuple[int, int]] = deque([start])
    best_target: tuple[int, tuple[int, int]] | None = None

    def is_target(state: tuple[int, int]) -> bool:
        """Cleanup-ready: one call per pending color finishes the game,
        allowing each conquest to enable later ones (cascade)."""
        cq = conq(*state)
        pending = [c for c in colors
                   if any(masks[gid] & ~cq for gid in chains.tops_of.get(c, ()))]
        while pending:
            progressed = False
            for c in list(pending):
                reach = _adjacency_of(g, cq)
                if all(
                    not (masks[gid] & ~cq) or (masks[gid] & reach)
                    for gid in chains.tops_of[c]
                ):
                    for gid in chains.tops_of[c]:
                        cq |= below[gid] | masks[gid]
                    pending.remove(c)
                    progressed = True
            if not progressed:
                return False
        return True

    while dq:
        state = dq.popleft()
        d = costs[state]
        if best_target is not None and d > best_target[0]:
            continue
        if is_target(state):
            if best_target is None or d < best_target[0]:
                best_target = (d, state)
            continue
        xa, xo = state
        cq = conq(xa, xo)
        reach = _adjacency_of(g, cq)
        for c in colors:
            ga = deepest_enabled(chains.a_chain.get(c, ()), reach, cq)
            go = deepest_enabled(chains.o_chain.get(c, ()), reach, cq)
            if ga is None and go is None:
                continue
            if ga is not None and go is not None and ga != go:
                successors = [(ga, go)]
            elif ga is not None and go is not None:
                # one shared group: the call serves either front
                successors = [(ga, xo), (xa, go)]
            elif ga is not None:
                successors = [(ga, xo)]
            else:
                successors = [(xa, go)]
            advanced = {gid for gid in (ga, go) if gid is not None}
            tops = chains.tops_of.get(c, ())
            finishing = all(
                gid in advanced or not (masks[gid] & ~cq) for gid in tops
            )
            step = 0 if finishing else 1
            nd = d + step
            for new_state in successors:
                if new_state == state:
                    continue
                if nd < costs.get(new_state, 1 << 30):
                    costs[new_state] = nd
                    preds[new_state] = (state, c)
                    if step == 0:
                        dq.appendleft(new_state)
                    else:
                        dq.append(new_state)
    if best_target is None:
        raise SolverInternalError("pair search never conquered both ends")
    dist, target = best_target
    plan: list[int] = []
    cur = target
    while cur != start:
        prev, c = preds[cur]
        plan.append(c)
        cur = prev
    plan.reverse()
    return dist, plan, PairTable(costs, preds)


def _pair_dp_literal(
    g: ColoredGraph, source: int, chains: ChainStructure, ctx: DecompContext,
    transposed: bool,
) -> tuple[int, list[int], PairTable]:
    """Literal reading of the published recurrence (calibration toggle).

    Each class is viewed as one order running from its side-A extreme down
    through the bottoms and up to its side-O extreme.  A slot's
    predecessor for color c is the advanced group's c-colored neighbor
    nearest the source in that order; the 0/1 discount follows the printed
    clause list.  ``transposed`` swaps which slot the discount subscripts
    refer to.
    """
    import heapq

    masks = chains.group_masks
    blob = initial_state(g, source).territory
    nsrc = closed_neighborhood(g, source)

    comp_of_src: dict[int, VertexSet | None] = {}

    def src_comp(v: int) -> VertexSet | None:
        if v not in comp_of_src:
            comp_of_src[v] = component_containing(g, closed_neighborhood(g, v), source)
        return comp_of_src[v]

    def incomparable(u: int, w: int) -> bool:
        if nsrc >> u & 1 or nsrc >> w & 1:
            return False
        return src_comp(u) == src_comp(w)

    def rep(gid: int) -> int:
        return next(iter_vertices(masks[gid]))

    def slot_rep(gid: int) -> int:
        return source if gid < 0 else rep(gid)

    def interval_mask(u: int, w: int) -> VertexSet:
        if u == w or g.has_edge(u, w):
            return 0
        cu = component_containing(g, closed_neighborhood(g, w), u)
        cw = component_containing(g, closed_neighborhood(g, u), w)
        if cu is None or cw is None:
            return 0
        return cu & cw & ~(1 << u) & ~(1 << w)

    def discount(top_gid: int, context_vertex: int, conquered_vertex: int) -> int:
        """Printed zero rule: top_gid is a chain top of its class and the
        class's other top is not between, adjacent to the context slot, or
        incomparable to either state vertex."""
        c = chains.group_color[top_gid]
        tops = chains.tops_of.get(c, ())
        if top_gid not in tops:
            return 1
        others = [t for t in tops if t != top_gid]
        if not others:
            return 0
        m = rep(others[0])
        between = interval_mask(context_vertex, conquered_vertex)
        if not (between >> m & 1):
            return 0
        if context_vertex != source and g.has_edge(m, context_vertex):
            return 0
        if incomparable(m, context_vertex) or incomparable(m, conquered_vertex):
            return 0
        return 1

    # global within-class order: side-A deep end first, bottoms, side-O deep end
    order_key: dict[int, tuple[int, int]] = {}
    for c in chains.a_chain.keys() | chains.o_chain.keys():
        a = chains.a_chain.get(c, ())
        o = chains.o_chain.get(c, ())
        shared = set(a) & set(o)
        for pos, gid in enumerate(a):
            if gid not in shared:
                order_key[gid] = (0, -pos)
        for pos, gid in enumerate(a):
            if gid in shared:
                order_key[gid] = (1, pos)
        for pos, gid in enumerate(o):
            if gid not in shared:
                order_key[gid] = (2, pos)

    def preds_for(gid: int, chain: tuple[int, ...], toward_max: bool) -> list[int]:
        """Predecessor slot values: per color, the adjacent group nearest
        the stated end of its class order; plus the base if source-adjacent."""
        reach = _adjacency_of(g, masks[gid])
        by_color: dict[int, int] = {}
        for other in chain:
            if other != gid and masks[other] & reach:
                c = chains.group_color[other]
                cur = by_color.get(c)
                if cur is None or (
                    (order_key[other] > order_key[cur])
                    if toward_max
                    else (order_key[other] < order_key[cur])
                ):
                    by_color[c] = other
        out = list(by_color.values())
        if reach >> source & 1:
            out.append(-1)
        return out

    all_o_groups: dict[int, list[int]] = {}
    all_a_groups: dict[int, list[int]] = {}
    for c, chain in chains.a_chain.items():
        for gid in chain:
            all_a_groups.setdefault(c, []).append(gid)
    for c, chain in chains.o_chain.items():
        for gid in chain:
            all_o_groups.setdefault(c, []).append(gid)
    a_members = sorted({gid for lst in all_a_groups.values() for gid in lst})
    o_members = sorted({gid for lst in all_o_groups.values() for gid in lst})
    a_pred_chain = {gid: tuple(a_members) for gid in a_members}
    o_pred_chain = {gid: tuple(o_members) for gid in o_members}

    start = (-1, -1)
    costs: dict[tuple[int, int], int] = {start: 0}
    preds: dict[tuple[int, int], tuple[tuple[int, int], int]] = {}
    heap: list[tuple[int, tuple[int, int]]] = [(0, start)]
    settled: set[tuple[int, int]] = set()

    def relax(state: tuple[int, int], new_state: tuple[int, int], w: int, c: int) -> None:
        nd = costs[state] + w
        if nd < costs.get(new_state, 1 << 30):
            costs[new_state] = nd
            preds[new_state] = (state, c)
            heapq.heappush(heap, (nd, new_state))

    while heap:
        d, state = heapq.heappop(heap)
        if state in settled:
            continue
        settled.add(state)
        xa, xo = state
        for gid in a_members:
            if gid == xa:
                continue
            if xa not in preds_for(gid, a_pred_chain[gid], toward_max=True):
                continue
            if transposed:
                w = discount(gid, slot_rep(xo), rep(gid))
            else:
                w = 1 if xo < 0 else discount(xo, rep(gid), slot_rep(xo))
            relax(state, (gid, xo), w, chains.group_color[gid])
        for gid in o_members:
            if gid == xo:
                continue
            if xo not in preds_for(gid, o_pred_chain[gid], toward_max=False):
                continue
            if transposed:
                w = discount(gid, slot_rep(xa), rep(gid))
            else:
                w = 1 if xa < 0 else discount(xa, rep(gid), slot_rep(xa))
            relax(state, (xa, gid), w, chains.group_color[gid])

    best = None
    for state, d in costs.items():
        xa, xo = state
        if xa < 0 or xo < 0:
            continue
        if (masks[xa] & ctx.ends_alpha) and (masks[xo] & ctx.ends_omega):
            if best is None or d < best[0]:
                best = (d, state)
    if best is None:
        raise SolverInternalError("literal pair search found no end-to-end state")
    dist, target = best
    plan: list[int] = []
    cur = target
    while cur != start:
        prev, c = preds[cur]
        plan.append(c)
        cur = prev
    plan.reverse()
    return dist, plan, PairTable(costs, preds)


def solve_general(
    g: ColoredGraph, source: int, variant: str = DEFAULT_VARIANT
) -> SolveResult:
    """Solve a properly colored, connected instance from any source.

    Dispatches on where the source sits in the widest-pair decomposition:
    inside the interval -> pair program, otherwise extreme-style.
    Raises NotAtFreeError (with witness) on non-AT-free inputs.
    """
    if not is_connected(g):
        raise ValueError("solve_general requires a connected graph")
    witness = find_asteroidal_triple(g)
    if witness is not None:
        raise NotAtFreeError(witness)
    pending = pending_color_count(g, source)
    if pending == 0:
        return _replay_plan(g, source, [], 0, "extreme-path", {"pending_colors": 0})
    ctx = widest_pair(g)
    if ctx is None:
        # complete graph: one call per pending color
        return _replay_plan(g, source, [], pending, "extreme-path",
                            {"pending_colors": pending})
    if not (ctx.interval >> source & 1) and (global_extremes(g) >> source & 1):
        chains = build_chains(g, source, None)
        return solve_extreme(g, source, chains)
    if ctx.interval >> source & 1:
        chains = build_chains(g, source, ctx)
    else:
        # end/separator source that is not a global extreme: the pair
        # program subsumes the single-chain analysis
        try:
            chains = build_chains(g, source, None)
        except ChainOrderError:
            chains = build_chains(g, source, None, two_sided=True)
    if variant == "derived":
        dist, plan, table = _pair_dp_derived(g, source, chains)
    elif variant in ("printed", "transposed"):
        dist, plan, table = _pair_dp_literal(g, source, chains, ctx, variant == "transposed")
    else:
        raise ValueError(f"unknown variant {variant!r}")
    diagnostics = {
        "pending_colors": pending,
        "pair_table": table,
        "plan": list(plan),
        "variant": variant,
    }
    return _replay_plan(g, source, plan, dist + pending, "pair-dp", diagnostics)


def solve(g: ColoredGraph, source: int, variant: str = DEFAULT_VARIANT) -> SolveResult:
    """Contract, check AT-freeness, solve, and map the strategy back.

    Color sequences are unchanged by contraction, so the contracted
    strategy replays on the original graph; this is verified before
    returning.  Raises NotAtFreeError with a witness (original vertex
    ids) when the contracted graph has an asteroidal triple.
    """
    if not is_connected(g):
        raise ValueError("solve requires a connected graph")
    h, cmap, src = contract_monochromatic(g, source)
    witness = find_asteroidal_triple(h)
    if witness is not None:
        originals = tuple(min(cmap.preimage(v)) for v in witness)
        raise NotAtFreeError(AsteroidalTriple(*originals))
    result = solve_general(h, src, variant=variant)
    final, won = simulate(g, source, result.strategy)
    if not won or len(result.strategy) != result.optimum:
        raise SolverInternalError("contracted strategy failed on the original graph")
    return SolveResult(
        optimum=result.optimum,
        strategy=result.strategy,
        method=result.method,
        diagnostics=dict(result.diagnostics, contracted_n=h.n),
    )


def hint(state: GameState, variant: str = DEFAULT_VARIANT) -> tuple[int, int]:
    """Best next color and the optimal remaining move count.

    Re-solves from the current position by recoloring the territory to the
    current color (legal: the territory is connected and monochromatic
    after any move) and contracting.  Falls back to the oracle for
    non-AT-free residuals of oracle size.
    """
    if state.finished:
        raise ValueError("game is finished; no hint available")
    g = state.graph
    recolored = ColoredGraph(
        n=g.n,
        adj=g.adj,
        colors=tuple(
            state.current_color if state.territory >> v & 1 else g.colors[v]
            for v in range(g.n)
        ),
        k=g.k,
    )
    try:
        result = solve(recolored, state.source, variant=variant)
    except NotAtFreeError:
        if g.n > ORACLE_FALLBACK_CAP:
            raise HintUnavailableError(
                f"residual is not AT-free and n={g.n} exceeds the oracle cap"
            ) from None
        orc = oracle_min_moves(recolored, state.source)
        return orc.strategy.colors[0], orc.optimum
    return result.strategy.colors[0], result.optimum


def variant_value(g: ColoredGraph, source: int, variant: str = DEFAULT_VARIANT) -> int:
    """Pair-program value under a recurrence variant, without strategy
    verification.  Calibration aid; sources outside the interval case are
    unaffected by the variant and use the normal solve path."""
    if variant == "derived":
        return solve(g, source).optimum
    if variant not in ("printed", "transposed"):
        raise ValueError(f"unknown variant {variant!r}")
    if not is_connected(g):
        raise ValueError("variant_value requires a connected graph")
    h, cmap, src = contract_monochromatic(g, source)
    witness = find_asteroidal_triple(h)
    if witness is not None:
        raise NotAtFreeError(witness)
    pending = pending_color_count(h, src)
    if pending == 0:
        return 0
    ctx = widest_pair(h)
    if ctx is None or not (ctx.interval >> src & 1):
        return solve(g, source).optimum
    chains = build_chains(h, src, ctx)
    dist, _, _ = _pair_dp_literal(h, src, chains, ctx, variant == "transposed")
    return dist + pending


def essential_length(
    g: ColoredGraph, source: int, colors: tuple[int, ...],
    chains: ChainStructure | None = None,
) -> int:
    """Length minus the number of class-finishing steps.

    A step finishes a class when it conquers the last outstanding chain
    top of the called color.
    """
    if chains is None:
        ctx = widest_pair(g)
        two_sided = ctx is not None and bool(ctx.interval >> source & 1)
        chains = build_chains(g, source, ctx if two_sided else None)
    state = initial_state(g, source)
    finishing = 0
    for c in colors:
        before = state.territory
        state = apply_move(state, c)
        tops = chains.tops_of.get(c, ())
        if not tops:
            continue
        top_mask = 0
        for gid in tops:
            top_mask |= chains.group_masks[gid]
        if (top_mask & ~state.territory) == 0 and (top_mask & ~before) != 0:
            finishing += 1
    return len(colors) - finishing
