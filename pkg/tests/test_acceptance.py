"""Acceptance suite: one test per release criterion, each printing a
PASS line with its effective sample sizes.  Run with `pytest -s`."""

import json
import threading
import time
import urllib.request

from atflood.atfree import AsteroidalTriple, find_asteroidal_triple, is_atfree
from atflood.contraction import contract_edge, contract_monochromatic
from atflood.decomp import blocks_at, global_extremes, interval, widest_pair
from atflood.engine import apply_move, initial_state, simulate
from atflood.generators import GenSpec, InfeasibleSpecError, SplitMix64, connected_instance
from atflood.graph import (
    ColoredGraph,
    closed_neighborhood,
    component_containing,
    induced_subgraph,
    iter_vertices,
)
from atflood.oracle import oracle_min_moves
from atflood.ordering import build_chains
from atflood.service import make_server
from atflood.solver import DEFAULT_VARIANT, solve, solve_extreme

from conftest import cycle_graph, figure_witness_graph, path_graph, star_graph


def _atfree_instances(count, max_n=13, max_k=5, proper=False, start_seed=0):
    """Seeded interval/permutation instances, contracted to proper form."""
    out = []
    seed = start_seed
    while len(out) < count:
        seed += 1
        family = ("interval", "permutation")[seed % 2]
        n = 8 + seed % 6
        k = 2 + seed % (max_k - 1)
        spec = GenSpec(family=family, n=n, colors=k, seed=seed * 7919, proper=proper)
        try:
            g, src = connected_instance(spec, 0)
        except InfeasibleSpecError:
            continue
        h, _, hsrc = contract_monochromatic(g, src)
        if h.n < 2 or h.n > max_n or h.k > max_k or not is_atfree(h):
            continue
        out.append((g, h, hsrc, seed))
    return out


def test_extreme_source_oracle_equivalence():
    started = time.time()
    instances = _atfree_instances(150)
    checked = 0
    for _, h, _, seed in instances:
        rng = SplitMix64(seed)
        extremes = list(iter_vertices(global_extremes(h)))
        source = extremes[rng.below(len(extremes))]
        res = solve_extreme(h, source)
        want = oracle_min_moves(h, source).optimum
        assert res.optimum == want, (seed, source, res.optimum, want)
        final, won = simulate(h, source, res.strategy)
        assert won and len(res.strategy) == res.optimum
        checked += 1
    elapsed = time.time() - started
    assert checked >= 150 and elapsed < 300
    print(
        f"\n[acceptance] extreme-source oracle equivalence: PASS "
        f"({checked} instances, {elapsed:.1f}s)"
    )


def test_general_source_oracle_equivalence():
    instances = _atfree_instances(150, start_seed=500_000)
    checked = 0
    for g, _, _, seed in instances:
        rng = SplitMix64(seed ^ 0xD1CE)
        source = rng.below(g.n)
        want = oracle_min_moves(g, source).optimum
        res = solve(g, source)
        assert res.optimum == want, (
            f"seed={seed} source={source} got={res.optimum} want={want} "
            f"delta-variant={DEFAULT_VARIANT}"
        )
        final, won = simulate(g, source, res.strategy)
        assert won and len(res.strategy) == res.optimum
        checked += 1
    assert checked >= 150
    print(
        f"\n[acceptance] general-source oracle equivalence: PASS "
        f"({checked} instances, delta-variant={DEFAULT_VARIANT})"
    )


def test_contraction_closure():
    trials = 0
    seed = 0
    while trials < 1000:
        seed += 1
        family = ("interval", "permutation", "rejection")[seed % 3]
        n = 9 if family == "rejection" else 10 + seed % 3
        spec = GenSpec(family=family, n=n, colors=1, seed=seed * 104729)
        g, _ = connected_instance(spec, 0)
        if g.edge_count() == 0:
            continue
        rng = SplitMix64(seed)
        edges = list(g.edges())
        u, v = edges[rng.below(len(edges))]
        h, _ = contract_edge(g, u, v, g.colors[u])
        assert is_atfree(h), (family, seed, u, v)
        trials += 1
    print(f"\n[acceptance] contraction closure: PASS ({trials} trials, 0 failures)")


def test_game_invariance_under_contraction():
    checked = 0
    seed = 0
    while checked < 200:
        seed += 1
        rng = SplitMix64(seed * 65537)
        n = 5 + rng.below(8)  # up to 12 vertices
        k = 2 + rng.below(3)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.next_u64() % 3 == 0
        ]
        colors = [rng.below(k) for _ in range(n)]
        colors = [c - min(colors) for c in colors]
        used = sorted(set(colors))
        remap = {c: i for i, c in enumerate(used)}
        colors = [remap[c] for c in colors]
        g = ColoredGraph.from_edges(n, edges, colors)
        src = rng.below(n)
        comp = component_containing(g, 0, src)
        if comp.bit_count() < 2:
            continue
        if comp != g.all_vertices:
            g, old = induced_subgraph(g, comp)
            src = old.index(src)
        h, _, hsrc = contract_monochromatic(g, src)
        assert oracle_min_moves(g, src).optimum == oracle_min_moves(h, hsrc).optimum, seed
        checked += 1
    print(f"\n[acceptance] game invariance under contraction: PASS ({checked} graphs)")


def test_decomposition_theorems():
    budget = 100_000
    checks = 0
    instances = _atfree_instances(200, start_seed=900_000)
    for _, h, _, _ in instances:
        if checks >= budget:
            break
        for x in range(h.n):
            nx = closed_neighborhood(h, x)
            for y in range(h.n):
                if y == x or nx >> y & 1:
                    continue
                between = interval(h, x, y)
                for z in iter_vertices(between):
                    lhs = between & ~closed_neighborhood(h, z)
                    parts = [interval(h, x, z), interval(h, z, y)]
                    for blk in blocks_at(h, z):
                        if blk & between == blk:
                            parts.append(blk)
                    union = 0
                    for p in parts:
                        assert p & union == 0
                        union |= p
                    assert union == lhs
                    checks += 1
            for blk in blocks_at(h, x):
                for y in iter_vertices(blk):
                    lhs = blk & ~closed_neighborhood(h, y)
                    parts = [interval(h, x, y)]
                    for sub in blocks_at(h, y):
                        if sub & blk == sub:
                            parts.append(sub)
                    union = 0
                    for p in parts:
                        assert p & union == 0
                        union |= p
                    assert union == lhs
                    checks += 1
    print(
        f"\n[acceptance] decomposition theorems 1-2: PASS "
        f"({len(instances)} instances, {checks} partition checks)"
    )


def test_chain_order_soundness():
    violations = 0
    instances = _atfree_instances(100, start_seed=1_500_000)
    plays = 0
    for _, h, _, seed in instances:
        rng = SplitMix64(seed ^ 0xC0FFEE)
        extremes = list(iter_vertices(global_extremes(h)))
        source = extremes[rng.below(len(extremes))]
        chains = build_chains(h, source, None)
        for _ in range(20):
            state = initial_state(h, source)
            for _ in range(60 * h.n):
                if state.finished:
                    break
                before = state.territory
                state = apply_move(state, rng.below(h.k))
                gained = state.territory & ~before
                for v in iter_vertices(gained):
                    chain = chains.a_chain.get(h.colors[v], ())
                    passed_v = False
                    for gid in chain:
                        gmask = chains.group_masks[gid]
                        if gmask >> v & 1:
                            passed_v = True
                        if not passed_v and gmask & ~state.territory:
                            violations += 1
            assert state.finished
            plays += 1
    assert violations == 0
    print(
        f"\n[acceptance] chain order soundness: PASS "
        f"({len(instances)} instances x 20 strategies = {plays} plays, 0 violations)"
    )


def test_known_values():
    c6 = cycle_graph(6)
    assert find_asteroidal_triple(c6) == AsteroidalTriple(0, 2, 4)
    fig = figure_witness_graph()
    assert find_asteroidal_triple(fig) == AsteroidalTriple(0, 3, 4)
    for n in range(2, 14):
        g = path_graph(n)
        assert solve(g, 0).optimum == n - 1 == oracle_min_moves(g, 0).optimum
        for i in range(n):
            assert solve(g, i).optimum == max(i, n - 1 - i)
    for m in (1, 2, 3, 5, 8):
        g = star_graph(list(range(1, m + 1)))
        assert solve(g, 0).optimum == m == oracle_min_moves(g, 0).optimum
    print("\n[acceptance] known-value checks: PASS (C6, witness graph, paths, stars)")


def test_strategy_validity():
    checked = 0
    for g, h, hsrc, seed in _atfree_instances(60, start_seed=2_000_000):
        rng = SplitMix64(seed)
        for source in {rng.below(g.n), 0, g.n - 1}:
            res = solve(g, source)
            final, won = simulate(g, source, res.strategy)
            assert won and len(res.strategy) == res.optimum
            checked += 1
    print(f"\n[acceptance] strategy validity: PASS ({checked} solve results replayed)")


def test_hint_contract_over_http():
    srv = make_server(port=0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    host, port = srv.server_address[:2]

    def call(method, path, body=None):
        req = urllib.request.Request(
            f"http://{host}:{port}{path}",
            method=method,
            data=None if body is None else json.dumps(body).encode(),
            headers={"Content-Type": "application/json"},
        )
        with urllib.request.urlopen(req) as resp:
            payload = resp.read()
            return resp.status, json.loads(payload) if payload else None

    played = 0
    seed = 0
    while played < 50:
        seed += 1
        family = ("interval", "permutation", "grid")[seed % 3]
        gen = {"family": family, "colors": 3, "seed": seed * 31}
        if family == "grid":
            gen.update(rows=3, cols=3)
        else:
            gen.update(n=9 + seed % 4)
        status, snap = call("POST", "/games", {"generate": gen, "source": 0})
        assert status == 201, snap
        if snap["finished"] or snap["optimal_remaining"] is None:
            continue
        remaining = snap["optimal_remaining"]
        while not snap["finished"]:
            status, hinted = call("GET", f"/games/{snap['id']}/hint")
            assert status == 200
            assert hinted["optimal_remaining"] == remaining
            status, snap = call(
                "POST", f"/games/{snap['id']}/moves", {"color": hinted["color"]}
            )
            assert status == 200
            remaining -= 1
            assert snap["optimal_remaining"] == remaining
        assert remaining == 0
        played += 1
    srv.shutdown()
    print(f"\n[acceptance] hint contract over HTTP: PASS ({played} games)")
