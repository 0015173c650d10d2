"""Reproducible instance families for tests, calibration and the service.

Randomness comes from a splitmix64 stream so identical specs generate
identical instances in any implementation or language.  Interval and
permutation graphs are AT-free by construction; the rejection family
filters small random graphs; grids are deliberately NOT AT-free in
general and exist as stress inputs for the oracle and the UI.
"""

from __future__ import annotations

from dataclasses import dataclass

from .atfree import is_atfree
from .graph import ColoredGraph, component_containing, induced_subgraph

_MASK64 = (1 << 64) - 1

FAMILIES = ("interval", "permutation", "rejection", "grid")
REJECTION_CAP = 12


class InfeasibleSpecError(ValueError):
    """The spec cannot be satisfied (e.g. proper coloring needs more colors)."""


class SplitMix64:
    """Tiny portable PRNG: one 64-bit mix per draw."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    family: str
    colors: int
    seed: int
    n: int | None = None
    rows: int | None = None
    cols: int | None = None
    proper: bool = False

    def vertex_count(self) -> int:
        if self.family == "grid":
            if not self.rows or not self.cols:
                raise InfeasibleSpecError("grid family needs rows and cols")
            return self.rows * self.cols
        if not self.n:
            raise InfeasibleSpecError(f"{self.family} family needs n")
        return self.n


def _interval_edges(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    span = 4 * n
    ivals = []
    for _ in range(n):
        a, b = rng.below(span), rng.below(span)
        ivals.append((min(a, b), max(a, b)))
    return [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if ivals[i][0] <= ivals[j][1] and ivals[j][0] <= ivals[i][1]
    ]


def _permutation_edges(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    perm = list(range(n))
    rng.shuffle(perm)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]]


def _rejection_edges(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    if n > REJECTION_CAP:
        raise InfeasibleSpecError(f"rejection family capped at n={REJECTION_CAP}")
    for _ in range(10_000):
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.next_u64() & 1
        ]
        probe = ColoredGraph.from_edges(n, edges, [0] * n)
        if is_atfree(probe):
            return edges
    raise InfeasibleSpecError("rejection sampling failed to find an AT-free graph")


def _grid_edges(rows: int, cols: int) -> list[tuple[int, int]]:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return edges


def _proper_coloring(n: int, edges: list[tuple[int, int]], k: int, rng: SplitMix64) -> list[int]:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    color = [-1] * n
    for v in range(n):
        taken = {color[u] for u in adj[v] if color[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    need = max(color) + 1
    if need > k:
        raise InfeasibleSpecError(f"proper coloring needs {need} colors, spec allows {k}")
    if k > n:
        raise InfeasibleSpecError(f"cannot use {k} colors on {n} vertices")
    # split classes until exactly k are populated, then shuffle labels
    classes = [[v for v in range(n) if color[v] == c] for c in range(need)]
    while len(classes) < k:
        big = max(range(len(classes)), key=lambda i: len(classes[i]))
        if len(classes[big]) < 2:
            raise InfeasibleSpecError(f"cannot populate {k} color classes")
        moved = classes[big].pop()
        classes.append([moved])
    labels = list(range(k))
    rng.shuffle(labels)
    for label, members in zip(labels, classes):
        for v in members:
            color[v] = label
    return color


def _uniform_coloring(n: int, k: int, rng: SplitMix64) -> list[int]:
    if k > n:
        raise InfeasibleSpecError(f"cannot use {k} colors on {n} vertices")
    color = [rng.below(k) for _ in range(n)]
    missing = [c for c in range(k) if c not in set(color)]
    if missing:
        # force every color to appear; overwrite a deterministic spread of slots
        slots = list(range(n))
        rng.shuffle(slots)
        counts = {c: color.count(c) for c in range(k)}
        for c in missing:
            for v in slots:
                if counts[color[v]] > 1:
                    counts[color[v]] -= 1
                    color[v] = c
                    counts[c] = counts.get(c, 0) + 1
                    break
    return color


def generate(spec: GenSpec) -> ColoredGraph:
    if spec.family not in FAMILIES:
        raise InfeasibleSpecError(f"unknown family {spec.family!r}")
    if spec.colors < 1:
        raise InfeasibleSpecError("colors must be >= 1")
    n = spec.vertex_count()
    if n < 1:
        raise InfeasibleSpecError("need at least one vertex")
    rng = SplitMix64(spec.seed)
    if spec.family == "interval":
        edges = _interval_edges(n, rng)
    elif spec.family == "permutation":
        edges = _permutation_edges(n, rng)
    elif spec.family == "rejection":
        edges = _rejection_edges(n, rng)
    else:
        edges = _grid_edges(spec.rows, spec.cols)
    if spec.proper:
        colors = _proper_coloring(n, edges, spec.colors, rng)
    else:
        colors = _uniform_coloring(n, spec.colors, rng)
    return ColoredGraph.from_edges(n, edges, colors)


def connected_instance(spec: GenSpec, source: int = 0) -> tuple[ColoredGraph, int]:
    """Generate and restrict to the component containing ``source``.

    Returns the sliced graph and the source's new id.
    """
    g = generate(spec)
    if not 0 <= source < g.n:
        raise InfeasibleSpecError(f"source {source} out of range for n={g.n}")
    comp = component_containing(g, 0, source)
    if comp == g.all_vertices:
        return g, source
    sub, old_ids = induced_subgraph(g, comp)
    return sub, old_ids.index(source)
