"""Conquest precedence and per-color chain structure.

In a properly colored graph, a same-colored pair (y, x) satisfies
``conquest_precedes(y, x)`` when every source-to-x path meets N[y]; then
whenever x enters the territory, y is in the territory by the end of that
move.  On AT-free graphs this relation linearly orders each color class
(one chain for an extreme source, two chains sharing their bottom for a
source inside the widest interval).  Mutually-unordered pairs are
conquered together and collapse into one tie group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

from .decomp import DecompContext
from .graph import (
    ColoredGraph,
    VertexSet,
    closed_neighborhood,
    components_avoiding,
    iter_vertices,
)


class ChainOrderError(Exception):
    """The precedence relation is not a (two-)chain for some color.

    Indicates a non-AT-free input or a structural miscalibration; carries
    the offending color and vertex pair.
    """

    def __init__(self, color: int, detail: str):
        self.color = color
        self.detail = detail
        super().__init__(f"color {color}: {detail}")


def conquest_precedes(g: ColoredGraph, source: int, y: int, x: int) -> bool:
    """True iff conquering x simultaneously conquers y (y 'before' x).

    Computed as: x in N[y], or source in N[y], or x and source lie in
    different components of G - N[y].  Rejects different-colored pairs.
    """
    if g.colors[x] != g.colors[y]:
        raise ValueError(f"vertices {y},{x} have different colors")
    if x == y:
        raise ValueError("vertices must differ")
    ny = closed_neighborhood(g, y)
    if ny >> x & 1 or ny >> source & 1:
        return True
    label = {}
    for i, comp in enumerate(components_avoiding(g, ny)):
        if comp >> x & 1:
            label["x"] = i
        if comp >> source & 1:
            label["s"] = i
    return label.get("x") != label.get("s")


@dataclass
class ChainStructure:
    """Per-color chains of tie groups, bottom to top.

    Groups are vertex masks.  For a two-sided structure a color's class
    splits into a side-A chain and a side-O chain sharing their bottom
    groups; ``tops_of`` holds the 1 or 2 maximal groups, ``max_of`` the
    O-side (or single) top and ``min_of`` the A-side top when two exist.
    """

    graph: ColoredGraph
    source: int
    two_sided: bool
    group_masks: tuple[VertexSet, ...]
    group_color: tuple[int, ...]
    a_chain: dict[int, tuple[int, ...]]
    o_chain: dict[int, tuple[int, ...]]
    tops_of: dict[int, tuple[int, ...]]
    max_of: dict[int, int]
    min_of: dict[int, int]
    below: tuple[VertexSet, ...] = field(repr=False)

    @property
    def maxima_mask(self) -> VertexSet:
        """M: union of the max-group masks over all colors."""
        acc = 0
        for gid in self.max_of.values():
            acc |= self.group_masks[gid]
        return acc

    def group_of(self, v: int) -> int | None:
        for gid, mask in enumerate(self.group_masks):
            if mask >> v & 1:
                return gid
        return None

    def min_adjacent(self, x: int, c: int) -> int | None:
        """Lowest side-A chain group of color c with a member adjacent to x."""
        for gid in self.a_chain.get(c, ()):
            if self.group_masks[gid] & self.graph.adj[x]:
                return gid
        return None

    def max_adjacent(self, x: int, c: int) -> int | None:
        """Highest side-O chain group of color c with a member adjacent to x."""
        best = None
        for gid in self.o_chain.get(c, ()):
            if self.group_masks[gid] & self.graph.adj[x]:
                best = gid
        return best


def _validate_proper(g: ColoredGraph) -> None:
    for u, v in g.edges():
        if g.colors[u] == g.colors[v]:
            raise ValueError(f"graph is not properly colored: edge ({u},{v})")


def _side_labels(
    g: ColoredGraph, source: int, ctx: DecompContext | None
) -> dict[int, str]:
    """Vertex -> side label: 'bottom' (adjacent to source), 'A', 'O', 'stray'.

    Two components of G - N[source] lie on opposite sides whenever some
    color class has an incomparable pair split across them; this parity
    constraint graph is 2-colored, seeded by the decomposition's end sets
    when given.  Components untouched by any constraint stay 'stray' (their
    groups may join either chain).
    """
    comps = components_avoiding(g, closed_neighborhood(g, source))
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in iter_vertices(comp):
            comp_of[v] = ci

    opposite: set[tuple[int, int]] = set()
    for color in range(g.k):
        members = [v for v in iter_vertices(g.color_class(color))
                   if v != source and v in comp_of]
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if comp_of[u] == comp_of[v]:
                    continue
                if not conquest_precedes(g, source, u, v) and not conquest_precedes(
                    g, source, v, u
                ):
                    pair = (comp_of[u], comp_of[v])
                    opposite.add((min(pair), max(pair)))

    hints: dict[int, str] = {}
    if ctx is not None:
        # the end sets may overlap in the middle of a wide graph; only
        # members of exactly one end carry orientation information
        pure_a = ctx.ends_alpha & ~ctx.ends_omega
        pure_o = ctx.ends_omega & ~ctx.ends_alpha
        for ci, comp in enumerate(comps):
            has_a = bool(comp & pure_a)
            has_o = bool(comp & pure_o)
            if has_a and not has_o:
                hints[ci] = "A"
            elif has_o and not has_a:
                hints[ci] = "O"

    # Best-effort global parity: 2-color a spanning tree of the opposition
    # graph (contradictory back edges are tolerated; class-level coloring
    # is the real authority), then orient blocks by their hinted members.
    neighbors: dict[int, set[int]] = {}
    for a, b in opposite:
        neighbors.setdefault(a, set()).add(b)
        neighbors.setdefault(b, set()).add(a)
    parity: dict[int, str] = {}
    seen_block: set[int] = set()
    for start in sorted(neighbors):
        if start in seen_block:
            continue
        block = {start}
        queue = [start]
        color2 = {start: 0}
        while queue:
            a = queue.pop(0)
            for b in sorted(neighbors[a]):
                if b not in block:
                    block.add(b)
                    color2[b] = color2[a] ^ 1
                    queue.append(b)
        seen_block |= block
        anchor = next((ci for ci in sorted(block) if ci in hints), min(block))
        want = hints.get(anchor, "A")
        flip = (want == "O") != (color2[anchor] == 1)
        for ci in block:
            bit = color2[ci] ^ (1 if flip else 0)
            parity[ci] = "A" if bit == 0 else "O"
    for ci, hint in hints.items():
        if ci not in parity:
            parity[ci] = hint

    labels: dict[int, str] = {}
    for v in iter_vertices(g.adj[source]):
        labels[v] = "bottom"
    for ci, comp in enumerate(comps):
        side = parity.get(ci, "stray")
        for v in iter_vertices(comp):
            labels[v] = side
    return labels


def build_chains(
    g: ColoredGraph,
    source: int,
    ctx: DecompContext | None = None,
    two_sided: bool | None = None,
) -> ChainStructure:
    """Build the per-color chain structure for a properly colored graph.

    Two-sided (default when ``ctx`` is given) splits classes into two side
    chains; one-sided requires every class to form a single chain.
    ``two_sided=True`` without a context derives the sides purely from the
    incomparability structure.  Raises ChainOrderError naming the offending
    pair when the relation is not total per side.
    """
    _validate_proper(g)
    if two_sided is None:
        two_sided = ctx is not None
    side_label = _side_labels(g, source, ctx) if two_sided else None

    group_masks: list[VertexSet] = []
    group_color: list[int] = []
    a_chain: dict[int, tuple[int, ...]] = {}
    o_chain: dict[int, tuple[int, ...]] = {}
    tops_of: dict[int, tuple[int, ...]] = {}
    max_of: dict[int, int] = {}
    min_of: dict[int, int] = {}

    for color in range(g.k):
        members = [
            v
            for v in iter_vertices(g.color_class(color))
            if v != source
        ]
        if not members:
            continue
        idx = {v: i for i, v in enumerate(members)}
        m = len(members)

        # precedence matrix via per-member component labeling
        prec = [[False] * m for _ in range(m)]
        for i, y in enumerate(members):
            ny = closed_neighborhood(g, y)
            comp_id = [-1] * g.n
            for ci, comp in enumerate(components_avoiding(g, ny)):
                for v in iter_vertices(comp):
                    comp_id[v] = ci
            for j, x in enumerate(members):
                if i == j:
                    continue
                if ny >> x & 1 or ny >> source & 1:
                    prec[i][j] = True
                else:
                    prec[i][j] = comp_id[x] != comp_id[source]

        # tie groups: mutual precedence, transitively closed
        parent = list(range(m))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(m):
            for j in range(i + 1, m):
                if prec[i][j] and prec[j][i]:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[max(ri, rj)] = min(ri, rj)

        roots = sorted({find(i) for i in range(m)})
        local_groups = [
            [members[i] for i in range(m) if find(i) == r] for r in roots
        ]
        gcount = len(local_groups)
        member_group = {v: gi for gi, grp in enumerate(local_groups) for v in grp}

        le = [[False] * gcount for _ in range(gcount)]
        for i in range(m):
            for j in range(m):
                if prec[i][j]:
                    le[member_group[members[i]]][member_group[members[j]]] = True
        for a in range(gcount):
            le[a][a] = True
            for b in range(a + 1, gcount):
                if le[a][b] and le[b][a]:
                    raise ChainOrderError(
                        color,
                        f"groups {local_groups[a]} and {local_groups[b]} order both ways",
                    )

        def chain_sort(gids: list[int]) -> list[int]:
            for a in gids:
                for b in gids:
                    if a != b and not le[a][b] and not le[b][a]:
                        raise ChainOrderError(
                            color,
                            f"incomparable pair {local_groups[a][0]},{local_groups[b][0]} "
                            "inside one chain",
                        )
            return sorted(gids, key=cmp_to_key(lambda a, b: -1 if le[a][b] else 1))

        if not two_sided:
            ordered = chain_sort(list(range(gcount)))
            gids = _register(group_masks, group_color, local_groups, ordered, color)
            a_chain[color] = gids
            o_chain[color] = gids
            tops_of[color] = (gids[-1],)
            max_of[color] = gids[-1]
            continue

        # two-sided: anchor groups by their members' side labels; a tie
        # group may legitimately span both sides (conquered as one unit)
        # and is then unanchored, like bottoms and strays
        anchors: list[str | None] = []
        for grp in local_groups:
            kinds = {side_label[v] for v in grp}
            if "A" in kinds and "O" in kinds:
                anchors.append(None)
            else:
                anchors.append("A" if "A" in kinds else ("O" if "O" in kinds else None))

        incomp = {
            (a, b)
            for a in range(gcount)
            for b in range(gcount)
            if a != b and not le[a][b] and not le[b][a]
        }
        shared = [a for a in range(gcount) if not any((a, b) in incomp for b in range(gcount))]
        contested = [a for a in range(gcount) if a not in shared]

        def assign_sides(use_anchors: bool) -> dict[int, str] | None:
            """2-color the incomparability graph on contested groups.

            Returns None when the anchors contradict the coloring (the
            caller retries unanchored); raises when the graph itself is
            not two-chain shaped.
            """
            side: dict[int, str] = {}
            for start in contested:
                if start in side:
                    continue
                part = [start]
                queue = [start]
                seen_part = {start}
                while queue:
                    a = queue.pop(0)
                    for b in contested:
                        if b not in seen_part and ((a, b) in incomp or (b, a) in incomp):
                            seen_part.add(b)
                            part.append(b)
                            queue.append(b)
                if use_anchors:
                    seed = next(
                        (a for a in sorted(part) if anchors[a] is not None), min(part)
                    )
                    side[seed] = anchors[seed] or "A"
                else:
                    seed = min(part)
                    side[seed] = "A"
                frontier = [seed]
                while frontier:
                    nxt = []
                    for a in frontier:
                        for b in part:
                            if b in side:
                                continue
                            if (a, b) in incomp or (b, a) in incomp:
                                side[b] = "O" if side[a] == "A" else "A"
                                nxt.append(b)
                    frontier = nxt
                for a in part:
                    if a not in side:
                        side[a] = (anchors[a] if use_anchors else None) or "A"
            for a, b in incomp:
                if side[a] == side[b]:
                    raise ChainOrderError(
                        color,
                        f"groups {local_groups[a]} and {local_groups[b]} incomparable "
                        "on one side",
                    )
            if use_anchors:
                for a in contested:
                    if anchors[a] is not None and side[a] != anchors[a]:
                        return None
            return side

        side_of = assign_sides(True)
        if side_of is None:
            side_of = assign_sides(False)
            assert side_of is not None

        a_local = chain_sort(shared + [a for a in contested if side_of[a] == "A"])
        o_local = chain_sort(shared + [a for a in contested if side_of[a] == "O"])

        order = a_local + [a for a in o_local if a not in a_local]
        gids = _register(group_masks, group_color, local_groups, order, color)
        gid_of = dict(zip(order, gids))
        a_ids = tuple(gid_of[a] for a in a_local)
        o_ids = tuple(gid_of[a] for a in o_local)
        a_chain[color] = a_ids
        o_chain[color] = o_ids
        a_top, o_top = a_ids[-1], o_ids[-1]
        if a_top == o_top:
            tops_of[color] = (a_top,)
            max_of[color] = a_top
        else:
            tops_of[color] = (a_top, o_top)
            min_of[color] = a_top
            max_of[color] = o_top

    below = _below_masks(group_masks, a_chain, o_chain)
    return ChainStructure(
        graph=g,
        source=source,
        two_sided=two_sided,
        group_masks=tuple(group_masks),
        group_color=tuple(group_color),
        a_chain=a_chain,
        o_chain=o_chain,
        tops_of=tops_of,
        max_of=max_of,
        min_of=min_of,
        below=below,
    )


def _register(
    group_masks: list[VertexSet],
    group_color: list[int],
    local_groups: list[list[int]],
    order: list[int],
    color: int,
) -> tuple[int, ...]:
    gids = []
    for a in order:
        mask = 0
        for v in local_groups[a]:
            mask |= 1 << v
        group_masks.append(mask)
        group_color.append(color)
        gids.append(len(group_masks) - 1)
    return tuple(gids)


def _below_masks(
    group_masks: list[VertexSet],
    a_chain: dict[int, tuple[int, ...]],
    o_chain: dict[int, tuple[int, ...]],
) -> tuple[VertexSet, ...]:
    below = [0] * len(group_masks)
    for chain in list(a_chain.values()) + list(o_chain.values()):
        acc = 0
        for gid in chain:
            below[gid] |= acc
            acc |= group_masks[gid]
    return tuple(below)
