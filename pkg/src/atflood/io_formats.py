"""Instance file formats: JSON and ASCII digit grids.

JSON schema (field names are part of the interface):
  vertices: int, colors: [int] of length vertices, edges: [[u, v]] with
  u < v, source: optional int.  Color ids must be dense 0..k-1.

Grid format: newline-separated rows of digit characters 0-9, rectangular;
vertices are row-major with 4-adjacency.  Digits are compacted to dense
color ids in ascending digit order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import ColoredGraph


class ParseError(ValueError):
    """Schema violation with a field-level diagnostic."""


@dataclass(frozen=True)
class InstanceFile:
    vertices: int
    colors: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    source: int | None = None


def _validate_instance(doc: dict) -> InstanceFile:
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    for key in ("vertices", "colors", "edges"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    unknown = set(doc) - {"vertices", "colors", "edges", "source"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    n = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("field 'vertices' must be a positive integer")
    colors = doc["colors"]
    if not isinstance(colors, list) or len(colors) != n:
        raise ParseError(f"field 'colors' must be a list of {n} integers")
    for i, c in enumerate(colors):
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ParseError(f"colors[{i}] must be a non-negative integer")
    k = max(colors) + 1
    missing = sorted(set(range(k)) - set(colors))
    if missing:
        raise ParseError(f"color ids must be dense 0..{k - 1}; missing {missing}")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise ParseError("field 'edges' must be a list of [u, v] pairs")
    seen = set()
    clean = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ParseError(f"edges[{i}] must be a pair of integers")
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edges[{i}]=[{u},{v}] out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"edges[{i}] is a self-loop at {u}")
        if not u < v:
            raise ParseError(f"edges[{i}]=[{u},{v}] must satisfy u < v")
        if (u, v) in seen:
            raise ParseError(f"edges[{i}]=[{u},{v}] is a duplicate")
        seen.add((u, v))
        clean.append((u, v))
    source = doc.get("source")
    if source is not None:
        if not isinstance(source, int) or isinstance(source, bool) or not 0 <= source < n:
            raise ParseError(f"field 'source' must be an integer in 0..{n - 1}")
    return InstanceFile(n, tuple(colors), tuple(clean), source)


def parse_json(data: bytes | str) -> tuple[ColoredGraph, int | None]:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    inst = _validate_instance(doc)
    g = ColoredGraph.from_edges(inst.vertices, inst.edges, inst.colors)
    return g, inst.source


def emit_json(g: ColoredGraph, source: int | None = None) -> bytes:
    doc: dict = {
        "vertices": g.n,
        "colors": list(g.colors),
        "edges": [[u, v] for u, v in g.edges()],
    }
    if source is not None:
        doc["source"] = source
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")


def parse_grid(text: str) -> ColoredGraph:
    rows = [line for line in text.splitlines() if line.strip() != ""]
    if not rows:
        raise ParseError("grid is empty")
    width = len(rows[0])
    for r, line in enumerate(rows):
        if len(line) != width:
            raise ParseError(f"row {r} has length {len(line)}, expected {width}")
        for ch in line:
            if ch not in "0123456789":
                raise ParseError(f"row {r} has non-digit character {ch!r}")
    digits = sorted({ch for line in rows for ch in line})
    color_of = {ch: i for i, ch in enumerate(digits)}
    n = len(rows) * width
    colors = [color_of[rows[v // width][v % width]] for v in range(n)]
    edges = []
    for r in range(len(rows)):
        for c in range(width):
            v = r * width + c
            if c + 1 < width:
                edges.append((v, v + 1))
            if r + 1 < len(rows):
                edges.append((v, v + width))
    return ColoredGraph.from_edges(n, edges, colors)
