"""Session-keeping HTTP/JSON game server.

Routes: POST /games, GET /games/{id}, POST /games/{id}/moves with body
{"color": int}, GET /games/{id}/hint, DELETE /games/{id}.  Snapshots carry
{id, vertices, colors, edges, territory, current_color, moves, finished,
optimal_remaining}; optimal_remaining is null when the instance is neither
AT-free nor oracle-sized.  Sessions live in memory; an optional JSON state
file is written atomically on every mutation and reloaded on start.
"""

from __future__ import annotations

import json
import os
import re
import secrets
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .atfree import is_atfree
from .contraction import contract_monochromatic
from .engine import GameState, apply_move, initial_state
from .generators import GenSpec, InfeasibleSpecError, connected_instance
from .graph import ColoredGraph, component_containing, induced_subgraph, iter_vertices
from .io_formats import ParseError, _validate_instance
from .solver import ORACLE_FALLBACK_CAP, HintUnavailableError, hint

GAME_PATH = re.compile(r"^/games/([0-9a-f]{16})$")
MOVES_PATH = re.compile(r"^/games/([0-9a-f]{16})/moves$")
HINT_PATH = re.compile(r"^/games/([0-9a-f]{16})/hint$")


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message
        super().__init__(message)


@dataclass
class GameSession:
    id: str
    state: GameState
    mode: str | None = None  # "poly" | "oracle" | None (hints unavailable)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    cached_remaining: tuple[int, int | None] | None = None  # (move_count, value)

    def __post_init__(self) -> None:
        if self.mode is None:
            g = self.state.graph
            contracted, _, _ = contract_monochromatic(g, self.state.source)
            if is_atfree(contracted):
                self.mode = "poly"
            elif g.n <= ORACLE_FALLBACK_CAP:
                self.mode = "oracle"

    def optimal_remaining(self) -> int | None:
        if self.state.finished:
            return 0
        if self.mode is None:
            return None
        count = len(self.state.moves)
        if self.cached_remaining and self.cached_remaining[0] == count:
            return self.cached_remaining[1]
        try:
            _, remaining = hint(self.state)
        except HintUnavailableError:
            remaining = None
        self.cached_remaining = (count, remaining)
        return remaining

    def snapshot(self) -> dict:
        g = self.state.graph
        return {
            "id": self.id,
            "vertices": g.n,
            "colors": list(g.colors),
            "edges": [[u, v] for u, v in g.edges()],
            "territory": sorted(iter_vertices(self.state.territory)),
            "current_color": self.state.current_color,
            "moves": list(self.state.moves),
            "finished": self.state.finished,
            "optimal_remaining": self.optimal_remaining(),
        }


class SessionStore:
    def __init__(self, state_file: str | None = None):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()
        self._state_file = state_file
        if state_file and os.path.exists(state_file):
            self._load(state_file)

    def _load(self, path: str) -> None:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        for entry in doc.get("sessions", []):
            g = ColoredGraph.from_edges(
                entry["vertices"],
                [tuple(e) for e in entry["edges"]],
                entry["colors"],
            )
            state = initial_state(g, entry["source"])
            for color in entry["moves"]:
                state = apply_move(state, color)
            self._sessions[entry["id"]] = GameSession(id=entry["id"], state=state)

    def _persist(self) -> None:
        if not self._state_file:
            return
        doc = {
            "sessions": [
                {
                    "id": s.id,
                    "vertices": s.state.graph.n,
                    "colors": list(s.state.graph.colors),
                    "edges": [[u, v] for u, v in s.state.graph.edges()],
                    "source": s.state.source,
                    "moves": list(s.state.moves),
                }
                for s in self._sessions.values()
            ]
        }
        tmp = f"{self._state_file}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        os.replace(tmp, self._state_file)

    def create(self, state: GameState) -> GameSession:
        session = GameSession(id=secrets.token_hex(8), state=state)
        with self._lock:
            self._sessions[session.id] = session
            self._persist()
        return session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, f"unknown game {session_id}")
        return session

    def delete(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise ApiError(404, f"unknown game {session_id}")
            del self._sessions[session_id]
            self._persist()

    def mutated(self) -> None:
        with self._lock:
            self._persist()


def _instance_from_body(body: dict) -> tuple[ColoredGraph, int]:
    if not isinstance(body, dict):
        raise ApiError(400, "request body must be a JSON object")
    has_graph = "graph" in body
    has_gen = "generate" in body
    if has_graph == has_gen:
        raise ApiError(400, "provide exactly one of 'graph' or 'generate'")
    source = body.get("source", 0)
    if not isinstance(source, int) or isinstance(source, bool) or source < 0:
        raise ApiError(400, "'source' must be a non-negative integer")
    if has_graph:
        try:
            inst = _validate_instance(body["graph"])
        except ParseError as exc:
            raise ApiError(400, f"bad graph: {exc}") from exc
        g = ColoredGraph.from_edges(inst.vertices, inst.edges, inst.colors)
        if inst.source is not None and "source" not in body:
            source = inst.source
        if source >= g.n:
            raise ApiError(400, f"source {source} out of range")
        comp = component_containing(g, 0, source)
        if comp != g.all_vertices:
            sub, old_ids = induced_subgraph(g, comp)
            g, source = sub, old_ids.index(source)
        return g, source
    gen = body["generate"]
    if not isinstance(gen, dict):
        raise ApiError(400, "'generate' must be an object")
    allowed = {"family", "n", "rows", "cols", "colors", "seed", "proper"}
    unknown = set(gen) - allowed
    if unknown:
        raise ApiError(400, f"unknown generate fields {sorted(unknown)}")
    try:
        spec = GenSpec(
            family=gen.get("family", ""),
            n=gen.get("n"),
            rows=gen.get("rows"),
            cols=gen.get("cols"),
            colors=gen.get("colors", 0),
            seed=gen.get("seed", 0),
            proper=bool(gen.get("proper", False)),
        )
    except TypeError as exc:
        raise ApiError(400, f"bad generate spec: {exc}") from exc
    try:
        g, source = connected_instance(spec, source)
    except InfeasibleSpecError as exc:
        raise ApiError(422, f"infeasible spec: {exc}") from exc
    return g, source


class GameHandler(BaseHTTPRequestHandler):
    store: SessionStore  # assigned by make_server

    def log_message(self, fmt: str, *args) -> None:  # quiet by default
        pass

    def _send(self, status: int, payload: dict | None = None) -> None:
        body = b"" if payload is None else json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        if body:
            self.wfile.write(body)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise ApiError(400, "empty request body")
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ApiError(400, f"invalid JSON body: {exc}") from exc

    def do_OPTIONS(self) -> None:  # CORS preflight
        self._send(204)

    def do_POST(self) -> None:
        try:
            if self.path == "/games":
                g, source = _instance_from_body(self._body())
                session = self.store.create(initial_state(g, source))
                self._send(201, session.snapshot())
                return
            m = MOVES_PATH.match(self.path)
            if m:
                session = self.store.get(m.group(1))
                body = self._body()
                color = body.get("color")
                if not isinstance(color, int) or isinstance(color, bool):
                    raise ApiError(400, "'color' must be an integer")
                with session.lock:
                    g = session.state.graph
                    if not 0 <= color < g.k:
                        raise ApiError(400, f"color {color} outside 0..{g.k - 1}")
                    if session.state.finished:
                        raise ApiError(409, "game is finished")
                    if color == session.state.current_color:
                        raise ApiError(409, "idle move: color equals current color")
                    session.state = apply_move(session.state, color)
                self.store.mutated()
                self._send(200, session.snapshot())
                return
            raise ApiError(404, f"no route for POST {self.path}")
        except ApiError as exc:
            self._send(exc.status, {"error": exc.message})

    def do_GET(self) -> None:
        try:
            m = GAME_PATH.match(self.path)
            if m:
                session = self.store.get(m.group(1))
                self._send(200, session.snapshot())
                return
            m = HINT_PATH.match(self.path)
            if m:
                session = self.store.get(m.group(1))
                with session.lock:
                    if session.state.finished:
                        raise ApiError(409, "game is finished")
                    try:
                        color, remaining = hint(session.state)
                    except HintUnavailableError as exc:
                        raise ApiError(422, str(exc)) from exc
                self._send(200, {"color": color, "optimal_remaining": remaining})
                return
            raise ApiError(404, f"no route for GET {self.path}")
        except ApiError as exc:
            self._send(exc.status, {"error": exc.message})

    def do_DELETE(self) -> None:
        try:
            m = GAME_PATH.match(self.path)
            if m:
                self.store.delete(m.group(1))
                self._send(204)
                return
            raise ApiError(404, f"no route for DELETE {self.path}")
        except ApiError as exc:
            self._send(exc.status, {"error": exc.message})


def make_server(port: int = 0, state_file: str | None = None) -> ThreadingHTTPServer:
    handler = type("BoundHandler", (GameHandler,), {"store": SessionStore(state_file)})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def run_server(port: int = 8000, state_file: str | None = None) -> None:
    server = make_server(port, state_file)
    host, actual_port = server.server_address[:2]
    print(f"atflood service listening on http://{host}:{actual_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
