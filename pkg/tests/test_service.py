import json
import threading
import urllib.error
import urllib.request

import pytest

from atflood.engine import apply_move, initial_state
from atflood.graph import ColoredGraph, mask_of
from atflood.service import make_server


@pytest.fixture()
def server():
    srv = make_server(port=0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    yield srv
    srv.shutdown()


def _call(srv, method, path, body=None):
    host, port = srv.server_address[:2]
    req = urllib.request.Request(
        f"http://{host}:{port}{path}",
        method=method,
        data=None if body is None else json.dumps(body).encode(),
        headers={"Content-Type": "application/json"},
    )
    try:
        with urllib.request.urlopen(req) as resp:
            payload = resp.read()
            return resp.status, json.loads(payload) if payload else None
    except urllib.error.HTTPError as err:
        payload = err.read()
        return err.code, json.loads(payload) if payload else None


P5 = {
    "vertices": 5,
    "colors": [0, 1, 0, 1, 0],
    "edges": [[0, 1], [1, 2], [2, 3], [3, 4]],
}


def test_create_graph_game(server):
    status, snap = _call(server, "POST", "/games", {"graph": P5, "source": 0})
    assert status == 201
    assert set(snap) == {
        "id",
        "vertices",
        "colors",
        "edges",
        "territory",
        "current_color",
        "moves",
        "finished",
        "optimal_remaining",
    }
    assert snap["territory"] == [0]
    assert snap["current_color"] == 0
    assert snap["moves"] == []
    assert snap["finished"] is False
    assert snap["optimal_remaining"] == 4


def test_create_generated_game(server):
    status, snap = _call(
        server,
        "POST",
        "/games",
        {"generate": {"family": "interval", "n": 10, "colors": 3, "seed": 4}},
    )
    assert status == 201
    assert len(snap["territory"]) >= 1
    assert snap["optimal_remaining"] is not None


def test_single_vertex_game_finished(server):
    status, snap = _call(
        server, "POST", "/games", {"graph": {"vertices": 1, "colors": [0], "edges": []}}
    )
    assert status == 201
    assert snap["finished"] is True
    assert snap["optimal_remaining"] == 0


def test_malformed_body(server):
    status, body = _call(server, "POST", "/games", {"nope": 1})
    assert status == 400
    status, _ = _call(server, "POST", "/games", {"graph": {"vertices": 0}})
    assert status == 400


def test_infeasible_genspec(server):
    status, _ = _call(
        server,
        "POST",
        "/games",
        {"generate": {"family": "rejection", "n": 30, "colors": 2, "seed": 1}},
    )
    assert status == 422


def test_unknown_game(server):
    status, _ = _call(server, "GET", "/games/" + "0" * 16)
    assert status == 404


def test_move_play_and_idle(server):
    _, snap = _call(server, "POST", "/games", {"graph": P5, "source": 0})
    gid = snap["id"]
    status, _ = _call(server, "POST", f"/games/{gid}/moves", {"color": 0})
    assert status == 409  # idle move rejected at the API edge
    status, snap2 = _call(server, "POST", f"/games/{gid}/moves", {"color": 1})
    assert status == 200
    assert snap2["territory"] == [0, 1]
    assert snap2["moves"] == [1]
    status, _ = _call(server, "POST", f"/games/{gid}/moves", {"color": 9})
    assert status == 400


def test_hint_walkthrough(server):
    _, snap = _call(server, "POST", "/games", {"graph": P5, "source": 0})
    gid = snap["id"]
    remaining = snap["optimal_remaining"]
    while not snap["finished"]:
        status, h = _call(server, "GET", f"/games/{gid}/hint")
        assert status == 200
        assert h["optimal_remaining"] == remaining
        status, snap = _call(server, "POST", f"/games/{gid}/moves", {"color": h["color"]})
        assert status == 200
        remaining -= 1
    assert remaining == 0
    assert snap["optimal_remaining"] == 0
    status, _ = _call(server, "GET", f"/games/{gid}/hint")
    assert status == 409
    status, _ = _call(server, "POST", f"/games/{gid}/moves", {"color": 0})
    assert status == 409


def test_snapshot_replay(server):
    _, snap = _call(server, "POST", "/games", {"graph": P5, "source": 2})
    gid = snap["id"]
    _call(server, "POST", f"/games/{gid}/moves", {"color": 1})
    _, snap = _call(server, "GET", f"/games/{gid}")
    g = ColoredGraph.from_edges(
        snap["vertices"], [tuple(e) for e in snap["edges"]], snap["colors"]
    )
    state = initial_state(g, 2)
    for color in snap["moves"]:
        state = apply_move(state, color)
    assert state.territory == mask_of(snap["territory"])


def test_delete(server):
    _, snap = _call(server, "POST", "/games", {"graph": P5})
    gid = snap["id"]
    status, _ = _call(server, "DELETE", f"/games/{gid}")
    assert status == 204
    status, _ = _call(server, "GET", f"/games/{gid}")
    assert status == 404


def test_state_file_recovery(tmp_path):
    state_file = str(tmp_path / "sessions.json")
    srv = make_server(port=0, state_file=state_file)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    _, snap = _call(srv, "POST", "/games", {"graph": P5, "source": 0})
    gid = snap["id"]
    _call(srv, "POST", f"/games/{gid}/moves", {"color": 1})
    srv.shutdown()

    srv2 = make_server(port=0, state_file=state_file)
    thread2 = threading.Thread(target=srv2.serve_forever, daemon=True)
    thread2.start()
    status, snap2 = _call(srv2, "GET", f"/games/{gid}")
    assert status == 200
    assert snap2["territory"] == [0, 1]
    assert snap2["moves"] == [1]
    srv2.shutdown()
