"""Game sessions and the HTTP JSON API behind the play UI.

Sessions are in-memory only: any position is a fresh game, so there is
nothing worth persisting across restarts.  The engine replies to every
human move inside the same request: the optimal move when one exists,
otherwise a deterministic fallback (one token off the larger pile, ties
toward pile 1) that prolongs a lost game in a documented way.

Endpoints (all bodies UTF-8 JSON):

    POST /session                  {m, x, y, human_first} -> {session_id, position, status}
    GET  /session/{id}             -> full session state
    POST /session/{id}/move        {kind, k1, k2} -> {engine_reply, position, status, classification}
    GET  /classify?m=&x=&y=        -> {label, winning_move|null}
    GET  /ppositions?m=            -> {count, positions[]}

Errors: 400 malformed body or query, 404 unknown session or path,
422 illegal move.  Distinct sessions proceed independently; access to
a single session is serialized by a per-session lock.
"""

from __future__ import annotations

import json
import re
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any
from urllib.parse import parse_qs, urlparse

from .modular import Move, MoveKind, classify, is_legal, winning_move
from .wythoff import Position

STATUS_ONGOING = "ongoing"
STATUS_HUMAN_LOST = "human_lost"
STATUS_ENGINE_LOST = "engine_lost"

_KIND_BY_WIRE = {k.value: k for k in MoveKind}


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


def move_to_wire(move: Move | None) -> dict | None:
    if move is None:
        return None
    return {"kind": move.kind.value, "k1": move.k1, "k2": move.k2}


def move_from_wire(body: Any) -> Move:
    """Parse an untrusted wire move; 400 on structural problems.

    Legality (amount bounds, congruence) is judged later against the
    position, yielding 422, so the client can distinguish "you can't do
    that here" from "that is not a move at all".
    """
    if not isinstance(body, dict):
        raise ApiError(400, "move body must be a JSON object")
    kind = body.get("kind")
    if kind not in _KIND_BY_WIRE:
        raise ApiError(400, f"unknown move kind: {kind!r}")
    k1, k2 = body.get("k1"), body.get("k2")
    if not isinstance(k1, int) or not isinstance(k2, int) or isinstance(k1, bool) or isinstance(k2, bool):
        raise ApiError(400, "k1 and k2 must be integers")
    if k1 < 0 or k2 < 0:
        raise ApiError(400, "k1 and k2 must be nonnegative")
    return Move(_KIND_BY_WIRE[kind], k1, k2)


def engine_reply(pos: Position, m: int) -> Move | None:
    """The engine's deterministic reply; None only at the terminal position.

    Optimal when the position is N.  From a P-position (every reply
    loses against perfect play) it removes one token from the larger
    pile, ties toward pile 1.
    """
    x, y = pos
    if x == 0 and y == 0:
        return None
    mv = winning_move(pos, m)
    if mv is not None:
        return mv
    if x >= y and x > 0:
        return Move(MoveKind.TYPE1_PILE1, 1, 0)
    return Move(MoveKind.TYPE1_PILE2, 0, 1)


@dataclass
class Session:
    """One human-vs-engine game.

    History records every move with the position it produced; replaying
    it from the initial position reproduces `position`.
    """

    session_id: str
    m: int
    position: Position
    to_move: str  # "human" | "engine"
    status: str = STATUS_ONGOING
    history: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def to_wire(self) -> dict:
        return {
            "session_id": self.session_id,
            "m": self.m,
            "position": list(self.position),
            "to_move": self.to_move,
            "status": self.status,
            "history": [dict(step) for step in self.history],
        }

    def _record(self, by: str, move: Move) -> None:
        self.position = move.apply(self.position)
        self.history.append(
            {"by": by, "move": move_to_wire(move), "position": list(self.position)}
        )

    def _engine_turn(self) -> Move | None:
        """Engine moves if the game is still on; updates status."""
        reply = engine_reply(self.position, self.m)
        if reply is None:
            self.status = STATUS_ENGINE_LOST  # engine faces (0, 0)
            return None
        self._record("engine", reply)
        self.to_move = "human"
        if self.position == (0, 0):
            self.status = STATUS_HUMAN_LOST
        return reply

    def play_human_move(self, move: Move) -> dict:
        with self.lock:
            if self.status != STATUS_ONGOING:
                raise ApiError(422, f"game is over ({self.status})")
            if self.to_move != "human":
                raise ApiError(422, "not the human's turn")
            if not is_legal(self.position, move, self.m):
                raise ApiError(422, illegal_reason(self.position, move, self.m))
            self._record("human", move)
            self.to_move = "engine"
            reply = self._engine_turn()
            return {
                "engine_reply": move_to_wire(reply),
                "position": list(self.position),
                "status": self.status,
                "classification": classify(self.position, self.m),
            }


def illegal_reason(pos: Position, move: Move, m: int) -> str:
    """Name the violated rule for a move rejected by `is_legal`."""
    x, y = pos
    k1, k2 = move.k1, move.k2
    if move.kind is MoveKind.TYPE1_PILE1:
        if k1 < 1:
            return "illegal move: zero removal"
        if k2 != 0:
            return "illegal move: a Type I move touches a single pile"
        return "illegal move: exceeds pile"
    if move.kind is MoveKind.TYPE1_PILE2:
        if k2 < 1:
            return "illegal move: zero removal"
        if k1 != 0:
            return "illegal move: a Type I move touches a single pile"
        return "illegal move: exceeds pile"
    if k1 < 1 or k2 < 1:
        return "illegal move: zero removal"
    if (k1 - k2) % m != 0:
        return f"illegal move: congruence failure (amounts differ mod {m})"
    if k1 > x or k2 > y:
        return "illegal move: exceeds pile"
    return "illegal move"


class SessionStore:
    """Thread-safe id -> Session map."""

    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, m: int, x: int, y: int, human_first: bool) -> Session:
        session = Session(
            session_id=uuid.uuid4().hex,
            m=m,
            position=(x, y),
            to_move="human" if human_first else "engine",
        )
        if not human_first:
            with session.lock:
                session._engine_turn()
        with self._lock:
            self._sessions[session.session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, f"unknown session: {session_id}")
        return session


def _require_int(params: dict, key: str, minimum: int = 0) -> int:
    raw = params.get(key)
    if raw is None:
        raise ApiError(400, f"missing parameter: {key}")
    if isinstance(raw, list):  # query-string values arrive as lists
        raw = raw[0]
    if isinstance(raw, bool) or (not isinstance(raw, int) and not isinstance(raw, str)):
        raise ApiError(400, f"parameter {key} must be an integer")
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise ApiError(400, f"parameter {key} must be an integer") from None
    if value < minimum:
        raise ApiError(400, f"parameter {key} must be >= {minimum}")
    return value


_SESSION_MOVE_RE = re.compile(r"^/session/([0-9a-f]+)/move$")
_SESSION_RE = re.compile(r"^/session/([0-9a-f]+)$")

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
}


class ApiHandler(BaseHTTPRequestHandler):
    """Routes the JSON API; optionally serves the built web client."""

    store: SessionStore  # injected via make_server
    static_dir: Path | None = None
    quiet = True

    protocol_version = "HTTP/1.1"

    # -- plumbing ---------------------------------------------------------

    def log_message(self, fmt: str, *args: Any) -> None:
        if not self.quiet:
            super().log_message(fmt, *args)

    def _send(self, status: int, payload: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)

    def _send_json(self, status: int, obj: Any) -> None:
        self._send(status, json.dumps(obj).encode("utf-8"), "application/json")

    def _read_json_body(self) -> Any:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise ApiError(400, "empty request body")
        try:
            return json.loads(raw)
        except json.JSONDecodeError:
            raise ApiError(400, "request body is not valid JSON") from None

    def do_OPTIONS(self) -> None:  # CORS preflight
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    # -- routes -----------------------------------------------------------

    def do_GET(self) -> None:
        url = urlparse(self.path)
        try:
            if url.path == "/classify":
                self._send_json(200, self._classify(parse_qs(url.query)))
            elif url.path == "/ppositions":
                self._send_json(200, self._ppositions(parse_qs(url.query)))
            else:
                match = _SESSION_RE.match(url.path)
                if match:
                    self._send_json(200, self.store.get(match.group(1)).to_wire())
                elif not self._serve_static(url.path):
                    raise ApiError(404, f"no such path: {url.path}")
        except ApiError as e:
            self._send_json(e.status, {"error": e.message})
        except ValueError as e:  # domain errors (e.g. beyond the input cap)
            self._send_json(400, {"error": str(e)})

    def do_POST(self) -> None:
        url = urlparse(self.path)
        try:
            body = self._read_json_body()
            if url.path == "/session":
                self._send_json(200, self._create_session(body))
            else:
                match = _SESSION_MOVE_RE.match(url.path)
                if not match:
                    raise ApiError(404, f"no such path: {url.path}")
                session = self.store.get(match.group(1))
                self._send_json(200, session.play_human_move(move_from_wire(body)))
        except ApiError as e:
            self._send_json(e.status, {"error": e.message})
        except ValueError as e:
            self._send_json(400, {"error": str(e)})

    # -- handlers ---------------------------------------------------------

    def _create_session(self, body: Any) -> dict:
        if not isinstance(body, dict):
            raise ApiError(400, "session body must be a JSON object")
        m = _require_int(body, "m", minimum=1)
        x = _require_int(body, "x")
        y = _require_int(body, "y")
        human_first = body.get("human_first", True)
        if not isinstance(human_first, bool):
            raise ApiError(400, "human_first must be a boolean")
        session = self.store.create(m, x, y, human_first)
        return {
            "session_id": session.session_id,
            "position": list(session.position),
            "status": session.status,
        }

    def _classify(self, params: dict) -> dict:
        m = _require_int(params, "m", minimum=1)
        x = _require_int(params, "x")
        y = _require_int(params, "y")
        return {
            "label": classify((x, y), m),
            "winning_move": move_to_wire(winning_move((x, y), m)),
        }

    def _ppositions(self, params: dict) -> dict:
        from .modular import modular_p_set

        m = _require_int(params, "m", minimum=1)
        positions = sorted(modular_p_set(m).positions())
        return {"count": len(positions), "positions": [list(p) for p in positions]}

    def _serve_static(self, path: str) -> bool:
        if self.static_dir is None:
            return False
        name = "index.html" if path == "/" else path.lstrip("/")
        target = (self.static_dir / name).resolve()
        if not target.is_relative_to(self.static_dir.resolve()) or not target.is_file():
            return False
        ctype = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), ctype)
        return True


def make_server(
    host: str = "127.0.0.1",
    port: int = 8000,
    static_dir: str | Path | None = None,
) -> ThreadingHTTPServer:
    """Build (but do not start) the API server; port 0 picks a free port."""
    handler = type(
        "BoundApiHandler",
        (ApiHandler,),
        {
            "store": SessionStore(),
            "static_dir": Path(static_dir) if static_dir else None,
        },
    )
    return ThreadingHTTPServer((host, port), handler)


def serve_forever(host: str, port: int, static_dir: str | Path | None = None) -> None:
    server = make_server(host, port, static_dir)
    bound_host, bound_port = server.server_address[:2]
    print(f"modwythoff API listening on http://{bound_host}:{bound_port}")
    if static_dir:
        print(f"serving web client from {static_dir}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
