"""HTTP JSON API: classification, analysis geometry, and live game sessions.

Sessions live in memory behind unguessable ids with a TTL; the human move
and the engine's reply are applied atomically under a per-session lock,
so no request ever observes the half-played state.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import solver, wire
from .core import (
    IllegalMoveError,
    Vertex,
    is_valid_vertex,
    legal_moves,
    make_dims,
    make_edge,
)

DEFAULT_TTL_SECONDS = 24 * 3600


class ApiError(Exception):
    def __init__(self, status: int, code: str, detail: str):
        self.status = status
        self.code = code
        self.detail = detail


@dataclass
class StoredSession:
    session: solver.Session
    created: float
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """id -> session map with TTL purging; per-session locks serialize writes."""

    def __init__(self, ttl_seconds: float = DEFAULT_TTL_SECONDS):
        self.ttl = ttl_seconds
        self._map: dict[str, StoredSession] = {}
        self._lock = threading.Lock()

    def purge(self, now: float | None = None) -> None:
        now = time.time() if now is None else now
        with self._lock:
            dead = [k for k, s in self._map.items() if now - s.created > self.ttl]
            for k in dead:
                del self._map[k]

    def put(self, session: solver.Session) -> str:
        self.purge()
        sid = secrets.token_urlsafe(16)
        with self._lock:
            self._map[sid] = StoredSession(session, time.time())
        return sid

    def get(self, sid: str) -> StoredSession:
        self.purge()
        with self._lock:
            stored = self._map.get(sid)
        if stored is None:
            raise ApiError(404, "unknown_game", f"no session with id {sid!r}")
        return stored

    def items(self) -> list[tuple[str, solver.Session]]:
        with self._lock:
            return [(k, s.session) for k, s in self._map.items()]


class NewGameBody(BaseModel):
    m: int
    n: int
    a: int
    b: int
    human_role: Literal["first", "second"] | None = None


class MoveBody(BaseModel):
    to: tuple[int, int]


def _checked_board(m: int, n: int, a: int, b: int):
    if m < 1 or n < 1:
        raise ApiError(422, "out_of_range", f"grid {m}x{n} is not positive")
    dims = make_dims(m, n)
    v = Vertex(a, b)
    if not is_valid_vertex(dims, v):
        raise ApiError(
            422, "out_of_range", f"vertex ({a},{b}) outside grid {m}x{n}"
        )
    return dims, v


def create_app(
    *,
    session_ttl_seconds: float = DEFAULT_TTL_SECONDS,
    hint_budget: int = solver.DEFAULT_HINT_BUDGET,
    static_dir: str | None = None,
    snapshot_path: str | None = None,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    store = SessionStore(session_ttl_seconds)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        if snapshot_path:
            games = [wire.session_to_api(k, s) for k, s in store.items()]
            Path(snapshot_path).write_text(json.dumps(games, indent=2))

    app = FastAPI(title="edgegeo", lifespan=lifespan)
    app.state.store = store

    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def on_api_error(_: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status, content={"error": exc.code, "detail": exc.detail}
        )

    @app.exception_handler(RequestValidationError)
    async def on_malformed(_: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400, content={"error": "malformed", "detail": str(exc.errors())}
        )

    @app.get("/api/classify")
    def api_classify(m: int, n: int, a: int, b: int):
        dims, v = _checked_board(m, n, a, b)
        outcome = solver.classify(dims, v)
        payload = {"outcome": outcome, "d": dims.d}
        if outcome == "N":
            payload["winning_move"] = wire.vertex_wire(solver.winning_move(dims, v))
        return payload

    @app.get("/api/analysis")
    def api_analysis(m: int, n: int, a: int, b: int):
        dims, v = _checked_board(m, n, a, b)
        return wire.analysis_wire(solver.analyze(dims, v))

    @app.post("/api/game")
    def api_new_game(body: NewGameBody):
        dims, v = _checked_board(body.m, body.n, body.a, body.b)
        session = solver.new_session(
            dims,
            v,
            human_plays=body.human_role or "auto",
            hint_budget=hint_budget,
        )
        sid = store.put(session)
        return wire.session_to_api(sid, session)

    @app.get("/api/game/{sid}")
    def api_get_game(sid: str):
        stored = store.get(sid)
        with stored.lock:
            return wire.session_to_api(sid, stored.session)

    @app.post("/api/game/{sid}/move")
    def api_move(sid: str, body: MoveBody):
        stored = store.get(sid)
        with stored.lock:
            session = stored.session
            if session.status != "in_progress":
                raise ApiError(409, "game_over", "the game is already decided")
            w = Vertex(*body.to)
            if not is_valid_vertex(session.state.dims, w):
                raise ApiError(
                    422,
                    "illegal_move",
                    f"vertex ({w.i},{w.j}) outside the board",
                )
            root = session.state.root
            if w not in legal_moves(session.state):
                if abs(root.i - w.i) + abs(root.j - w.j) != 1:
                    detail = f"vertex ({w.i},{w.j}) is not adjacent to root ({root.i},{root.j})"
                else:
                    e = make_edge(root, w)
                    detail = f"edge ({e.a.i},{e.a.j})-({e.b.i},{e.b.j}) already removed"
                raise ApiError(422, "illegal_move", detail)
            try:
                solver.engine_reply(session, w)
            except IllegalMoveError as exc:  # pragma: no cover - guarded above
                raise ApiError(422, "illegal_move", str(exc))
            return wire.session_to_api(sid, session)

    @app.get("/api/game/{sid}/hint")
    def api_hint(sid: str):
        stored = store.get(sid)
        with stored.lock:
            outcome, move = solver.hint(stored.session.state, hint_budget)
        payload = {"outcome": outcome}
        if move is not None:
            payload["move"] = wire.vertex_wire(move)
        return payload

    if static_dir and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
