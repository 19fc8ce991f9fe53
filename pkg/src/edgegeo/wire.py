"""JSON wire forms shared by the CLI and the HTTP service.

Vertices travel as [i, j], edges as [x1, y1, x2, y2] (canonical endpoint
order), labelings as [i, j, label] triples. A game serializes losslessly:
the starting vertex is not a field but is recoverable, because the
removed edges always form the played walk (the one removed edge that is
not a step between consecutive history entries joins the start to the
first move).
"""

from __future__ import annotations

from typing import Any

from .billiard import Segment, Trail
from .core import (
    Edge,
    EdgeSet,
    GameState,
    Vertex,
    edge_index,
    make_dims,
    make_edge,
)
from .kernels import VertexSet, kernel_from_90, kernel_from_180
from .solver import Analysis, Session, classify


def vertex_wire(v: Vertex) -> list[int]:
    return [v.i, v.j]


def edge_wire(e: Edge) -> list[int]:
    return [e.a.i, e.a.j, e.b.i, e.b.j]


def segment_wire(s: Segment) -> list[int]:
    return [s.p[0], s.p[1], s.q[0], s.q[1]]


def trail_wire(trail: Trail) -> dict[str, Any]:
    return {
        "segments": [segment_wire(s) for s in trail.segments],
        "angle": trail.angle_at_root,
        "closed": trail.closed,
    }


def vertices_wire(vs: VertexSet | set | frozenset) -> list[list[int]]:
    return [vertex_wire(v) for v in sorted(vs)]


def analysis_wire(analysis: Analysis) -> dict[str, Any]:
    out: dict[str, Any] = {
        "m": analysis.dims.m,
        "n": analysis.dims.n,
        "d": analysis.dims.d,
        "vertex": vertex_wire(analysis.vertex),
        "outcome": analysis.outcome,
        "trail": trail_wire(analysis.trail),
        "kernel": vertices_wire(analysis.kernel),
    }
    if analysis.move is not None:
        out["v"] = vertex_wire(analysis.move)
        out["removed_edge"] = edge_wire(make_edge(analysis.vertex, analysis.move))
    if analysis.labels is not None:
        out["labels"] = [
            [v.i, v.j, analysis.labels[v]] for v in sorted(analysis.labels)
        ]
    return out


def session_to_api(session_id: str, session: Session) -> dict[str, Any]:
    dims = session.state.dims
    removed = sorted(session.state.removed, key=lambda e: edge_index(dims, e))
    return {
        "id": session_id,
        "m": dims.m,
        "n": dims.n,
        "root": vertex_wire(session.state.root),
        "removed_edges": [edge_wire(e) for e in removed],
        "to_move": "over" if session.status != "in_progress" else "human",
        "status": session.status,
        "history": [vertex_wire(v) for v in session.history],
        "engine_role": session.engine_role,
    }


def session_from_api(payload: dict[str, Any]) -> tuple[str, Session]:
    """Rebuild a live session from its wire form (kernel recomputed)."""
    dims = make_dims(payload["m"], payload["n"])
    root = Vertex(*payload["root"])
    history = [Vertex(*v) for v in payload["history"]]
    removed = EdgeSet.of(
        dims,
        [make_edge(Vertex(x1, y1), Vertex(x2, y2)) for x1, y1, x2, y2 in payload["removed_edges"]],
    )
    start = _derive_start(root, history, removed)

    engine_role = payload["engine_role"]
    kernel: VertexSet | None = None
    outcome = classify(dims, start)
    if engine_role == "first" and outcome == "N":
        _, kernel = kernel_from_90(dims, start)
    elif engine_role == "second" and outcome == "P":
        from .billiard import build_180_trail

        kernel = kernel_from_180(dims, build_180_trail(dims, start))

    session = Session(
        state=GameState(dims, removed, root),
        engine_role=engine_role,
        kernel=kernel,
        history=history,
        status=payload["status"],
    )
    return payload["id"], session


def _derive_start(root: Vertex, history: list[Vertex], removed: EdgeSet) -> Vertex:
    if not history:
        return root
    walk_edges = {make_edge(a, b) for a, b in zip(history, history[1:])}
    leftover = [e for e in removed if e not in walk_edges]
    if len(leftover) != 1:
        raise ValueError("removed edges do not form a walk ending at the history")
    first = history[0]
    e = leftover[0]
    if e.a == first:
        return e.b
    if e.b == first:
        return e.a
    raise ValueError("opening edge does not touch the first move")
