"""Constant-time classification and the kernel-keeping strategy engine.

Classification: with d = gcd(m+1, n+1), a fresh grid rooted at (a, b) is
a losing position for the mover exactly when d divides neither a nor b.
Otherwise the winning move goes to the positive neighbor produced by the
closed right-angle trail construction.

The session engine fixes one even kernel at game start and never
recomputes it: every opponent move exits the kernel (kernels are
independent), leaving the exited-to vertex with an odd, hence nonzero,
number of remaining edges back in, and the engine re-enters along the
smallest of them. That single invariant wins the game.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Literal

from . import oracle
from .billiard import build_180_trail

if TYPE_CHECKING:
    from .billiard import Trail
    from .regions import VertexLabeling
from .core import (
    GameState,
    GridDims,
    InternalInvariantError,
    N,
    Outcome,
    P,
    Vertex,
    apply_move,
    legal_moves,
    make_edge,
    neighbors,
    require_vertex,
)
from .kernels import VertexSet, kernel_from_90, kernel_from_180

Role = Literal["first", "second"]
Status = Literal["in_progress", "engine_won", "opponent_won"]

DEFAULT_HINT_BUDGET = 500_000


def classify(dims: GridDims, v: Vertex) -> Outcome:
    """P iff d divides neither coordinate of v."""
    v = require_vertex(dims, v)
    return P if (v.i % dims.d != 0 and v.j % dims.d != 0) else N


def winning_move(dims: GridDims, u: Vertex) -> Vertex:
    """The certified winning move from an N-position root."""
    if classify(dims, u) != N:
        raise ValueError(f"{tuple(u)} is a losing root; there is no winning move")
    v, _ = kernel_from_90(dims, u)
    return v


@dataclass
class Session:
    """One live game. Single-writer: serialize mutations externally."""

    state: GameState
    engine_role: Role
    kernel: VertexSet | None  # None when the engine holds the losing role
    history: list[Vertex] = field(default_factory=list)
    status: Status = "in_progress"
    hint_budget: int = DEFAULT_HINT_BUDGET

    @property
    def engine_favorable(self) -> bool:
        return self.kernel is not None


def new_session(
    dims: GridDims,
    start: Vertex,
    human_plays: Literal["first", "second", "auto"] = "auto",
    hint_budget: int = DEFAULT_HINT_BUDGET,
) -> Session:
    """Open a game; the engine moves immediately whenever it plays first.

    With `auto` the engine takes the role the classification favors. An
    explicit human role can force the engine into the losing side, where
    it falls back to budgeted search instead of a kernel.
    """
    start = require_vertex(dims, start)
    outcome = classify(dims, start)
    if human_plays == "auto":
        engine_role: Role = "first" if outcome == N else "second"
    else:
        engine_role = "second" if human_plays == "first" else "first"

    state = GameState.fresh(dims, start)
    kernel: VertexSet | None = None
    session = Session(state, engine_role, None, hint_budget=hint_budget)

    if engine_role == "first":
        if outcome == N:
            v, kernel = kernel_from_90(dims, start)
            session.kernel = kernel
            _play(session, v)
        elif legal_moves(session.state):
            _play(session, _fallback_move(session))
        else:
            # engine must open but is already stuck (isolated root)
            session.status = "opponent_won"
            return session
        if not legal_moves(session.state):
            session.status = "engine_won"
    else:
        if outcome == P:
            session.kernel = kernel_from_180(dims, build_180_trail(dims, start))
        if not legal_moves(session.state):
            # The human moves first and is already stuck.
            session.status = "engine_won"
    return session


def _play(session: Session, w: Vertex) -> None:
    session.state = apply_move(session.state, w)
    session.history.append(w)


def _fallback_move(session: Session) -> Vertex:
    """Best effort without a kernel: budgeted search, else smallest move."""
    _, move = hint(session.state, session.hint_budget)
    if move is not None:
        return move
    moves = sorted(legal_moves(session.state))
    if not moves:
        raise InternalInvariantError("fallback move requested with no legal moves")
    return moves[0]


def engine_reply(session: Session, opponent_move: Vertex) -> Vertex | None:
    """Apply the opponent's move and answer it.

    Returns the engine's move, or None when the opponent's move ended the
    game (the engine had no reply only in the unfavorable role). Illegal
    moves raise without touching the session.
    """
    if session.status != "in_progress":
        raise ValueError("game is over")
    if opponent_move not in legal_moves(session.state):
        # Re-run the precise validation for a specific error.
        apply_move(session.state, opponent_move)
        raise AssertionError("unreachable")
    _play(session, opponent_move)

    if session.engine_favorable:
        reply = _kernel_reply(session)
    else:
        if not legal_moves(session.state):
            session.status = "opponent_won"
            return None
        reply = _fallback_move(session)
    _play(session, reply)
    if not legal_moves(session.state):
        session.status = "engine_won"
    return reply


def _kernel_reply(session: Session) -> Vertex:
    root = session.state.root
    kernel = session.kernel
    assert kernel is not None
    candidates = [
        w
        for w in sorted(neighbors(session.state.dims, root))
        if w in kernel and make_edge(root, w) not in session.state.removed
    ]
    if not candidates:
        raise InternalInvariantError(
            f"no remaining edge from {tuple(root)} back into the kernel"
        )
    return candidates[0]


@dataclass(frozen=True)
class Analysis:
    """Explanatory geometry for a fresh-board root: trail, kernel, labels.

    For a losing root (P) the kernel certifies the whole grid; for a
    winning root (N) it certifies the grid minus the winning-move edge,
    and `move` / `labels` carry the chosen target and region labeling.
    """

    dims: GridDims
    vertex: Vertex
    outcome: Outcome
    trail: Trail
    kernel: VertexSet
    labels: VertexLabeling | None = None
    move: Vertex | None = None


def analyze(dims: GridDims, v: Vertex) -> Analysis:
    """Trail, kernel and (for winning roots) labeling for a fresh board."""
    from .billiard import build_closed_90_trail
    from .regions import label_vertices

    v = require_vertex(dims, v)
    if classify(dims, v) == P:
        trail = build_180_trail(dims, v)
        return Analysis(dims, v, P, trail, kernel_from_180(dims, trail))
    trail = build_closed_90_trail(dims, v)
    labels = label_vertices(dims, trail)
    move, kernel = kernel_from_90(dims, v)
    return Analysis(dims, v, N, trail, kernel, labels=labels, move=move)


def hint(
    state: GameState, budget: int = DEFAULT_HINT_BUDGET
) -> tuple[Outcome | Literal["unknown"], Vertex | None]:
    """Outcome and a best move for any position, within a search budget.

    Fresh full-grid states are answered in constant time. Anything else
    goes to brute-force search; when the position is too large or the
    budget runs out, the outcome is "unknown".
    """
    if len(state.removed) == 0:
        outcome = classify(state.dims, state.root)
        if outcome == N:
            return N, winning_move(state.dims, state.root)
        return P, None
    try:
        memo: oracle.MemoTable = {}
        outcome = oracle.brute_outcome(state, memo=memo, budget=budget)
        if outcome == P:
            return P, None
        move = oracle.best_move(state, memo=memo, budget=budget)
        return N, move
    except (oracle.GuardExceededError, oracle.BudgetExceededError):
        return "unknown", None
