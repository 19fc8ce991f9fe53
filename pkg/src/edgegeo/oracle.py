"""Independent ground truth at desk scale.

Nothing here knows about trails or the gcd classification: outcomes come
from memoized game-tree search, kernels from subset enumeration or a
GF(2) parity solve. The theory modules are tested against these.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .core import (
    EdgeSet,
    GameState,
    GridDims,
    N,
    Outcome,
    P,
    Vertex,
    apply_move,
    legal_moves,
    make_dims,
    make_edge,
    neighbors,
    require_vertex,
    total_edges,
)
from .kernels import VertexSet, is_even_kernel

MemoTable = dict[tuple[int, Vertex], Outcome]


class GuardExceededError(ValueError):
    """Input larger than the oracle's explicit safety guard."""


class BudgetExceededError(RuntimeError):
    """Search ran out of its node budget."""


def brute_outcome(
    state: GameState,
    *,
    memo: MemoTable | None = None,
    max_edges: int = 26,
    budget: int | None = None,
) -> Outcome:
    """Negamax over the real game rules: N iff some move reaches a P state.

    Memoized on (remaining-edge mask, root). `budget` caps the number of
    node expansions; exceeding it raises BudgetExceededError.
    """
    if state.remaining_edge_count() > max_edges:
        raise GuardExceededError(
            f"{state.remaining_edge_count()} remaining edges exceed the "
            f"brute-force guard of {max_edges}"
        )
    if memo is None:
        memo = {}
    counter = [0]

    def solve(s: GameState) -> Outcome:
        key = (s.removed.mask, s.root)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if budget is not None:
            counter[0] += 1
            if counter[0] > budget:
                raise BudgetExceededError(f"exceeded {budget} node expansions")
        outcome: Outcome = P
        for w in legal_moves(s):
            if solve(apply_move(s, w)) == P:
                outcome = N
                break
        memo[key] = outcome
        return outcome

    return solve(state)


def best_move(
    state: GameState,
    *,
    memo: MemoTable | None = None,
    max_edges: int = 26,
    budget: int | None = None,
) -> Vertex | None:
    """Smallest move to a P state, or None when the position is P."""
    if memo is None:
        memo = {}
    if brute_outcome(state, memo=memo, max_edges=max_edges, budget=budget) == P:
        return None
    for w in sorted(legal_moves(state)):
        child = apply_move(state, w)
        if brute_outcome(child, memo=memo, max_edges=max_edges, budget=budget) == P:
            return w
    return None


def enumerate_even_kernels(
    dims: GridDims,
    removed: EdgeSet,
    v: Vertex,
    cap: int = 1_000_000,
) -> list[VertexSet]:
    """All even kernels containing v, by subset scan, up to `cap` results.

    Deterministic order: increasing bitmask over row-major vertex indices.
    Guarded to at most 20 vertices.
    """
    v = require_vertex(dims, v)
    vertex_count = dims.m * dims.n
    if vertex_count > 20:
        raise GuardExceededError(
            f"{vertex_count} vertices exceed the subset-enumeration guard of 20"
        )
    order = [Vertex(i, j) for j in range(1, dims.n + 1) for i in range(1, dims.m + 1)]
    index = {u: b for b, u in enumerate(order)}

    # Remaining-edge adjacency as per-vertex bitmasks.
    adj = [0] * vertex_count
    for u in order:
        for w in neighbors(dims, u):
            if make_edge(u, w) not in removed:
                adj[index[u]] |= 1 << index[w]

    v_bit = 1 << index[v]
    below = v_bit - 1
    found: list[VertexSet] = []
    for rest in range(2 ** (vertex_count - 1)):
        # Splice v's bit into `rest` so only subsets containing v are scanned.
        subset = ((rest & ~below) << 1) | v_bit | (rest & below)
        ok = True
        bits = subset
        while bits:
            low = bits & -bits
            b = low.bit_length() - 1
            if adj[b] & subset:
                ok = False  # not independent
                break
            bits ^= low
        if not ok:
            continue
        rest = ((1 << vertex_count) - 1) ^ subset
        while rest:
            low = rest & -rest
            b = low.bit_length() - 1
            if (adj[b] & subset).bit_count() % 2 != 0:
                ok = False
                break
            rest ^= low
        if ok:
            found.append(frozenset(order[b] for b in range(vertex_count) if subset >> b & 1))
            if len(found) >= cap:
                break
    return found


def gf2_kernel(dims: GridDims, removed: EdgeSet, v: Vertex) -> VertexSet | None:
    """Solve for a kernel inside v's parity class by GF(2) elimination.

    Unknowns are the vertices sharing v's parity (independence is then
    automatic); each opposite-parity vertex contributes one parity
    constraint over its remaining-edge neighbors, and v is pinned to 1.
    Returns None when the system is inconsistent.
    """
    v = require_vertex(dims, v)
    v_par = (v.i + v.j) % 2
    unknowns = [
        Vertex(i, j)
        for j in range(1, dims.n + 1)
        for i in range(1, dims.m + 1)
        if (i + j) % 2 == v_par
    ]
    col = {u: b for b, u in enumerate(unknowns)}
    nvars = len(unknowns)
    rhs_bit = 1 << nvars

    rows: list[int] = []
    for j in range(1, dims.n + 1):
        for i in range(1, dims.m + 1):
            u = Vertex(i, j)
            if (i + j) % 2 == v_par:
                continue
            row = 0
            for w in neighbors(dims, u):
                if make_edge(u, w) not in removed:
                    row |= 1 << col[w]
            if row:
                rows.append(row)
    rows.append((1 << col[v]) | rhs_bit)

    # Gaussian elimination with the rhs carried in the top bit.
    pivots: list[tuple[int, int]] = []
    for c in range(nvars):
        pivot = next(
            (r for r in range(len(pivots), len(rows)) if rows[r] >> c & 1), None
        )
        if pivot is None:
            continue
        r = len(pivots)
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for other in range(len(rows)):
            if other != r and rows[other] >> c & 1:
                rows[other] ^= rows[r]
        pivots.append((r, c))
    if any(row == rhs_bit for row in rows):
        return None  # 0 = 1: inconsistent

    solution = 0
    for r, c in pivots:
        if rows[r] >> nvars & 1:
            solution |= 1 << c
    kernel = frozenset(u for u, b in col.items() if solution >> b & 1)
    if not is_even_kernel(dims, removed, kernel):
        raise AssertionError("GF(2) solution failed the kernel checker")
    return kernel


@dataclass
class SweepReport:
    """Classifier-vs-search comparison over every small board."""

    max_edges: int
    boards: int = 0
    positions: int = 0
    mismatches: list[dict] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "max_edges": self.max_edges,
            "boards": self.boards,
            "positions": self.positions,
            "mismatches": self.mismatches,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def __str__(self) -> str:
        status = "OK" if self.ok else f"{len(self.mismatches)} MISMATCHES"
        return (
            f"sweep up to {self.max_edges} edges: {self.boards} boards, "
            f"{self.positions} positions, {status} "
            f"({self.elapsed_seconds:.2f}s)"
        )


def sweep_boards(max_edges: int) -> list[GridDims]:
    """Every board whose full grid has at most max_edges edges."""
    out = []
    m = 1
    while total_edges(make_dims(m, 1)) <= max_edges:
        n = 1
        while total_edges(make_dims(m, n)) <= max_edges:
            out.append(make_dims(m, n))
            n += 1
        m += 1
    return out


def verify_sweep(max_edges: int = 18) -> SweepReport:
    """Compare the gcd classifier against full search on every small board."""
    from .solver import classify  # local import: solver depends on oracle via hint

    report = SweepReport(max_edges=max_edges)
    start = time.perf_counter()
    for dims in sweep_boards(max_edges):
        report.boards += 1
        memo: MemoTable = {}
        for j in range(1, dims.n + 1):
            for i in range(1, dims.m + 1):
                root = Vertex(i, j)
                report.positions += 1
                predicted = classify(dims, root)
                actual = brute_outcome(
                    GameState.fresh(dims, root), memo=memo, max_edges=max_edges
                )
                if predicted != actual:
                    report.mismatches.append(
                        {
                            "m": dims.m,
                            "n": dims.n,
                            "root": list(root),
                            "classified": predicted,
                            "search": actual,
                        }
                    )
    report.elapsed_seconds = time.perf_counter() - start
    return report
