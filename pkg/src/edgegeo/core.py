"""Grid game substrate: board shape, vertices, edges, positions and moves.

The game is undirected edge geography: a position is a subgraph of the
m-by-n grid plus a root vertex; a move deletes an edge incident to the
root and re-roots at its other endpoint; whoever cannot move loses.

Coordinates are 1-based: vertices are (i, j) with 1 <= i <= m and
1 <= j <= n. Everything here is immutable; operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Literal, NamedTuple

Outcome = Literal["P", "N"]
P: Outcome = "P"
N: Outcome = "N"


class IllegalMoveError(ValueError):
    """A move that the rules reject."""


class NonAdjacentMoveError(IllegalMoveError):
    """Target vertex is not adjacent to the root."""


class EdgeAlreadyRemovedError(IllegalMoveError):
    """The root-target edge was removed by an earlier move."""


class InternalInvariantError(RuntimeError):
    """A condition the theory guarantees impossible was observed."""


class Vertex(NamedTuple):
    i: int
    j: int


class GridDims(NamedTuple):
    """Board shape. d = gcd(m+1, n+1) drives the win/loss classification."""

    m: int
    n: int
    d: int


class Edge(NamedTuple):
    """Unordered grid edge, stored with the lexicographically smaller endpoint first."""

    a: Vertex
    b: Vertex


def make_dims(m: int, n: int) -> GridDims:
    if m < 1 or n < 1:
        raise ValueError(f"grid dimensions must be positive, got {m}x{n}")
    return GridDims(m, n, math.gcd(m + 1, n + 1))


def is_valid_vertex(dims: GridDims, v: Vertex) -> bool:
    return 1 <= v[0] <= dims.m and 1 <= v[1] <= dims.n


def require_vertex(dims: GridDims, v: Vertex) -> Vertex:
    if not is_valid_vertex(dims, v):
        raise ValueError(f"vertex {tuple(v)} outside grid {dims.m}x{dims.n}")
    return Vertex(*v)


def make_edge(u: Vertex, w: Vertex) -> Edge:
    """Canonical edge between two adjacent vertices."""
    if abs(u[0] - w[0]) + abs(u[1] - w[1]) != 1:
        raise ValueError(f"vertices {tuple(u)} and {tuple(w)} are not adjacent")
    a, b = sorted((Vertex(*u), Vertex(*w)))
    return Edge(a, b)


def parity(v: Vertex) -> Literal["even", "odd"]:
    """Bipartition class of a vertex; adjacent vertices always differ."""
    return "even" if (v[0] + v[1]) % 2 == 0 else "odd"


def neighbors(dims: GridDims, v: Vertex) -> list[Vertex]:
    """Adjacent vertices in N, E, S, W order, skipping out-of-range ones."""
    require_vertex(dims, v)
    i, j = v
    out = []
    if j + 1 <= dims.n:
        out.append(Vertex(i, j + 1))
    if i + 1 <= dims.m:
        out.append(Vertex(i + 1, j))
    if j - 1 >= 1:
        out.append(Vertex(i, j - 1))
    if i - 1 >= 1:
        out.append(Vertex(i - 1, j))
    return out


def total_edges(dims: GridDims) -> int:
    return dims.m * (dims.n - 1) + dims.n * (dims.m - 1)


def edge_index(dims: GridDims, e: Edge) -> int:
    """Stable index: horizontal edges row-major first, then vertical row-major."""
    (i1, j1), (i2, j2) = e
    m, n = dims.m, dims.n
    if j1 == j2:  # horizontal: (i,j)-(i+1,j)
        return (j1 - 1) * (m - 1) + (i1 - 1)
    # vertical: (i,j)-(i,j+1)
    return n * (m - 1) + (j1 - 1) * m + (i1 - 1)


def edge_from_index(dims: GridDims, idx: int) -> Edge:
    m, n = dims.m, dims.n
    horiz = n * (m - 1)
    if idx < horiz:
        j, i = divmod(idx, m - 1)
        return Edge(Vertex(i + 1, j + 1), Vertex(i + 2, j + 1))
    idx -= horiz
    j, i = divmod(idx, m)
    return Edge(Vertex(i + 1, j + 1), Vertex(i + 1, j + 2))


def all_edges(dims: GridDims) -> Iterator[Edge]:
    """Every edge of the full grid in canonical index order."""
    for idx in range(total_edges(dims)):
        yield edge_from_index(dims, idx)


@dataclass(frozen=True)
class EdgeSet:
    """Immutable set of edges over the canonical enumeration, as a bitmask."""

    dims: GridDims
    mask: int = 0

    @classmethod
    def empty(cls, dims: GridDims) -> "EdgeSet":
        return cls(dims, 0)

    @classmethod
    def of(cls, dims: GridDims, edges: Iterator[Edge] | list[Edge]) -> "EdgeSet":
        s = cls(dims, 0)
        for e in edges:
            s = s.with_edge(e)
        return s

    def _index(self, e: Edge) -> int:
        a = require_vertex(self.dims, e[0])
        b = require_vertex(self.dims, e[1])
        canonical = make_edge(a, b)
        return edge_index(self.dims, canonical)

    def __contains__(self, e: Edge) -> bool:
        return (self.mask >> self._index(e)) & 1 == 1

    def with_edge(self, e: Edge) -> "EdgeSet":
        return EdgeSet(self.dims, self.mask | (1 << self._index(e)))

    def without_edge(self, e: Edge) -> "EdgeSet":
        return EdgeSet(self.dims, self.mask & ~(1 << self._index(e)))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[Edge]:
        mask = self.mask
        idx = 0
        while mask:
            if mask & 1:
                yield edge_from_index(self.dims, idx)
            mask >>= 1
            idx += 1


@dataclass(frozen=True)
class GameState:
    """A position: the grid minus the removed edges, rooted at `root`."""

    dims: GridDims
    removed: EdgeSet
    root: Vertex

    @classmethod
    def fresh(cls, dims: GridDims, root: Vertex) -> "GameState":
        return cls(dims, EdgeSet.empty(dims), require_vertex(dims, root))

    def remaining_edge_count(self) -> int:
        return total_edges(self.dims) - len(self.removed)


def legal_moves(state: GameState) -> list[Vertex]:
    """Neighbors reachable over a not-yet-removed edge, in N, E, S, W order."""
    out = []
    for w in neighbors(state.dims, state.root):
        if make_edge(state.root, w) not in state.removed:
            out.append(w)
    return out


def apply_move(state: GameState, w: Vertex) -> GameState:
    """Remove the root-w edge and re-root at w."""
    w = require_vertex(state.dims, w)
    if abs(state.root[0] - w[0]) + abs(state.root[1] - w[1]) != 1:
        raise NonAdjacentMoveError(
            f"vertex {tuple(w)} is not adjacent to root {tuple(state.root)}"
        )
    e = make_edge(state.root, w)
    if e in state.removed:
        raise EdgeAlreadyRemovedError(
            f"edge {tuple(e.a)}-{tuple(e.b)} already removed"
        )
    return GameState(state.dims, state.removed.with_edge(e), w)
