"""Even kernels of grid subgraphs: construction and verification.

An even kernel is a nonempty independent vertex set S such that every
vertex outside S has an even number of remaining edges into S. Rooting
the game at a kernel vertex is a losing position for the mover: each
exit from S can be answered by a re-entry, and the parity bookkeeping
never breaks.

Three constructions are provided. A straight-through (180-degree) trail
yields a kernel of the full grid containing its root. A closed
right-angle (90-degree) trail at u yields a kernel of the grid minus one
edge uv, certifying u's winning move. And for each k in [0, d] there is
a closed-form "stripe" kernel from residues of i+j and i-j modulo 2d.
"""

from __future__ import annotations

from .billiard import Trail, build_closed_90_trail
from .core import (
    EdgeSet,
    GridDims,
    InternalInvariantError,
    Vertex,
    neighbors,
    require_vertex,
)
from .regions import POSITIVE, label_vertices

VertexSet = frozenset[Vertex]


def is_even_kernel(dims: GridDims, removed: EdgeSet, S: VertexSet) -> bool:
    """Check S against the definition in the grid minus `removed` edges."""
    if not S:
        return False
    members = {(v[0], v[1]) for v in S}
    for v in S:
        require_vertex(dims, Vertex(*v))
    gone = {(tuple(e[0]), tuple(e[1])) for e in removed} if removed.mask else None
    m, n = dims.m, dims.n
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            in_S = 0
            for w in ((i, j + 1), (i + 1, j), (i, j - 1), (i - 1, j)):
                if not (1 <= w[0] <= m and 1 <= w[1] <= n):
                    continue
                if w in members and (
                    gone is None
                    or (min((i, j), w), max((i, j), w)) not in gone
                ):
                    in_S += 1
            if (i, j) in members:
                if in_S != 0:
                    return False  # not independent
            elif in_S % 2 != 0:
                return False
    return True


def kernel_from_180(dims: GridDims, trail: Trail) -> VertexSet:
    """Vertices of a straight-through trail lying on exactly one diagonal line.

    The root's two collinear half-segments count as one line (for open
    trails they are already merged into one segment), so the root is
    always a member; all members share the root's parity.
    """
    if trail.angle_at_root != 180:
        raise ValueError("kernel extraction needs a 180-degree trail")
    lines: dict[Vertex, set[tuple[str, int]]] = {}
    for seg in trail.segments:
        line = seg.line_id()
        for x, y in seg.lattice_points():
            if 1 <= x <= dims.m and 1 <= y <= dims.n:
                lines.setdefault(Vertex(x, y), set()).add(line)
    return frozenset(v for v, ids in lines.items() if len(ids) == 1)


def kernel_from_90(dims: GridDims, u: Vertex) -> tuple[Vertex, VertexSet]:
    """Winning-move target v and a kernel of the grid minus edge uv.

    Builds the closed right-angle trail at u, labels vertices by crossing
    parity, picks v as the smallest positive-labeled neighbor of u, and
    collects every positive vertex of parity opposite to u.
    """
    u = require_vertex(dims, u)
    trail = build_closed_90_trail(dims, u)
    labels = label_vertices(dims, trail)
    v = next(
        (w for w in sorted(neighbors(dims, u)) if labels[w] == POSITIVE), None
    )
    if v is None:
        raise InternalInvariantError(
            f"no positive-labeled neighbor at {tuple(u)} on {dims.m}x{dims.n}"
        )
    u_par = (u.i + u.j) % 2
    kernel = frozenset(
        w for w, lab in labels.items() if lab == POSITIVE and (w.i + w.j) % 2 != u_par
    )
    return v, kernel


def stripe_kernel(dims: GridDims, k: int) -> VertexSet:
    """Closed-form kernel: d divides neither coordinate and i+j or i-j
    is congruent to k or -k modulo 2d. Empty when d = 1."""
    d = dims.d
    if not 0 <= k <= d:
        raise ValueError(f"k must be in [0, {d}], got {k}")
    residues = {k % (2 * d), (-k) % (2 * d)}
    out = set()
    for i in range(1, dims.m + 1):
        if i % d == 0:
            continue
        for j in range(1, dims.n + 1):
            if j % d == 0:
                continue
            if (i + j) % (2 * d) in residues or (i - j) % (2 * d) in residues:
                out.add(Vertex(i, j))
    return frozenset(out)


def kernel_memberships(dims: GridDims, v: Vertex) -> set[int]:
    """The k in [0, d] whose stripe kernel contains v; always exactly two."""
    v = require_vertex(dims, v)
    d = dims.d
    if v.i % d == 0 or v.j % d == 0:
        raise ValueError(
            f"vertex {tuple(v)} has a coordinate divisible by d={d}; "
            "it belongs to no stripe kernel"
        )
    s = (v.i + v.j) % (2 * d)
    t = (v.i - v.j) % (2 * d)
    return {
        k
        for k in range(d + 1)
        if s in {k % (2 * d), (-k) % (2 * d)} or t in {k % (2 * d), (-k) % (2 * d)}
    }
