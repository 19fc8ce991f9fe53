"""Slope-one billiard rays in the rectangle [0, m+1] x [0, n+1].

A ray leaves a grid vertex along one of the four diagonal directions,
advancing one lattice point per step. Hitting a side of the rectangle
flips the matching direction component; hitting a corner, or coming back
to the start vertex, stops the ray. All geometry stays on integer
lattice points, so every computation is exact.

Two trail shapes matter downstream. A vertex whose column or row index
is divisible by d = gcd(m+1, n+1) always has a closed trail whose two
segment ends meet at a right angle, obtained from a single ray. A vertex
with neither coordinate divisible by d has a straight-through trail
(the two ends at the vertex are collinear), either closed from a single
returning ray or open with both free ends at corners.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import GridDims, InternalInvariantError, Vertex, require_vertex

Point = tuple[int, int]


class Direction(NamedTuple):
    dx: int
    dy: int

    def reversed(self) -> "Direction":
        return Direction(-self.dx, -self.dy)


NE = Direction(1, 1)
NW = Direction(-1, 1)
SE = Direction(1, -1)
SW = Direction(-1, -1)

DIRECTION_NAMES = {NE: "NE", NW: "NW", SE: "SE", SW: "SW"}


def perpendicular(a: Direction, b: Direction) -> bool:
    return a.dx * b.dx + a.dy * b.dy == 0


class Segment(NamedTuple):
    """Maximal straight piece of a ray, slope exactly +1 or -1."""

    p: Point
    q: Point

    @property
    def slope(self) -> int:
        (x1, y1), (x2, y2) = self
        return 1 if (x2 - x1) == (y2 - y1) else -1

    def line_id(self) -> tuple[str, int]:
        """The diagonal line the segment lies on: x-y=c (slope +1) or x+y=c."""
        x, y = self.p
        if self.slope == 1:
            return ("diff", x - y)
        return ("sum", x + y)

    def lattice_points(self) -> list[Point]:
        (x1, y1), (x2, y2) = self
        sx = 1 if x2 > x1 else -1
        sy = 1 if y2 > y1 else -1
        return [(x1 + t * sx, y1 + t * sy) for t in range(abs(x2 - x1) + 1)]

    def canonical(self) -> "Segment":
        return Segment(*sorted((self.p, self.q)))


@dataclass(frozen=True)
class Corner:
    point: Point


@dataclass(frozen=True)
class Returned:
    """Ray came back to its start; `arrival` is the side it approached from.

    For a final step from point p into the start vertex, arrival is the
    direction from the start toward p.
    """

    arrival: Direction


@dataclass(frozen=True)
class RayPath:
    start: Vertex
    out_dir: Direction
    segments: tuple[Segment, ...]
    terminal: Corner | Returned


@dataclass(frozen=True)
class Trail:
    """One or two rays forming exactly two segment ends at the root.

    angle_at_root is 90 when the two ends have opposite slopes, 180 when
    they are collinear. Open trails (both free ends at corners) merge the
    root's two collinear half-segments into a single segment, so the root
    sits in the interior of one segment there.
    """

    root: Vertex
    segments: tuple[Segment, ...]
    angle_at_root: int
    closed: bool


def step_cap(dims: GridDims) -> int:
    # Total (point, direction) states; a ray revisiting one would loop forever.
    return 4 * (dims.m + 2) * (dims.n + 2)


def trace_ray(dims: GridDims, start: Vertex, direction: Direction) -> RayPath:
    """Advance from `start` until the first corner hit or first return."""
    start = require_vertex(dims, start)
    max_x, max_y = dims.m + 1, dims.n + 1
    x, y = start
    dx, dy = direction
    start_pt = (x, y)
    seg_from: Point = start_pt
    segments: list[Segment] = []

    for _ in range(step_cap(dims)):
        x += dx
        y += dy
        if (x, y) == start_pt:
            segments.append(Segment(seg_from, (x, y)))
            return RayPath(
                start, Direction(*direction), tuple(segments), Returned(Direction(-dx, -dy))
            )
        if x in (0, max_x) and y in (0, max_y):
            segments.append(Segment(seg_from, (x, y)))
            return RayPath(start, Direction(*direction), tuple(segments), Corner((x, y)))
        bounced = False
        if x in (0, max_x):
            dx = -dx
            bounced = True
        if y in (0, max_y):
            dy = -dy
            bounced = True
        if bounced:
            segments.append(Segment(seg_from, (x, y)))
            seg_from = (x, y)

    raise InternalInvariantError(
        f"ray from {tuple(start)} exceeded the state-space step cap {step_cap(dims)}"
    )


def _right_angle_return(path: RayPath) -> bool:
    return isinstance(path.terminal, Returned) and perpendicular(
        path.terminal.arrival, path.out_dir
    )


def build_closed_90_trail(dims: GridDims, u: Vertex) -> Trail:
    """Closed trail with a right angle at u, from the SW or the NE ray.

    Requires d | u.i or d | u.j; at least one of the two rays then returns
    from a perpendicular side (sometimes both do, in which case the SW one
    is canonical).
    """
    u = require_vertex(dims, u)
    if u.i % dims.d != 0 and u.j % dims.d != 0:
        raise ValueError(
            f"vertex {tuple(u)} has no coordinate divisible by d={dims.d}; "
            "no closed right-angle trail exists there"
        )
    for direction in (SW, NE):
        path = trace_ray(dims, u, direction)
        if _right_angle_return(path):
            return Trail(u, tuple(s.canonical() for s in path.segments), 90, True)
    raise InternalInvariantError(
        f"neither diagonal ray from {tuple(u)} closed at a right angle "
        f"on the {dims.m}x{dims.n} grid"
    )


def build_180_trail(dims: GridDims, v: Vertex) -> Trail:
    """Straight-through trail at v, closed or open.

    Requires d to divide neither coordinate of v. The NE ray then either
    returns from the SW side (closed trail from that single ray) or stops
    at a corner, in which case the SW ray behaves symmetrically and the
    open trail merges the two collinear half-segments through v.
    """
    v = require_vertex(dims, v)
    if v.i % dims.d == 0 or v.j % dims.d == 0:
        raise ValueError(
            f"vertex {tuple(v)} has a coordinate divisible by d={dims.d}; "
            "no straight-through trail exists there"
        )
    first = trace_ray(dims, v, NE)
    if isinstance(first.terminal, Returned):
        if first.terminal.arrival != SW:
            raise InternalInvariantError(
                f"NE ray from {tuple(v)} returned from "
                f"{DIRECTION_NAMES[first.terminal.arrival]}, not SW"
            )
        return Trail(v, tuple(s.canonical() for s in first.segments), 180, True)

    second = trace_ray(dims, v, SW)
    if isinstance(second.terminal, Returned):
        if second.terminal.arrival != NE:
            raise InternalInvariantError(
                f"SW ray from {tuple(v)} returned from "
                f"{DIRECTION_NAMES[second.terminal.arrival]}, not NE"
            )
        return Trail(v, tuple(s.canonical() for s in second.segments), 180, True)

    # Both rays ended at corners: merge the two half-segments through v.
    first_half = first.segments[0]
    second_half = second.segments[0]
    merged = Segment(first_half.q, second_half.q).canonical()
    middle: list[Segment] = [merged]
    rest = [s.canonical() for s in first.segments[1:]][::-1]
    segments = tuple(rest + middle + [s.canonical() for s in second.segments[1:]])
    return Trail(v, segments, 180, False)


def trail_vertices(dims: GridDims, trail: Trail) -> set[Vertex]:
    """Grid vertices lying on some segment of the trail."""
    out: set[Vertex] = set()
    for seg in trail.segments:
        for x, y in seg.lattice_points():
            if 1 <= x <= dims.m and 1 <= y <= dims.n:
                out.add(Vertex(x, y))
    return out
