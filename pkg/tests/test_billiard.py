import pytest

from edgegeo.billiard import (
    NE,
    NW,
    SE,
    SW,
    Corner,
    Returned,
    Segment,
    build_180_trail,
    build_closed_90_trail,
    perpendicular,
    step_cap,
    trace_ray,
    trail_vertices,
)
from edgegeo.core import Vertex, make_dims


def seg_set(trail_or_ray):
    return {s.canonical() for s in trail_or_ray.segments}


def test_trace_ray_3x2_closes_with_exact_reflections():
    path = trace_ray(make_dims(3, 2), Vertex(1, 1), NE)
    assert [tuple(s) for s in path.segments] == [
        ((1, 1), (3, 3)),
        ((3, 3), (4, 2)),
        ((4, 2), (2, 0)),
        ((2, 0), (1, 1)),
    ]
    assert path.terminal == Returned(SE)


def test_trace_ray_single_cell_hits_corner():
    path = trace_ray(make_dims(1, 1), Vertex(1, 1), NE)
    assert path.terminal == Corner((2, 2))
    assert len(path.segments) == 1


def test_trace_ray_2x2_one_segment_to_corner():
    path = trace_ray(make_dims(2, 2), Vertex(1, 1), NE)
    assert path.terminal == Corner((3, 3))
    assert path.segments == (Segment((1, 1), (3, 3)),)


def test_segments_are_diagonal_and_chained():
    for m, n in [(3, 2), (5, 3), (11, 8), (7, 7)]:
        dims = make_dims(m, n)
        for direction in (NE, NW, SE, SW):
            path = trace_ray(dims, Vertex(1 + m // 2, 1 + n // 3), direction)
            for s in path.segments:
                (x1, y1), (x2, y2) = s
                assert abs(x2 - x1) == abs(y2 - y1) > 0
            for a, b in zip(path.segments, path.segments[1:]):
                assert a.q == b.p
                # junctions sit on the rectangle boundary
                x, y = a.q
                assert x in (0, m + 1) or y in (0, n + 1)
            for s in path.segments:
                # interior lattice points stay strictly inside the rectangle
                for x, y in s.lattice_points()[1:-1]:
                    assert 0 < x < m + 1 and 0 < y < n + 1


def test_returned_rays_replay_backwards():
    # Tracing again from the approach side must walk the same segments reversed.
    cases = [(3, 2, 1, 1, NE), (11, 8, 3, 4, NE), (11, 8, 3, 4, SW), (5, 3, 2, 2, NE)]
    for m, n, i, j, direction in cases:
        dims = make_dims(m, n)
        path = trace_ray(dims, Vertex(i, j), direction)
        assert isinstance(path.terminal, Returned)
        back = trace_ray(dims, Vertex(i, j), path.terminal.arrival)
        assert isinstance(back.terminal, Returned)
        assert back.terminal.arrival == path.out_dir
        expected = tuple(Segment(s.q, s.p) for s in reversed(path.segments))
        assert back.segments == expected


def test_step_cap_is_generous_enough_everywhere():
    # every ray on small boards terminates well within the cap
    for m in range(1, 9):
        for n in range(1, 9):
            dims = make_dims(m, n)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    for direction in (NE, NW, SE, SW):
                        path = trace_ray(dims, Vertex(i, j), direction)
                        steps = sum(
                            abs(s.q[0] - s.p[0]) for s in path.segments
                        )
                        assert steps <= step_cap(dims)


def test_closed_90_trail_3x2():
    trail = build_closed_90_trail(make_dims(3, 2), Vertex(1, 1))
    assert trail.closed and trail.angle_at_root == 90
    assert seg_set(trail) == {
        Segment((1, 1), (3, 3)),
        Segment((3, 3), (4, 2)),
        Segment((2, 0), (4, 2)),
        Segment((1, 1), (2, 0)),
    }


def test_closed_90_trail_5x3_is_figure_shaped():
    # the single NE ray closes; the NW/SW pair both die at corners
    dims = make_dims(5, 3)
    trail = build_closed_90_trail(dims, Vertex(2, 2))
    assert trail.closed and len(trail.segments) == 4
    assert trace_ray(dims, Vertex(2, 2), NW).terminal == Corner((0, 4))
    assert trace_ray(dims, Vertex(2, 2), SW).terminal == Corner((0, 0))


def test_closed_90_trail_11x8_at_3_4():
    trail = build_closed_90_trail(make_dims(11, 8), Vertex(3, 4))
    assert trail.closed and trail.angle_at_root == 90
    assert Vertex(3, 4) in trail_vertices(make_dims(11, 8), trail)


def test_closed_90_trail_rejects_wrong_vertex():
    with pytest.raises(ValueError):
        build_closed_90_trail(make_dims(11, 8), Vertex(2, 4))  # d=3 divides neither


def test_180_trail_2x2_open_merged():
    trail = build_180_trail(make_dims(2, 2), Vertex(1, 1))
    assert not trail.closed and trail.angle_at_root == 180
    assert trail.segments == (Segment((0, 0), (3, 3)),)


def test_180_trail_11x8_at_2_4():
    dims = make_dims(11, 8)
    trail = build_180_trail(dims, Vertex(2, 4))
    assert trail.angle_at_root == 180
    assert Vertex(2, 4) in trail_vertices(dims, trail)


def test_180_trail_rejects_wrong_vertex():
    with pytest.raises(ValueError):
        build_180_trail(make_dims(11, 8), Vertex(3, 4))  # d=3 divides 3


def test_90_trail_root_ends_meet_at_right_angle():
    for m, n, i, j in [(3, 2, 1, 1), (5, 3, 2, 2), (11, 8, 3, 4), (9, 4, 5, 2)]:
        dims = make_dims(m, n)
        trail = build_closed_90_trail(dims, Vertex(i, j))
        root = (i, j)
        slopes = [s.slope for s in trail.segments if root in (s.p, s.q)]
        assert sorted(slopes) == [-1, 1]


def test_180_trail_root_ends_collinear():
    for m, n, i, j in [(11, 8, 2, 4), (19, 14, 1, 1), (2, 2, 2, 1)]:
        dims = make_dims(m, n)
        trail = build_180_trail(dims, Vertex(i, j))
        root = (i, j)
        if trail.closed:
            slopes = [s.slope for s in trail.segments if root in (s.p, s.q)]
            assert len(slopes) == 2 and slopes[0] == slopes[1]
        else:
            through = [
                s
                for s in trail.segments
                if root in s.lattice_points() and root not in (s.p, s.q)
            ]
            assert len(through) == 1


def test_exactly_one_construction_applies_everywhere():
    # the two preconditions partition the vertices, and each build succeeds
    for m in range(1, 13):
        for n in range(1, 13):
            dims = make_dims(m, n)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    v = Vertex(i, j)
                    ninety = i % dims.d == 0 or j % dims.d == 0
                    if ninety:
                        trail = build_closed_90_trail(dims, v)
                        assert trail.closed and trail.angle_at_root == 90
                        with pytest.raises(ValueError):
                            build_180_trail(dims, v)
                    else:
                        trail = build_180_trail(dims, v)
                        assert trail.angle_at_root == 180
                        with pytest.raises(ValueError):
                            build_closed_90_trail(dims, v)
                    # the stopping rules never let a trail retrace a segment
                    canon = [s.canonical() for s in trail.segments]
                    assert len(set(canon)) == len(canon)


def test_segment_lattice_points_and_lines():
    s = Segment((4, 2), (2, 0))
    assert s.lattice_points() == [(4, 2), (3, 1), (2, 0)]
    assert s.slope == 1
    assert s.line_id() == ("diff", 2)
    t = Segment((3, 3), (4, 2))
    assert t.slope == -1
    assert t.line_id() == ("sum", 6)
