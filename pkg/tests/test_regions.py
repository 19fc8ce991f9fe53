import pytest

from edgegeo.billiard import build_180_trail, build_closed_90_trail, trail_vertices
from edgegeo.core import Vertex, make_dims
from edgegeo.kernels import is_even_kernel
from edgegeo.regions import NEGATIVE, ON_TRAIL, POSITIVE, label_vertices
from edgegeo.core import EdgeSet


def ray_cast_reference(dims, trail, leftward=False):
    """Per-vertex crossing count, straight from the definition."""
    on_trail = trail_vertices(dims, trail)
    labels = {}
    for i in range(1, dims.m + 1):
        for j in range(1, dims.n + 1):
            v = Vertex(i, j)
            if v in on_trail:
                labels[v] = ON_TRAIL
                continue
            crossings = 0
            for seg in trail.segments:
                (x1, y1), (x2, y2) = seg
                lo, hi = min(y1, y2), max(y1, y2)
                if not lo <= j < hi:
                    continue
                x_star = x1 + seg.slope * (j - y1)
                if (x_star < i) if leftward else (x_star > i):
                    crossings += 1
            labels[v] = POSITIVE if crossings % 2 else NEGATIVE
    return labels


def test_labels_3x2_exact():
    dims = make_dims(3, 2)
    labels = label_vertices(dims, build_closed_90_trail(dims, Vertex(1, 1)))
    assert {v for v, l in labels.items() if l == POSITIVE} == {(2, 1), (3, 2)}
    assert {v for v, l in labels.items() if l == ON_TRAIL} == {(1, 1), (2, 2), (3, 1)}
    assert {v for v, l in labels.items() if l == NEGATIVE} == {(1, 2)}


def test_every_vertex_gets_exactly_one_label():
    dims = make_dims(11, 8)
    labels = label_vertices(dims, build_closed_90_trail(dims, Vertex(3, 4)))
    assert len(labels) == 11 * 8
    assert set(labels.values()) <= {ON_TRAIL, POSITIVE, NEGATIVE}


def test_on_trail_is_exactly_the_segment_lattice_points():
    for m, n, i, j in [(3, 2, 1, 1), (5, 3, 2, 2), (11, 8, 3, 4), (8, 5, 3, 5)]:
        dims = make_dims(m, n)
        trail = build_closed_90_trail(dims, Vertex(i, j))
        labels = label_vertices(dims, trail)
        assert {v for v, l in labels.items() if l == ON_TRAIL} == trail_vertices(
            dims, trail
        )


def test_matches_reference_implementation_both_ray_directions():
    for m in range(1, 11):
        for n in range(1, 11):
            dims = make_dims(m, n)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    if i % dims.d != 0 and j % dims.d != 0:
                        continue
                    trail = build_closed_90_trail(dims, Vertex(i, j))
                    labels = label_vertices(dims, trail)
                    assert labels == ray_cast_reference(dims, trail)
                    assert labels == ray_cast_reference(dims, trail, leftward=True)


def test_rejects_open_or_180_trails():
    dims = make_dims(2, 2)
    with pytest.raises(ValueError):
        label_vertices(dims, build_180_trail(dims, Vertex(1, 1)))


def test_vertex_with_no_crossing_to_the_right_is_negative():
    found = 0
    for m in range(2, 9):
        for n in range(2, 9):
            dims = make_dims(m, n)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    if i % dims.d != 0 and j % dims.d != 0:
                        continue
                    trail = build_closed_90_trail(dims, Vertex(i, j))
                    labels = label_vertices(dims, trail)
                    on_trail = trail_vertices(dims, trail)
                    for a in range(1, m + 1):
                        for b in range(1, n + 1):
                            v = Vertex(a, b)
                            if v in on_trail:
                                continue
                            crossings = sum(
                                1
                                for seg in trail.segments
                                if min(seg.p[1], seg.q[1])
                                <= b
                                < max(seg.p[1], seg.q[1])
                                and seg.p[0] + seg.slope * (b - seg.p[1]) > a
                            )
                            if crossings == 0:
                                found += 1
                                assert labels[v] == NEGATIVE
    assert found > 0


def test_downstream_kernels_pass_checker_small_boards():
    # the load-bearing soundness check at unit-test scale (full range in acceptance)
    from edgegeo.kernels import kernel_from_90
    from edgegeo.core import make_edge

    for m in range(2, 9):
        for n in range(2, 9):
            dims = make_dims(m, n)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    if i % dims.d != 0 and j % dims.d != 0:
                        continue
                    u = Vertex(i, j)
                    v, kernel = kernel_from_90(dims, u)
                    removed = EdgeSet.empty(dims).with_edge(make_edge(u, v))
                    assert v in kernel
                    assert is_even_kernel(dims, removed, kernel), (m, n, u)
