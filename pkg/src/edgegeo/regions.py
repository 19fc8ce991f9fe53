"""Vertex labeling against a closed right-angle trail.

The closed trail is a closed polygonal curve, so mod-2 crossing parity of
a horizontal ray cast from each vertex yields a proper two-coloring of
the plane regions it cuts out, with the unbounded side even. Vertices on
the trail itself get their own label.

Crossing rule for a rightward ray from (i, j): a segment with endpoints
(x1, y1), (x2, y2) crosses at abscissa x* = x1 + slope * (j - y1); it
counts iff min(y1, y2) <= j < max(y1, y2) (half-open, so reflection V's
and junctions are never double-counted) and x* > i. Slope-one segments
are never tangent to a horizontal line, so every counted incidence is a
true crossing. Odd count: positive region; even: negative.
"""

from __future__ import annotations

from typing import Literal

from .billiard import Trail, trail_vertices
from .core import GridDims, Vertex

Label = Literal["on_trail", "positive", "negative"]
ON_TRAIL: Label = "on_trail"
POSITIVE: Label = "positive"
NEGATIVE: Label = "negative"

VertexLabeling = dict[Vertex, Label]


def label_vertices(dims: GridDims, trail: Trail) -> VertexLabeling:
    """Label every grid vertex relative to a closed 90-degree trail."""
    if not trail.closed or trail.angle_at_root != 90:
        raise ValueError("labeling is defined only for closed 90-degree trails")

    m, n = dims.m, dims.n
    on_trail = trail_vertices(dims, trail)

    # Bucket crossing abscissae per row, then suffix-sum so that
    # counts[j][i] = number of crossings strictly right of column i.
    buckets = [[0] * (m + 2) for _ in range(n + 2)]
    for seg in trail.segments:
        (x1, y1), (x2, y2) = seg
        slope = seg.slope
        lo, hi = min(y1, y2), max(y1, y2)
        for j in range(max(1, lo), min(n, hi - 1) + 1):
            buckets[j][x1 + slope * (j - y1)] += 1

    labels: VertexLabeling = {}
    for j in range(1, n + 1):
        row = buckets[j]
        right_of = 0
        counts = [0] * (m + 1)
        for i in range(m, 0, -1):
            right_of += row[i + 1]
            counts[i] = right_of
        for i in range(1, m + 1):
            v = Vertex(i, j)
            if v in on_trail:
                labels[v] = ON_TRAIL
            else:
                labels[v] = POSITIVE if counts[i] % 2 == 1 else NEGATIVE
    return labels
