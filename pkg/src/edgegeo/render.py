"""Deterministic board drawings: one-char-per-vertex ASCII and standalone SVG.

The SVG uses the same embedding as the analysis geometry: origin at the
bottom-left of the rectangle [0, m+1] x [0, n+1], diagonal segments drawn
literally. Output is byte-identical across runs for identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .billiard import Trail, trail_vertices
from .core import GridDims, Vertex, all_edges
from .kernels import VertexSet
from .regions import POSITIVE, VertexLabeling

SCALE = 40
PAD = 20

VALID_OVERLAYS = ("trail", "kernel", "labels", "root")


@dataclass(frozen=True)
class RenderSpec:
    target: str = "ascii"  # ascii | svg
    overlays: frozenset[str] = field(default_factory=frozenset)
    out: str | None = None

    def __post_init__(self):
        if self.target not in ("ascii", "svg"):
            raise ValueError(f"unknown render target {self.target!r}")
        unknown = set(self.overlays) - set(VALID_OVERLAYS)
        if unknown:
            raise ValueError(f"unknown overlays: {sorted(unknown)}")


def render_ascii(
    dims: GridDims,
    *,
    root: Vertex | None = None,
    kernel: VertexSet | frozenset = frozenset(),
    trail: Trail | None = None,
    labels: VertexLabeling | None = None,
) -> str:
    """Vertex map, top row first: @ root, # kernel, + trail, o positive, . other."""
    on_trail = trail_vertices(dims, trail) if trail is not None else set()
    rows = []
    for j in range(dims.n, 0, -1):
        row = []
        for i in range(1, dims.m + 1):
            v = Vertex(i, j)
            if root is not None and v == root:
                row.append("@")
            elif v in kernel:
                row.append("#")
            elif v in on_trail:
                row.append("+")
            elif labels is not None and labels.get(v) == POSITIVE:
                row.append("o")
            else:
                row.append(".")
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def _sx(x: int) -> int:
    return PAD + x * SCALE


def _sy(dims: GridDims, y: int) -> int:
    return PAD + (dims.n + 1 - y) * SCALE


def render_svg(
    dims: GridDims,
    *,
    root: Vertex | None = None,
    kernel: VertexSet | frozenset = frozenset(),
    trail: Trail | None = None,
    labels: VertexLabeling | None = None,
    move: Vertex | None = None,
) -> str:
    """Standalone SVG document of the board with the requested overlays."""
    width = 2 * PAD + (dims.m + 1) * SCALE
    height = 2 * PAD + (dims.n + 1) * SCALE
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="{_sx(0)}" y="{_sy(dims, dims.n + 1)}" '
        f'width="{(dims.m + 1) * SCALE}" height="{(dims.n + 1) * SCALE}" '
        'fill="white" stroke="#888" stroke-width="1"/>',
    ]

    for e in all_edges(dims):
        (x1, y1), (x2, y2) = e
        out.append(
            f'<line x1="{_sx(x1)}" y1="{_sy(dims, y1)}" '
            f'x2="{_sx(x2)}" y2="{_sy(dims, y2)}" stroke="#cccccc" stroke-width="2"/>'
        )

    if labels is not None:
        for v in sorted(labels):
            if labels[v] == POSITIVE:
                out.append(
                    f'<circle cx="{_sx(v.i)}" cy="{_sy(dims, v.j)}" r="14" '
                    'fill="#bcd9f5"/>'
                )

    if trail is not None:
        for seg in trail.segments:
            (x1, y1), (x2, y2) = seg
            out.append(
                f'<line x1="{_sx(x1)}" y1="{_sy(dims, y1)}" '
                f'x2="{_sx(x2)}" y2="{_sy(dims, y2)}" '
                'stroke="#1f6feb" stroke-width="3"/>'
            )

    for j in range(1, dims.n + 1):
        for i in range(1, dims.m + 1):
            v = Vertex(i, j)
            if v in kernel:
                out.append(
                    f'<circle cx="{_sx(i)}" cy="{_sy(dims, j)}" r="8" fill="#111111"/>'
                )
            else:
                out.append(
                    f'<circle cx="{_sx(i)}" cy="{_sy(dims, j)}" r="4" fill="#555555"/>'
                )

    if move is not None:
        out.append(
            f'<circle cx="{_sx(move.i)}" cy="{_sy(dims, move.j)}" r="12" '
            'fill="none" stroke="#d62728" stroke-width="3"/>'
        )
    if root is not None:
        out.append(
            f'<circle cx="{_sx(root.i)}" cy="{_sy(dims, root.j)}" r="12" '
            'fill="none" stroke="#2a7de1" stroke-width="3"/>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
