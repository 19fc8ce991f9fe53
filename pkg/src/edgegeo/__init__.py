"""Undirected edge geography on grid graphs.

Win/loss classification of any root in constant time, constructive
even-kernel strategies from billiard trails, brute-force oracles for
verification, and interfaces (CLI / HTTP) for playing against the engine.
"""

from .billiard import (
    NE,
    NW,
    SE,
    SW,
    Direction,
    RayPath,
    Segment,
    Trail,
    build_180_trail,
    build_closed_90_trail,
    trace_ray,
)
from .core import (
    Edge,
    EdgeAlreadyRemovedError,
    EdgeSet,
    GameState,
    GridDims,
    IllegalMoveError,
    InternalInvariantError,
    N,
    NonAdjacentMoveError,
    Outcome,
    P,
    Vertex,
    apply_move,
    legal_moves,
    make_dims,
    make_edge,
    neighbors,
    parity,
    total_edges,
)
from .kernels import (
    VertexSet,
    is_even_kernel,
    kernel_from_90,
    kernel_from_180,
    kernel_memberships,
    stripe_kernel,
)
from .oracle import (
    brute_outcome,
    enumerate_even_kernels,
    gf2_kernel,
    verify_sweep,
)
from .regions import NEGATIVE, ON_TRAIL, POSITIVE, VertexLabeling, label_vertices
from .solver import Session, classify, engine_reply, hint, new_session, winning_move

__all__ = [
    "Direction",
    "Edge",
    "EdgeAlreadyRemovedError",
    "EdgeSet",
    "GameState",
    "GridDims",
    "IllegalMoveError",
    "InternalInvariantError",
    "N",
    "NE",
    "NEGATIVE",
    "NW",
    "NonAdjacentMoveError",
    "ON_TRAIL",
    "Outcome",
    "P",
    "POSITIVE",
    "RayPath",
    "SE",
    "SW",
    "Segment",
    "Session",
    "Trail",
    "Vertex",
    "VertexLabeling",
    "VertexSet",
    "apply_move",
    "brute_outcome",
    "build_180_trail",
    "build_closed_90_trail",
    "classify",
    "engine_reply",
    "enumerate_even_kernels",
    "gf2_kernel",
    "hint",
    "is_even_kernel",
    "kernel_from_90",
    "kernel_from_180",
    "kernel_memberships",
    "label_vertices",
    "legal_moves",
    "make_dims",
    "make_edge",
    "neighbors",
    "new_session",
    "parity",
    "stripe_kernel",
    "total_edges",
    "trace_ray",
    "verify_sweep",
    "winning_move",
]
