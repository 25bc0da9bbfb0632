"""Addressing scheme for the grid graph G_{m,n}.

Vertices are ``(i, j)`` with ``0 <= i <= m+1`` and ``0 <= j <= n+1`` minus the
four corners.  Edges are written ``("H", i, j)`` for ``v[i,j] - v[i,j+1]`` and
``("V", i, j)`` for ``v[i,j] - v[i+1,j]``.  Face ``(i, j)`` is the unit square
whose upper-left corner is ``v[i,j]``; it is also the cell holding ``h[i,j]`` of
a height function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator

Edge = tuple[str, int, int]
Vertex = tuple[int, int]
Face = tuple[int, int]


@dataclass(frozen=True, order=True)
class Dims:
    m: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("dimensions must be integers")
        if self.m < 1 or self.n < 1:
            raise ValueError(f"dimensions must be positive, got ({self.m}, {self.n})")

    def swapped(self) -> Dims:
        return Dims(self.n, self.m)


class FaceKind(str, Enum):
    BOUNDARY = "boundary"
    INTERIOR = "interior"
    RIGHT = "right-exterior"
    BOTTOM = "bottom-exterior"
    CORNER = "corner-exterior"


def is_vertex(dims: Dims, v: Vertex) -> bool:
    i, j = v
    if not (0 <= i <= dims.m + 1 and 0 <= j <= dims.n + 1):
        return False
    return not (i in (0, dims.m + 1) and j in (0, dims.n + 1))


def is_interior_vertex(dims: Dims, v: Vertex) -> bool:
    return 1 <= v[0] <= dims.m and 1 <= v[1] <= dims.n


def is_even(i: int, j: int) -> bool:
    return (i + j) % 2 == 0


def is_edge(dims: Dims, e: Edge) -> bool:
    kind, i, j = e
    if kind == "H":
        return 1 <= i <= dims.m and 0 <= j <= dims.n
    if kind == "V":
        return 0 <= i <= dims.m and 1 <= j <= dims.n
    return False


def endpoints(e: Edge) -> tuple[Vertex, Vertex]:
    """Endpoints of an edge, the one with smaller ``i + j`` first."""
    kind, i, j = e
    if kind == "H":
        return (i, j), (i, j + 1)
    return (i, j), (i + 1, j)


@lru_cache(maxsize=None)
def all_edges(dims: Dims) -> tuple[Edge, ...]:
    """Every edge of G_{m,n}, sorted."""
    out: list[Edge] = []
    for i in range(1, dims.m + 1):
        for j in range(dims.n + 1):
            out.append(("H", i, j))
    for i in range(dims.m + 1):
        for j in range(1, dims.n + 1):
            out.append(("V", i, j))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def edge_index(dims: Dims) -> dict[Edge, int]:
    return {e: k for k, e in enumerate(all_edges(dims))}


def incident_edges(dims: Dims, v: Vertex) -> list[Edge]:
    i, j = v
    candidates = [("H", i, j - 1), ("H", i, j), ("V", i - 1, j), ("V", i, j)]
    return [e for e in candidates if is_edge(dims, e)]


@lru_cache(maxsize=None)
def forced_edges(dims: Dims) -> frozenset[Edge]:
    """Boundary edges every partial fully-packed loop must contain."""
    top = {("V", 0, j) for j in range(1, dims.n + 1, 2)}
    left = {("H", i, 0) for i in range(2, dims.m + 1, 2)}
    return frozenset(top | left)


def faces(dims: Dims) -> Iterator[Face]:
    for i in range(dims.m + 1):
        for j in range(dims.n + 1):
            yield (i, j)


def face_kind(dims: Dims, face: Face) -> FaceKind:
    i, j = face
    m, n = dims.m, dims.n
    if not (0 <= i <= m and 0 <= j <= n):
        raise ValueError(f"face {face} out of range for {m}x{n}")
    if i == 0 or j == 0:
        return FaceKind.BOUNDARY
    if i == m and j == n:
        return FaceKind.CORNER
    if j == n:
        return FaceKind.RIGHT
    if i == m:
        return FaceKind.BOTTOM
    return FaceKind.INTERIOR


def face_sides(face: Face) -> dict[str, Edge]:
    """The four sides of a face by position.  Some may not be edges of G_{m,n}."""
    i, j = face
    return {
        "top": ("H", i, j),
        "bottom": ("H", i + 1, j),
        "left": ("V", i, j),
        "right": ("V", i, j + 1),
    }


def action_faces(dims: Dims) -> list[Face]:
    """Faces the local moves act on, row-major: ``1 <= i <= m``, ``1 <= j <= n``."""
    return [(i, j) for i in range(1, dims.m + 1) for j in range(1, dims.n + 1)]
