"""Value types for the seven equinumerous families and partial link patterns.

Constructors only check structure (shapes, index ranges).  Definitional
invariants are reported by :func:`validate`, so invalid objects can be built,
inspected and diagnosed.  Use ``obj.check()`` to raise on violations.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .grid import Dims, Edge, all_edges, endpoints, forced_edges, incident_edges, is_edge

Matrix = tuple[tuple[int, ...], ...]


class StructuralError(ValueError):
    """Shape or index-range mismatch; distinct from an invariant violation."""


class InvariantError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        first = self.violations[0]
        more = f" (+{len(self.violations) - 1} more)" if len(self.violations) > 1 else ""
        super().__init__(f"{first}{more}")


@dataclass(frozen=True)
class Violation:
    invariant: str
    location: tuple = ()

    def __str__(self) -> str:
        if len(self.location) == 1:
            return f"{self.invariant} at index {self.location[0]}"
        if self.location:
            return f"{self.invariant} at {self.location}"
        return self.invariant


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...] = ()
    structural: str | None = None

    @property
    def ok(self) -> bool:
        return self.structural is None and not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    try:
        return tuple(tuple(operator.index(x) for x in row) for row in rows)
    except TypeError as exc:
        raise StructuralError(f"entries must be integers: {exc}") from None


def _check_shape(entries: Matrix, rows: int, cols: int, what: str) -> None:
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise StructuralError(f"{what} must be {rows}x{cols}")


class _Checked:
    def violations(self) -> list[Violation]:
        raise NotImplementedError

    def check(self):
        found = self.violations()
        if found:
            raise InvariantError(found)
        return self

    def is_valid(self) -> bool:
        return not self.violations()


def _alternates(seq: Sequence[int]) -> bool:
    nz = [x for x in seq if x]
    return all(a != b for a, b in zip(nz, nz[1:]))


@dataclass(frozen=True)
class Pasm(_Checked):
    """An m x n partial alternating sign matrix; ``entry(i, j)`` is 1-based."""

    dims: Dims
    entries: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _as_matrix(self.entries))
        _check_shape(self.entries, self.dims.m, self.dims.n, "Pasm entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Pasm:
        if not rows or not rows[0]:
            raise StructuralError("matrix must be non-empty")
        return cls(Dims(len(rows), len(rows[0])), _as_matrix(rows))

    @classmethod
    def zero(cls, dims: Dims) -> Pasm:
        return cls(dims, tuple((0,) * dims.n for _ in range(dims.m)))

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.dims.m and 1 <= j <= self.dims.n):
            raise IndexError(f"Pasm index ({i}, {j}) out of range")
        return self.entries[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j - 1] for row in self.entries)

    def violations(self) -> list[Violation]:
        out: list[Violation] = []
        m, n = self.dims.m, self.dims.n
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if self.entry(i, j) not in (-1, 0, 1):
                    out.append(Violation("entry not in {-1,0,1}", (i, j)))
        if out:
            return out
        for i in range(1, m + 1):
            row = self.entries[i - 1]
            if sum(row) not in (0, 1):
                out.append(Violation("row sum not in {0,1}", (i,)))
            if not _alternates(row):
                out.append(Violation("nonzero entries in row do not alternate", (i,)))
            nz = [x for x in row if x]
            if nz and nz[-1] != 1:
                out.append(Violation("last nonzero entry in row is not 1", (i,)))
        for j in range(1, n + 1):
            col = self.column(j)
            if sum(col) not in (0, 1):
                out.append(Violation("column sum not in {0,1}", (j,)))
            if not _alternates(col):
                out.append(Violation("nonzero entries in column do not alternate", (j,)))
            nz = [x for x in col if x]
            if nz and nz[0] != 1:
                out.append(Violation("first nonzero entry in column is not 1", (j,)))
        return out

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x:2d}" for x in row) for row in self.entries)


def total_sum(M: Pasm) -> int:
    return sum(sum(row) for row in M.entries)


def transpose_map(M: Pasm) -> Pasm:
    """Send row i of M, reversed, to column m-i+1 of an n x m matrix."""
    m, n = M.dims.m, M.dims.n
    out = [[0] * m for _ in range(n)]
    for i in range(m):
        for j in range(n):
            out[n - 1 - j][m - 1 - i] = M.entries[i][j]
    return Pasm(M.dims.swapped(), _as_matrix(out))


@dataclass(frozen=True)
class PartialMonotoneTriangle(_Checked):
    """Triangular array; ``rows[i-1]`` is row i and has length i."""

    dims: Dims
    rows: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _as_matrix(self.rows))
        if len(self.rows) != self.dims.m:
            raise StructuralError(f"triangle must have {self.dims.m} rows")
        for i, row in enumerate(self.rows, start=1):
            if len(row) != i:
                raise StructuralError(f"triangle row {i} must have length {i}")

    def a(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def violations(self) -> list[Violation]:
        out: list[Violation] = []
        m, n = self.dims.m, self.dims.n
        for i in range(1, m + 1):
            for j in range(1, i + 1):
                if not 0 <= self.a(i, j) <= n:
                    out.append(Violation("entry not in {0..n}", (i, j)))
        if out:
            return out
        for i in range(1, m + 1):
            for j in range(1, i):
                x, y = self.a(i, j), self.a(i, j + 1)
                if x > y:
                    out.append(Violation("row not weakly increasing", (i, j)))
                elif x and x == y:
                    out.append(Violation("nonzero row entries not strictly increasing", (i, j)))
        for i in range(2, m + 1):
            for j in range(1, i):
                if self.a(i, j) > self.a(i - 1, j):
                    out.append(Violation("diagonal a[i,j] <= a[i-1,j] fails", (i, j)))
                if self.a(i - 1, j) > self.a(i, j + 1):
                    out.append(Violation("diagonal a[i,j] <= a[i+1,j+1] fails", (i - 1, j)))
        return out


@dataclass(frozen=True)
class CornerSumMatrix(_Checked):
    """(m+1) x (n+1) matrix indexed from 0 as ``at(i, j)``."""

    dims: Dims
    entries: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _as_matrix(self.entries))
        _check_shape(self.entries, self.dims.m + 1, self.dims.n + 1, "corner-sum entries")

    def at(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def violations(self) -> list[Violation]:
        out: list[Violation] = []
        m, n = self.dims.m, self.dims.n
        for j in range(n + 1):
            if self.at(0, j):
                out.append(Violation("first row not zero", (0, j)))
        for i in range(m + 1):
            if self.at(i, n):
                out.append(Violation("last column not zero", (i, n)))
        for i in range(m):
            for j in range(n + 1):
                if self.at(i + 1, j) - self.at(i, j) not in (0, 1):
                    out.append(Violation("vertical step not in {0,1}", (i + 1, j)))
        for i in range(m + 1):
            for j in range(1, n + 1):
                if self.at(i, j - 1) - self.at(i, j) not in (0, 1):
                    out.append(Violation("horizontal step not in {0,1}", (i, j - 1)))
        return out


@dataclass(frozen=True)
class PartialHeightFunction(_Checked):
    """(m+1) x (n+1) matrix indexed from 0 as ``at(i, j)``."""

    dims: Dims
    entries: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _as_matrix(self.entries))
        _check_shape(self.entries, self.dims.m + 1, self.dims.n + 1, "height entries")

    @classmethod
    def minimal_ideal(cls, dims: Dims) -> PartialHeightFunction:
        """``h[i,j] = i + j``, the image of the zero matrix."""
        return cls(dims, tuple(tuple(i + j for j in range(dims.n + 1)) for i in range(dims.m + 1)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def violations(self) -> list[Violation]:
        out: list[Violation] = []
        m, n = self.dims.m, self.dims.n
        for i in range(m + 1):
            for j in range(n + 1):
                if self.at(i, j) < 0:
                    out.append(Violation("negative entry", (i, j)))
        for k in range(n + 1):
            if self.at(0, k) != k:
                out.append(Violation("first row is not 0..n", (0, k)))
        for k in range(m + 1):
            if self.at(k, 0) != k:
                out.append(Violation("first column is not 0..m", (k, 0)))
        for i in range(m + 1):
            for j in range(n):
                if abs(self.at(i, j + 1) - self.at(i, j)) != 1:
                    out.append(Violation("row-adjacent entries differ by other than 1", (i, j)))
        for i in range(m):
            for j in range(n + 1):
                if abs(self.at(i + 1, j) - self.at(i, j)) != 1:
                    out.append(Violation("column-adjacent entries differ by other than 1", (i, j)))
        return out


@dataclass(frozen=True)
class PartialFpl(_Checked):
    dims: Dims
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        edges = frozenset((str(k), int(i), int(j)) for k, i, j in self.edges)
        bad = [e for e in edges if not is_edge(self.dims, e)]
        if bad:
            raise StructuralError(f"not an edge of G_{{{self.dims.m},{self.dims.n}}}: {sorted(bad)[0]}")
        object.__setattr__(self, "edges", edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: tuple[int, int]) -> int:
        return sum(1 for e in incident_edges(self.dims, v) if e in self.edges)

    def violations(self) -> list[Violation]:
        out: list[Violation] = []
        for e in sorted(forced_edges(self.dims) - self.edges):
            out.append(Violation("forced boundary edge missing", e))
        forced = forced_edges(self.dims)
        for e in sorted(self.edges - forced):
            kind, i, j = e
            if (kind == "V" and i == 0) or (kind == "H" and j == 0):
                out.append(Violation("unforced top or left boundary edge present", e))
        for i in range(1, self.dims.m + 1):
            for j in range(1, self.dims.n + 1):
                if self.degree((i, j)) != 2:
                    out.append(Violation("interior vertex degree is not 2", (i, j)))
        return out


@dataclass(frozen=True)
class RectIce(_Checked):
    """Orientation of G_{m,n}, one bit per edge.

    ``forward`` holds the edges whose head is the endpoint with larger ``i+j``
    (east for ``H`` edges, south for ``V`` edges); every other edge points
    backward.
    """

    dims: Dims
    forward: frozenset[Edge]

    def __post_init__(self) -> None:
        fwd = frozenset((str(k), int(i), int(j)) for k, i, j in self.forward)
        bad = [e for e in fwd if not is_edge(self.dims, e)]
        if bad:
            raise StructuralError(f"not an edge of G_{{{self.dims.m},{self.dims.n}}}: {sorted(bad)[0]}")
        object.__setattr__(self, "forward", fwd)

    def head(self, e: Edge) -> tuple[int, int]:
        lo, hi = endpoints(e)
        return hi if e in self.forward else lo

    def tail(self, e: Edge) -> tuple[int, int]:
        lo, hi = endpoints(e)
        return lo if e in self.forward else hi

    def bits(self) -> list[tuple[Edge, int]]:
        return [(e, int(e in self.forward)) for e in all_edges(self.dims)]

    def violations(self) -> list[Violation]:
        out: list[Violation] = []
        m, n = self.dims.m, self.dims.n
        for i in range(1, m + 1):
            e = ("H", i, 0)
            if self.head(e) != (i, 1):
                out.append(Violation("left boundary edge does not point inward", e))
        for j in range(1, n + 1):
            e = ("V", 0, j)
            if self.head(e) != (0, j):
                out.append(Violation("top boundary edge does not point outward", e))
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                indeg = sum(1 for e in incident_edges(self.dims, (i, j)) if self.head(e) == (i, j))
                if indeg != 2:
                    out.append(Violation("interior vertex in-degree is not 2", (i, j)))
        return out


def path_points(start: int, steps: str) -> list[tuple[int, int]]:
    """Lattice points (row, column) visited by a path starting at ``(start, 1)``."""
    r, c = start, 1
    pts = [(r, c)]
    for s in steps:
        if s == "S":
            r += 1
        else:
            c += 1
        pts.append((r, c))
    return pts


@dataclass(frozen=True)
class OsculatingNest(_Checked):
    """Paths as ``(start_row, steps)``; each starts at lattice point
    ``(start_row, 1)`` and takes south/east steps to the bottom row ``m``.
    Paths are stored sorted by start row."""

    dims: Dims
    paths: tuple[tuple[int, str], ...] = field(default=())

    def __post_init__(self) -> None:
        paths = tuple(sorted((int(r), str(s)) for r, s in self.paths))
        for r, s in paths:
            if set(s) - {"S", "E"}:
                raise StructuralError(f"path steps must be over {{S,E}}, got {s!r}")
            if not 1 <= r <= self.dims.m:
                raise StructuralError(f"path start row {r} outside 1..{self.dims.m}")
            end_r = r + s.count("S")
            end_c = 1 + s.count("E")
            if end_r > self.dims.m or end_c > self.dims.n:
                raise StructuralError(f"path from row {r} leaves the grid")
        object.__setattr__(self, "paths", paths)

    def violations(self) -> list[Violation]:
        out: list[Violation] = []
        m = self.dims.m
        starts = [r for r, _ in self.paths]
        if len(set(starts)) != len(starts):
            out.append(Violation("two paths share a starting point"))
        # per point: list of (incoming, outgoing) directions; the boundary edges
        # trimmed from each path count as an entry from W and an exit to S
        visits: dict[tuple[int, int], list[tuple[str, str]]] = {}
        for r, s in self.paths:
            pts = path_points(r, s)
            if pts[-1][0] != m:
                out.append(Violation("path does not end on the bottom row", (r,)))
            moves = ["W"] + ["N" if x == "S" else "W" for x in s]
            exits = [x for x in s] + ["S"]
            for p, a, b in zip(pts, moves, exits):
                visits.setdefault(p, []).append((a, b))
        for p in sorted(visits):
            v = visits[p]
            if len(v) == 1:
                continue
            if len(v) == 2 and sorted(v) == [("N", "E"), ("W", "S")]:
                continue
            out.append(Violation("paths meet other than by osculation", p))
        return out

    def __len__(self) -> int:
        return len(self.paths)


def link_label_count(dims: Dims) -> int:
    return dims.m // 2 + (dims.n + 1) // 2


def arcs_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (p, q), (r, s) = sorted(a), sorted(b)
    return p < r < q < s or r < p < s < q


@dataclass(frozen=True)
class PartialLinkPattern(_Checked):
    dims: Dims
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        arcs = frozenset(tuple(sorted((int(a), int(b)))) for a, b in self.arcs)
        object.__setattr__(self, "arcs", arcs)

    @property
    def size(self) -> int:
        return link_label_count(self.dims)

    def partner(self, label: int) -> int | None:
        for a, b in self.arcs:
            if a == label:
                return b
            if b == label:
                return a
        return None

    def matching(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in self.arcs:
            out[a] = b
            out[b] = a
        return out

    def violations(self) -> list[Violation]:
        out: list[Violation] = []
        seen: dict[int, int] = {}
        for a, b in sorted(self.arcs):
            if a == b:
                out.append(Violation("label matched to itself", (a,)))
            for x in (a, b):
                if not 1 <= x <= self.size:
                    out.append(Violation("label out of range", (x,)))
                seen[x] = seen.get(x, 0) + 1
        for x, k in sorted(seen.items()):
            if k > 1:
                out.append(Violation("label matched more than once", (x,)))
        arcs = sorted(self.arcs)
        for k, a in enumerate(arcs):
            for b in arcs[k + 1:]:
                if arcs_cross(a, b):
                    out.append(Violation("arcs cross", (a, b)))
        return out


def validate(obj: Any) -> Verdict:
    """Check every definitional invariant of ``obj``."""
    if not isinstance(obj, _Checked):
        return Verdict(structural=f"unsupported object type {type(obj).__name__}")
    try:
        found = obj.violations()
    except (IndexError, StructuralError) as exc:
        return Verdict(structural=str(exc))
    return Verdict(tuple(found))
