"""Local moves and gyration on partial fully-packed loops, partial link
patterns, and the partial-rotation checker."""

from __future__ import annotations

from dataclasses import dataclass, field

from .grid import Dims, Edge, Face, FaceKind, action_faces, all_edges, face_kind, face_sides, incident_edges
from .objects import PartialFpl, PartialHeightFunction, PartialLinkPattern, Pasm, _as_matrix, total_sum

# For each exterior kind: the sides that exist and the two contents the move swaps.
_SWAPS: dict[FaceKind, tuple[tuple[str, ...], frozenset[str], frozenset[str]]] = {
    FaceKind.INTERIOR: (
        ("top", "bottom", "left", "right"),
        frozenset({"top", "bottom"}),
        frozenset({"left", "right"}),
    ),
    FaceKind.RIGHT: (("top", "bottom", "left"), frozenset({"left"}), frozenset({"top", "bottom"})),
    FaceKind.BOTTOM: (("top", "left", "right"), frozenset({"top"}), frozenset({"left", "right"})),
    FaceKind.CORNER: (("top", "left"), frozenset({"left"}), frozenset({"top"})),
}


def move_kind(F: PartialFpl, face: Face) -> str:
    """``"<kind>-swap"`` if the local move at ``face`` changes F, else ``"noop"``."""
    kind = face_kind(F.dims, face)
    if kind is FaceKind.BOUNDARY:
        return "noop"
    names, a, b = _SWAPS[kind]
    sides = face_sides(face)
    content = frozenset(s for s in names if sides[s] in F.edges)
    if content in (a, b):
        return f"{kind.value}-swap" if kind is not FaceKind.INTERIOR else "interior-swap"
    return "noop"


def _apply(edges: set[Edge], dims: Dims, face: Face) -> None:
    kind = face_kind(dims, face)
    if kind is FaceKind.BOUNDARY:
        return
    names, a, b = _SWAPS[kind]
    sides = face_sides(face)
    content = frozenset(s for s in names if sides[s] in edges)
    if content == a:
        new = b
    elif content == b:
        new = a
    else:
        return
    for s in content:
        edges.discard(sides[s])
    for s in new:
        edges.add(sides[s])


def local_move(F: PartialFpl, face: Face) -> PartialFpl:
    face_kind(F.dims, face)  # range check
    edges = set(F.edges)
    _apply(edges, F.dims, face)
    return PartialFpl(F.dims, frozenset(edges))


def _sweep(F: PartialFpl, parities: tuple[int, ...]) -> PartialFpl:
    edges = set(F.edges)
    faces = action_faces(F.dims)
    for p in parities:
        for f in faces:
            if (f[0] + f[1]) % 2 == p:
                _apply(edges, F.dims, f)
    return PartialFpl(F.dims, frozenset(edges))


def gyrate(F: PartialFpl) -> PartialFpl:
    """Local moves on all even faces, then all odd faces."""
    return _sweep(F, (0, 1))


def gyrate_inverse(F: PartialFpl) -> PartialFpl:
    return _sweep(F, (1, 0))


def height_flip(h: PartialHeightFunction, i: int, j: int) -> PartialHeightFunction:
    """Move ``h[i,j]`` by 2 when all its existing neighbours agree; else unchanged."""
    m, n = h.dims.m, h.dims.n
    if not (1 <= i <= m and 1 <= j <= n):
        raise ValueError(f"cell ({i}, {j}) cannot change")
    e = h.entries
    nbrs = {e[a][b] for a, b in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)) if a <= m and b <= n}
    if len(nbrs) != 1:
        return h
    x = e[i][j]
    (y,) = nbrs
    new = [list(r) for r in e]
    new[i][j] = 2 * y - x
    if new[i][j] < 0:
        return h
    return PartialHeightFunction(h.dims, _as_matrix(new))


# --- partial link patterns ----------------------------------------------------

def exit_labels(dims: Dims) -> dict[tuple[int, int], int]:
    """Boundary vertex of each labelled exit -> label.

    Left exits ``v[i,0]`` (i even) count up from the bottom, then top exits
    ``v[0,j]`` (j odd) from left to right.
    """
    out: dict[tuple[int, int], int] = {}
    k = 0
    for i in range(dims.m - dims.m % 2, 1, -2):
        k += 1
        out[(i, 0)] = k
    for j in range(1, dims.n + 1, 2):
        k += 1
        out[(0, j)] = k
    return out


def trace(F: PartialFpl, start: tuple[int, int]) -> tuple[int, int]:
    """Follow the path of F from boundary vertex ``start`` to its other end."""
    dims = F.dims
    prev: Edge | None = None
    v = start
    while True:
        nxt = [e for e in incident_edges(dims, v) if e in F.edges and e != prev]
        if not nxt:
            return v
        if len(nxt) > 1 and v != start:
            raise ValueError(f"vertex {v} has degree above 2")
        e = nxt[0]
        kind, i, j = e
        a, b = ((i, j), (i, j + 1)) if kind == "H" else ((i, j), (i + 1, j))
        v = b if v == a else a
        prev = e


def link_pattern(F: PartialFpl) -> PartialLinkPattern:
    labels = exit_labels(F.dims)
    arcs = set()
    for v, lab in labels.items():
        other = trace(F, v)
        if other in labels and labels[other] != lab:
            arcs.add(tuple(sorted((lab, labels[other]))))
    return PartialLinkPattern(F.dims, frozenset(arcs))


@dataclass
class RotationReport:
    """Outcome of checking the partial rotation of one configuration."""

    checked: list[tuple[int, int]] = field(default_factory=list)
    violations: list[tuple[tuple[int, int], int | None, int | None]] = field(default_factory=list)
    # arcs touching label 1, with the partners of their shifted labels afterwards
    excluded: list[tuple[tuple[int, int], int | None]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_partial_rotation(F: PartialFpl) -> RotationReport:
    before = link_pattern(F)
    after = link_pattern(gyrate(F)).matching()
    report = RotationReport()
    for a, b in sorted(before.arcs):
        if a == 1:
            report.excluded.append(((a, b), after.get(b - 1)))
            continue
        report.checked.append((a, b))
        pa, pb = after.get(a - 1), after.get(b - 1)
        if pa == b - 1:
            continue
        if pa is None and pb is None:
            continue
        report.violations.append(((a, b), pa, pb))
    return report


# --- completion to a full alternating sign matrix ------------------------------

def is_asm(M: Pasm) -> bool:
    """Square, valid as a partial ASM, and every row and column sums to 1."""
    if M.dims.m != M.dims.n or M.violations():
        return False
    return all(sum(r) == 1 for r in M.entries) and all(sum(M.column(j)) == 1 for j in range(1, M.dims.n + 1))


def complete_to_asm(M: Pasm) -> tuple[Pasm, int]:
    """Embed M in a square ASM of order ``m + n - total_sum(M)``.

    Zero-sum rows get a +1 in new columns prepended on the left and zero-sum
    columns get a +1 in new rows appended below, so M is the upper-right
    block.  Returns the ASM and the column offset of that block.
    """
    m, n = M.dims.m, M.dims.n
    zero_rows = [i for i, r in enumerate(M.entries) if sum(r) == 0]
    zero_cols = [j for j in range(n) if sum(r[j] for r in M.entries) == 0]
    p, q = len(zero_rows), len(zero_cols)
    N = p + n
    assert m + q == N == m + n - total_sum(M)
    A = [[0] * N for _ in range(N)]
    for i in range(m):
        A[i][p:] = M.entries[i]
    for k, i in enumerate(zero_rows):
        A[i][k] = 1
    for k, j in enumerate(zero_cols):
        A[m + k][p + j] = 1
    out = Pasm(Dims(N, N), _as_matrix(A))
    if not is_asm(out):
        raise AssertionError("completion is not an alternating sign matrix")
    return out, p


def fpl_key(F: PartialFpl) -> bytes:
    """Canonical hash input: one byte per edge of G_{m,n} in sorted order."""
    return bytes(e in F.edges for e in all_edges(F.dims))
