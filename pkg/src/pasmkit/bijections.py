"""Explicit bijections among the seven families.

Conventions pinned by the running 4x4 example:

* corner sums count the north-east block, ``c[i,j] = sum M[i',j']`` over
  ``i' <= i`` and ``j' > j``;
* ``h[i,j] = i + j - 2 c[i,n-j]``, so the height function is the mirror image
  of the matrix: interior vertex ``v[i,j]`` of the grid sits at matrix entry
  ``(i, n+1-j)``;
* height-function cell ``(i, j)`` is grid face ``(i, j)`` and corresponds to
  the poset fiber over ``(i-1, j-1)``.
"""

from __future__ import annotations

from typing import Callable

from .grid import Edge, all_edges, endpoints, is_even
from .objects import (
    CornerSumMatrix,
    InvariantError,
    Matrix,
    OsculatingNest,
    PartialFpl,
    PartialHeightFunction,
    PartialLinkPattern,
    PartialMonotoneTriangle,
    Pasm,
    RectIce,
    _as_matrix,
    total_sum,
)
from .poset import OrderIdeal


class BijectionError(RuntimeError):
    """An input passed validation but the inverse construction failed."""


# --- matrix <-> partial monotone triangle -----------------------------------

def column_sum_matrix(M: Pasm) -> Matrix:
    """Partial column sums ``C[i][j] = sum_{k<=i} M[k][j]`` (0-based rows)."""
    out = []
    acc = [0] * M.dims.n
    for row in M.entries:
        acc = [x + y for x, y in zip(acc, row)]
        out.append(tuple(acc))
    return tuple(out)


def pasm_to_triangle(M: Pasm) -> PartialMonotoneTriangle:
    rows = []
    for i, crow in enumerate(column_sum_matrix(M), start=1):
        ones = [j for j, x in enumerate(crow, start=1) if x == 1]
        rows.append(tuple([0] * (i - len(ones)) + ones))
    return PartialMonotoneTriangle(M.dims, tuple(rows))


def triangle_to_pasm(T: PartialMonotoneTriangle) -> Pasm:
    m, n = T.dims.m, T.dims.n
    C = [[0] * n for _ in range(m)]
    for i, row in enumerate(T.rows):
        for k in row:
            if k:
                C[i][k - 1] = 1
    M = [C[0]] + [[C[i][j] - C[i - 1][j] for j in range(n)] for i in range(1, m)]
    return Pasm(T.dims, _as_matrix(M))


# --- matrix <-> corner sums <-> heights ---------------------------------------

def pasm_to_corner_sum(M: Pasm) -> CornerSumMatrix:
    m, n = M.dims.m, M.dims.n
    c = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        row = M.entries[i - 1]
        suffix = 0
        for j in range(n - 1, -1, -1):
            suffix += row[j]  # row[j] is M[i, j+1]
            c[i][j] = c[i - 1][j] + suffix
    return CornerSumMatrix(M.dims, _as_matrix(c))


def corner_sum_to_pasm(c: CornerSumMatrix) -> Pasm:
    m, n = c.dims.m, c.dims.n
    e = c.entries
    M = [
        [e[i][j - 1] - e[i - 1][j - 1] - e[i][j] + e[i - 1][j] for j in range(1, n + 1)]
        for i in range(1, m + 1)
    ]
    return Pasm(c.dims, _as_matrix(M))


def corner_sum_to_height(c: CornerSumMatrix) -> PartialHeightFunction:
    m, n = c.dims.m, c.dims.n
    h = [[i + j - 2 * c.entries[i][n - j] for j in range(n + 1)] for i in range(m + 1)]
    return PartialHeightFunction(c.dims, _as_matrix(h))


def height_to_corner_sum(h: PartialHeightFunction) -> CornerSumMatrix:
    m, n = h.dims.m, h.dims.n
    c = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        for j in range(n + 1):
            d = i + j - h.entries[i][j]
            if d % 2:
                raise BijectionError(f"i+j-h has odd parity at ({i}, {j})")
            c[i][n - j] = d // 2
    return CornerSumMatrix(h.dims, _as_matrix(c))


def pasm_to_height(M: Pasm) -> PartialHeightFunction:
    return corner_sum_to_height(pasm_to_corner_sum(M))


def height_to_pasm(h: PartialHeightFunction) -> Pasm:
    return corner_sum_to_pasm(height_to_corner_sum(h))


# --- heights <-> partial fully-packed loops -----------------------------------

def _separated(kind: str, x: int, y: int) -> bool:
    """Whether two adjacent height values are split by an FPL edge.

    Horizontal neighbours (sharing a ``V`` edge) are split when they are
    ``{2k, 2k+1}``; vertical neighbours (sharing an ``H`` edge) when they are
    ``{2k-1, 2k}``.
    """
    lo = min(x, y)
    return lo % 2 == 0 if kind == "V" else lo % 2 == 1


def height_to_fpl(h: PartialHeightFunction) -> PartialFpl:
    e = h.entries
    edges = set()
    for kind, i, j in all_edges(h.dims):
        if kind == "V":
            # between faces (i, j-1) and (i, j)
            x, y = e[i][j - 1], e[i][j]
        else:
            # between faces (i-1, j) and (i, j)
            x, y = e[i - 1][j], e[i][j]
        if _separated(kind, x, y):
            edges.add((kind, i, j))
    return PartialFpl(h.dims, frozenset(edges))


def fpl_to_height(F: PartialFpl) -> PartialHeightFunction:
    """Rebuild heights row by row from the fixed boundary ramp.

    Each new cell is determined by its left neighbour (the step of +-1 that is
    or is not split by the shared edge); the upper neighbour is then used as
    a consistency check.
    """
    m, n = F.dims.m, F.dims.n
    E = F.edges
    h = [[0] * (n + 1) for _ in range(m + 1)]
    for j in range(n + 1):
        h[0][j] = j
    for i in range(m + 1):
        h[i][0] = i
    for i in range(m + 1):
        for j in range(1, n + 1):
            if i == 0:
                want = ("V", 0, j) in E
                if _separated("V", j - 1, j) != want:
                    raise BijectionError(f"top boundary inconsistent at V(0,{j})")
                continue
            left = h[i][j - 1]
            split = ("V", i, j) in E
            cands = [x for x in (left - 1, left + 1) if x >= 0 and _separated("V", left, x) == split]
            up = h[i - 1][j]
            cands = [x for x in cands if abs(x - up) == 1 and _separated("H", up, x) == (("H", i, j) in E)]
            if len(cands) != 1:
                raise BijectionError(f"no consistent height at ({i}, {j})")
            h[i][j] = cands[0]
        if i >= 1 and _separated("H", i - 1, i) != (("H", i, 0) in E):
            raise BijectionError(f"left boundary inconsistent at H({i},0)")
    return PartialHeightFunction(F.dims, _as_matrix(h))


# --- partial fully-packed loops <-> rectangular ice ---------------------------

def _even_to_odd(e: Edge) -> bool:
    """Whether directing ``e`` from its even to its odd endpoint is 'forward'."""
    lo, _ = endpoints(e)
    return is_even(*lo)


def fpl_to_ice(F: PartialFpl) -> RectIce:
    """FPL edges point even -> odd, the remaining edges odd -> even."""
    fwd = set()
    for e in all_edges(F.dims):
        if (e in F.edges) == _even_to_odd(e):
            fwd.add(e)
    return RectIce(F.dims, frozenset(fwd))


def ice_to_fpl(I: RectIce) -> PartialFpl:
    """Keep the edges that run from an even vertex to an odd one."""
    edges = {e for e in all_edges(I.dims) if is_even(*I.tail(e))}
    return PartialFpl(I.dims, frozenset(edges))


def ice_vertex_type(I: RectIce, v: tuple[int, int]) -> int:
    """Six-vertex type of interior vertex ``v``: +1, -1 or 0.

    +1 when both horizontal arrows point in (and both vertical out), -1 when
    both horizontal arrows point out.  Vertex ``v[i,j]`` carries matrix entry
    ``(i, n+1-j)``.
    """
    i, j = v
    if not (1 <= i <= I.dims.m and 1 <= j <= I.dims.n):
        raise ValueError(f"{v} is not an interior vertex")
    h_in = (I.head(("H", i, j - 1)) == v) + (I.head(("H", i, j)) == v)
    if h_in == 2:
        return 1
    if h_in == 0:
        return -1
    return 0


def ice_to_pasm_by_vertex_types(I: RectIce) -> Pasm:
    m, n = I.dims.m, I.dims.n
    M = [[ice_vertex_type(I, (i, n + 1 - j)) for j in range(1, n + 1)] for i in range(1, m + 1)]
    return Pasm(I.dims, _as_matrix(M))


# --- heights <-> order ideals -------------------------------------------------

def height_to_ideal(h: PartialHeightFunction) -> OrderIdeal:
    m, n = h.dims.m, h.dims.n
    H = [[(i + j - h.entries[i][j]) // 2 for j in range(1, n + 1)] for i in range(1, m + 1)]
    return OrderIdeal(h.dims, _as_matrix(H))


def ideal_to_height(X: OrderIdeal) -> PartialHeightFunction:
    found = X.violations()
    if found:
        raise InvariantError(found)
    m, n = X.dims.m, X.dims.n
    h = [[i + j for j in range(n + 1)] for i in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            h[i][j] = i + j - 2 * X.heights[i - 1][j - 1]
    return PartialHeightFunction(X.dims, _as_matrix(h))


# --- matrix <-> nests of osculating paths -------------------------------------

def pasm_to_nest(M: Pasm) -> OsculatingNest:
    """Scan rows top to bottom, drawing one path per row that starts with +1.

    A path runs right until it reaches its +1 or a point already used by an
    earlier path, then runs down until the first nonzero entry strictly to
    its right is +1, where it turns right again, and so on until it leaves
    through the bottom.  Lattice point ``(r, c)`` is matrix entry ``(r, c)``.
    The boundary edges on entry and exit are not recorded.
    """
    m, n = M.dims.m, M.dims.n
    E = M.entries
    used: set[tuple[int, int]] = set()

    def next_nonzero_right(r: int, c: int) -> int:
        for x in E[r - 1][c:]:
            if x:
                return x
        return 0

    paths = []
    for start in range(1, m + 1):
        first = next((x for x in E[start - 1] if x), 0)
        if first != 1:
            continue
        r, c = start, 1
        steps = []
        moving_right = True
        while True:
            if moving_right:
                if E[r - 1][c - 1] == 1 or (r, c) in used:
                    moving_right = False
                else:
                    used.add((r, c))
                    if c == n:
                        raise BijectionError(f"path from row {start} runs off the right edge")
                    steps.append("E")
                    c += 1
                    continue
            used.add((r, c))
            if r == m:
                break
            steps.append("S")
            r += 1
            if next_nonzero_right(r, c) == 1:
                used.add((r, c))
                steps.append("E")
                c += 1
                moving_right = True
        paths.append((start, "".join(steps)))
    return OsculatingNest(M.dims, tuple(paths))


def nest_occupancy(N: OsculatingNest) -> tuple[set[tuple[int, int]], set[tuple[int, int]]]:
    """Occupied horizontal and vertical unit edges of the extended nest.

    Horizontal edge ``(r, c)`` joins lattice points ``(r, c)`` and
    ``(r, c+1)`` with ``c = 0`` the trimmed entry edge; vertical edge
    ``(r, c)`` joins ``(r, c)`` and ``(r+1, c)`` with ``r = m`` the trimmed
    exit edge.
    """
    hor: set[tuple[int, int]] = set()
    ver: set[tuple[int, int]] = set()
    for start, steps in N.paths:
        r, c = start, 1
        hor.add((r, 0))
        for s in steps:
            if s == "E":
                hor.add((r, c))
                c += 1
            else:
                ver.add((r, c))
                r += 1
        ver.add((r, c))
    return hor, ver


def nest_to_pasm(N: OsculatingNest) -> Pasm:
    """Recover M from edge occupancy: an entry is the change in horizontal
    occupancy across it, which must agree with the change in vertical
    occupancy."""
    m, n = N.dims.m, N.dims.n
    hor, ver = nest_occupancy(N)
    M = [[0] * n for _ in range(m)]
    for r in range(1, m + 1):
        for c in range(1, n + 1):
            x = ((r, c - 1) in hor) - ((r, c) in hor)
            y = ((r, c) in ver) - ((r - 1, c) in ver)
            if x != y:
                raise BijectionError(f"nest is not in the image of any matrix at ({r}, {c})")
            M[r - 1][c - 1] = x
    out = Pasm(N.dims, _as_matrix(M))
    if out.violations() or pasm_to_nest(out) != N:
        raise BijectionError("nest is not in the image of any matrix")
    return out


def nest_via_ice(I: RectIce) -> OsculatingNest:
    """Trace osculating paths through the mirror image of an ice configuration.

    After a left-right reflection, edges pointing east or south carry paths.
    Paths start at each inward-pointing left edge, top to bottom, and step
    right when the right edge is occupied and not yet used, otherwise down.
    Used only to cross-check :func:`pasm_to_nest`.
    """
    m, n = I.dims.m, I.dims.n

    # reflected lattice point (r, c) is grid vertex v[r, n+1-c]
    def east(r: int, c: int) -> bool:
        # reflected edge (r,c)-(r,c+1) is grid H(r, n-c), occupied iff it points west
        return ("H", r, n - c) not in I.forward

    def south(r: int, c: int) -> bool:
        return ("V", r, n + 1 - c) in I.forward

    taken: set[tuple[str, int, int]] = set()
    paths = []
    for start in range(1, m + 1):
        if not east(start, 0):
            continue
        r, c = start, 1
        steps = []
        while True:
            if c < n and east(r, c) and ("E", r, c) not in taken:
                taken.add(("E", r, c))
                steps.append("E")
                c += 1
            elif south(r, c) and ("S", r, c) not in taken:
                taken.add(("S", r, c))
                if r == m:
                    break
                steps.append("S")
                r += 1
            else:
                raise BijectionError(f"path from row {start} is stuck at ({r}, {c})")
        paths.append((start, "".join(steps)))
    return OsculatingNest(I.dims, tuple(paths))


# --- routing ------------------------------------------------------------------

FAMILIES = ("pasm", "triangle", "corner_sum", "height", "fpl", "ice", "ideal", "nest")
TARGETS = FAMILIES + ("link_pattern",)

_TYPE_OF = {
    Pasm: "pasm",
    PartialMonotoneTriangle: "triangle",
    CornerSumMatrix: "corner_sum",
    PartialHeightFunction: "height",
    PartialFpl: "fpl",
    RectIce: "ice",
    OrderIdeal: "ideal",
    OsculatingNest: "nest",
    PartialLinkPattern: "link_pattern",
}


def family_of(obj) -> str:
    try:
        return _TYPE_OF[type(obj)]
    except KeyError:
        raise TypeError(f"not a supported object: {type(obj).__name__}") from None


_TO_HEIGHT: dict[str, Callable] = {
    "pasm": pasm_to_height,
    "triangle": lambda T: pasm_to_height(triangle_to_pasm(T)),
    "corner_sum": corner_sum_to_height,
    "height": lambda h: h,
    "fpl": fpl_to_height,
    "ice": lambda I: fpl_to_height(ice_to_fpl(I)),
    "ideal": ideal_to_height,
    "nest": lambda N: pasm_to_height(nest_to_pasm(N)),
}

_FROM_HEIGHT: dict[str, Callable] = {
    "pasm": height_to_pasm,
    "triangle": lambda h: pasm_to_triangle(height_to_pasm(h)),
    "corner_sum": height_to_corner_sum,
    "height": lambda h: h,
    "fpl": height_to_fpl,
    "ice": lambda h: fpl_to_ice(height_to_fpl(h)),
    "ideal": height_to_ideal,
    "nest": lambda h: pasm_to_nest(height_to_pasm(h)),
}


def convert(obj, target: str, *, check: bool = True):
    """Convert ``obj`` to ``target`` through the height function.

    ``target`` may also be ``"link_pattern"`` (a many-to-one image of the FPL).
    """
    source = family_of(obj)
    if source == "link_pattern":
        raise ValueError("a link pattern does not determine the other objects")
    if target not in TARGETS:
        raise ValueError(f"unknown target family {target!r}")
    if check:
        obj.check()
    if source == target:
        return obj
    h = _TO_HEIGHT[source](obj)
    if target == "link_pattern":
        from .gyration import link_pattern

        return link_pattern(height_to_fpl(h))
    return _FROM_HEIGHT[target](h)


def sum_of(obj) -> int:
    """Total sum of the matrix underlying any family member."""
    return total_sum(convert(obj, "pasm", check=False))
