"""The PASM poset P_{m,n}, its order ideals, toggles, rowmotion and Gyr.

An order ideal is stored by column heights: ``heights[a][b]`` is the number of
elements ``(a, b, t)`` in the ideal.  The fiber over ``(a, b)`` is a chain
``(a,b,0) < (a,b,1) < ...`` (``(a,b,t+1)`` covers ``(a-1,b,t)`` which covers
``(a,b,t)``), so the ideal meets it in an initial segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .grid import Dims
from .objects import InvariantError, Matrix, StructuralError, Violation, _as_matrix, _Checked

Element = tuple[int, int, int]


def fiber_size(a: int, b: int) -> int:
    """Number of poset elements over base point ``(a, b)``."""
    return min(a, b) + 1


class PasmPoset:
    def __init__(self, dims: Dims):
        self.dims = dims
        m, n = dims.m, dims.n
        self.elements: tuple[Element, ...] = tuple(
            (i, j, k)
            for k in range(m)
            for i in range(k, m)
            for j in range(k, n)
        )
        self._set = frozenset(self.elements)

    def __contains__(self, q: object) -> bool:
        return q in self._set

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"PasmPoset({self.dims.m}, {self.dims.n})"

    def rank(self, q: Element) -> int:
        i, j, k = q
        return self.dims.m + self.dims.n - 2 - i - j + 2 * k

    @property
    def max_rank(self) -> int:
        return self.dims.m + self.dims.n - 2

    def lower_covers(self, q: Element) -> list[Element]:
        i, j, k = q
        cands = [(i + 1, j, k), (i, j + 1, k), (i - 1, j, k - 1), (i, j - 1, k - 1)]
        return [c for c in cands if c in self._set]

    def upper_covers(self, q: Element) -> list[Element]:
        i, j, k = q
        cands = [(i - 1, j, k), (i, j - 1, k), (i + 1, j, k + 1), (i, j + 1, k + 1)]
        return [c for c in cands if c in self._set]

    def cover_pairs(self) -> list[tuple[Element, Element]]:
        """All ``(lower, upper)`` cover pairs."""
        return [(lo, q) for q in self.elements for lo in self.lower_covers(q)]

    def minimal_elements(self) -> list[Element]:
        return [q for q in self.elements if not self.lower_covers(q)]

    def maximal_elements(self) -> list[Element]:
        return [q for q in self.elements if not self.upper_covers(q)]

    @lru_cache(maxsize=None)
    def ranks(self) -> tuple[tuple[Element, ...], ...]:
        """Elements grouped by rank, each group sorted lexicographically."""
        groups: list[list[Element]] = [[] for _ in range(self.max_rank + 1)]
        for q in self.elements:
            groups[self.rank(q)].append(q)
        return tuple(tuple(sorted(g)) for g in groups)

    def down_closure(self, gens) -> frozenset[Element]:
        seen: set[Element] = set()
        stack = list(gens)
        while stack:
            q = stack.pop()
            if q in seen:
                continue
            seen.add(q)
            stack.extend(self.lower_covers(q))
        return frozenset(seen)

    def is_down_closed(self, subset) -> bool:
        s = set(subset)
        return all(lo in s for q in s for lo in self.lower_covers(q))


@lru_cache(maxsize=None)
def build_poset(dims: Dims) -> PasmPoset:
    return PasmPoset(dims)


def lattice_rank_of_J(dims: Dims) -> int:
    """Rank of J(P_{m,n}), i.e. the number of poset elements."""
    a, b = min(dims.m, dims.n), max(dims.m, dims.n)
    num = -a**3 + 3 * a * a * b + 3 * a * b + a
    assert num % 6 == 0
    return num // 6


def heights_violations(dims: Dims, H: Matrix) -> list[Violation]:
    """Local form of down-closure for a column-height array.

    If ``(a,b,t)`` is the top of its fiber then its lower covers
    ``(a+1,b,t)``, ``(a,b+1,t)``, ``(a-1,b,t-1)``, ``(a,b-1,t-1)`` must be in
    the ideal, which gives the four inequalities below.
    """
    out: list[Violation] = []
    m, n = dims.m, dims.n
    for a in range(m):
        for b in range(n):
            x = H[a][b]
            if not 0 <= x <= fiber_size(a, b):
                out.append(Violation("column height out of range", (a, b)))
                continue
            if x == 0:
                continue
            if a + 1 < m and H[a + 1][b] < x:
                out.append(Violation("not down-closed below (a+1,b)", (a, b)))
            if b + 1 < n and H[a][b + 1] < x:
                out.append(Violation("not down-closed below (a,b+1)", (a, b)))
            if a >= 1 and H[a - 1][b] < x - 1:
                out.append(Violation("not down-closed below (a-1,b)", (a, b)))
            if b >= 1 and H[a][b - 1] < x - 1:
                out.append(Violation("not down-closed below (a,b-1)", (a, b)))
    return out


@dataclass(frozen=True)
class OrderIdeal(_Checked):
    dims: Dims
    heights: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "heights", _as_matrix(self.heights))
        if len(self.heights) != self.dims.m or any(len(r) != self.dims.n for r in self.heights):
            raise StructuralError(f"ideal heights must be {self.dims.m}x{self.dims.n}")

    @classmethod
    def empty(cls, dims: Dims) -> OrderIdeal:
        return cls(dims, tuple((0,) * dims.n for _ in range(dims.m)))

    @classmethod
    def full(cls, dims: Dims) -> OrderIdeal:
        return cls(dims, tuple(tuple(fiber_size(a, b) for b in range(dims.n)) for a in range(dims.m)))

    @classmethod
    def from_elements(cls, dims: Dims, elements) -> OrderIdeal:
        """Encode a set of poset elements; raises if it is not an order ideal."""
        poset = build_poset(dims)
        elems = set(elements)
        stray = [q for q in elems if q not in poset]
        if stray:
            raise StructuralError(f"{sorted(stray)[0]} is not an element of P_{{{dims.m},{dims.n}}}")
        if not poset.is_down_closed(elems):
            raise InvariantError([Violation("subset is not down-closed")])
        H = [[0] * dims.n for _ in range(dims.m)]
        for a, b, _ in elems:
            H[a][b] += 1
        return cls(dims, _as_matrix(H))

    @property
    def poset(self) -> PasmPoset:
        return build_poset(self.dims)

    def elements(self) -> frozenset[Element]:
        return frozenset(
            (a, b, t)
            for a, row in enumerate(self.heights)
            for b, x in enumerate(row)
            for t in range(x)
        )

    def __contains__(self, q: Element) -> bool:
        a, b, t = q
        return 0 <= a < self.dims.m and 0 <= b < self.dims.n and 0 <= t < self.heights[a][b]

    def __len__(self) -> int:
        return sum(map(sum, self.heights))

    def key(self) -> bytes:
        """Canonical hash input: the row-major height array as bytes."""
        return bytes(x for row in self.heights for x in row)

    def violations(self) -> list[Violation]:
        return heights_violations(self.dims, self.heights)


# Toggles and the actions built from them work on mutable height grids
# (lists of lists) for speed; the public functions wrap them.

def _toggle_inplace(H: list[list[int]], m: int, n: int, a: int, b: int, t: int) -> None:
    x = H[a][b]
    if t == x:
        # add (a,b,t) if its lower covers are present
        if t > min(a, b):
            return
        if a + 1 < m and H[a + 1][b] <= t:
            return
        if b + 1 < n and H[a][b + 1] <= t:
            return
        if t >= 1:
            if a >= 1 and H[a - 1][b] <= t - 1:
                return
            if b >= 1 and H[a][b - 1] <= t - 1:
                return
        H[a][b] = x + 1
    elif t == x - 1:
        # remove (a,b,t) if no upper cover is present
        if a >= 1 and H[a - 1][b] > t:
            return
        if b >= 1 and H[a][b - 1] > t:
            return
        if a + 1 < m and H[a + 1][b] > t + 1:
            return
        if b + 1 < n and H[a][b + 1] > t + 1:
            return
        H[a][b] = x - 1


def _freeze(dims: Dims, H: list[list[int]]) -> OrderIdeal:
    return OrderIdeal(dims, tuple(tuple(r) for r in H))


def _thaw(X: OrderIdeal) -> list[list[int]]:
    return [list(r) for r in X.heights]


def toggle(X: OrderIdeal, q: Element) -> OrderIdeal:
    if q not in X.poset:
        raise ValueError(f"{q} is not an element of P_{{{X.dims.m},{X.dims.n}}}")
    H = _thaw(X)
    _toggle_inplace(H, X.dims.m, X.dims.n, *q)
    return _freeze(X.dims, H)


def toggle_sequence(X: OrderIdeal, elements) -> OrderIdeal:
    H = _thaw(X)
    m, n = X.dims.m, X.dims.n
    for a, b, t in elements:
        _toggle_inplace(H, m, n, a, b, t)
    return _freeze(X.dims, H)


def toggle_fiber(X: OrderIdeal, a: int, b: int) -> OrderIdeal:
    """Toggle every element over base point ``(a, b)``, bottom to top."""
    return toggle_sequence(X, [(a, b, t) for t in range(fiber_size(a, b))])


@lru_cache(maxsize=None)
def _rank_order(dims: Dims, ranks: tuple[int, ...]) -> tuple[Element, ...]:
    poset = build_poset(dims)
    groups = poset.ranks()
    return tuple(q for r in ranks for q in groups[r])


def rowmotion_by_toggles(X: OrderIdeal) -> OrderIdeal:
    """Toggle every element, top rank first."""
    top = X.poset.max_rank
    return toggle_sequence(X, _rank_order(X.dims, tuple(range(top, -1, -1))))


def rowmotion(X: OrderIdeal) -> OrderIdeal:
    """The order ideal generated by the minimal elements of the complement."""
    m, n = X.dims.m, X.dims.n
    H = X.heights
    # (a, b, H[a][b]) is minimal in the complement iff it is addable
    gens = []
    for a in range(m):
        for b in range(n):
            t = H[a][b]
            if t > min(a, b):
                continue
            if a + 1 < m and H[a + 1][b] <= t:
                continue
            if b + 1 < n and H[a][b + 1] <= t:
                continue
            if t >= 1 and ((a >= 1 and H[a - 1][b] <= t - 1) or (b >= 1 and H[a][b - 1] <= t - 1)):
                continue
            gens.append((a, b, t))
    return _closure(X.dims, gens)


def _closure(dims: Dims, gens) -> OrderIdeal:
    """Down-closure of ``gens`` by relaxing the local height inequalities."""
    m, n = dims.m, dims.n
    G = [[0] * n for _ in range(m)]
    stack = []
    for a, b, t in gens:
        if G[a][b] < t + 1:
            G[a][b] = t + 1
            stack.append((a, b))
    while stack:
        a, b = stack.pop()
        x = G[a][b]
        for c, d, need in ((a + 1, b, x), (a, b + 1, x), (a - 1, b, x - 1), (a, b - 1, x - 1)):
            if 0 <= c < m and 0 <= d < n and G[c][d] < need:
                G[c][d] = need
                stack.append((c, d))
    return _freeze(dims, G)


def _parity_ranks(dims: Dims, parity: int) -> tuple[int, ...]:
    return tuple(r for r in range(dims.m + dims.n - 1) if r % 2 == parity)


def gyr(X: OrderIdeal) -> OrderIdeal:
    """Toggle all even ranks, then all odd ranks."""
    order = _rank_order(X.dims, _parity_ranks(X.dims, 0) + _parity_ranks(X.dims, 1))
    return toggle_sequence(X, order)


def gyr_inverse(X: OrderIdeal) -> OrderIdeal:
    order = _rank_order(X.dims, _parity_ranks(X.dims, 1) + _parity_ranks(X.dims, 0))
    return toggle_sequence(X, order)


def enumerate_ideals(dims: Dims) -> Iterator[OrderIdeal]:
    """Every order ideal of P_{m,n} once, in lexicographic order of the
    row-major height array."""
    m, n = dims.m, dims.n
    cells = [(a, b) for a in range(m) for b in range(n)]
    H = [[0] * n for _ in range(m)]

    # Fill row-major; when (a,b) is set, cells (a-1,b) and (a,b-1) are known,
    # so constraints between them are checked in both directions here.
    def ok(a: int, b: int, x: int) -> bool:
        if a >= 1:
            up = H[a - 1][b]
            # up needs H[a][b] >= up;  x needs up >= x - 1
            if x < up or up < x - 1:
                return False
        if b >= 1:
            left = H[a][b - 1]
            if x < left or left < x - 1:
                return False
        return True

    def rec(k: int) -> Iterator[OrderIdeal]:
        if k == len(cells):
            yield OrderIdeal(dims, tuple(tuple(r) for r in H))
            return
        a, b = cells[k]
        for x in range(fiber_size(a, b) + 1):
            if ok(a, b, x):
                H[a][b] = x
                yield from rec(k + 1)
        H[a][b] = 0

    yield from rec(0)
