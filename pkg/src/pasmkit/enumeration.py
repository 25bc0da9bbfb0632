"""Enumeration of partial ASMs, count tables, and orbit reports.

Matrices are generated row by row over height-function rows: a state is one
row of a partial height function, and a transition to the next row is any
+-1 step in every column that keeps the row a +-1 walk starting at its
fixed left value and stays non-negative.  Each transition also fixes the
corresponding matrix row, since ``M[i, n+1-j] = -(h[i,j] - h[i-1,j] -
h[i,j-1] + h[i-1,j-1]) / 2``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Callable, Hashable, Iterable, Iterator, TypeVar

from .grid import Dims
from .objects import Pasm

T = TypeVar("T")
HRow = tuple[int, ...]


@lru_cache(maxsize=None)
def _next_rows(i: int, prev: HRow) -> tuple[tuple[HRow, tuple[int, ...]], ...]:
    """All height rows ``i`` that can follow row ``i-1 = prev``, each with the
    matrix row it encodes, sorted by matrix row."""
    n = len(prev) - 1
    out = []

    def rec(row: list[int]) -> None:
        j = len(row)
        if j == n + 1:
            mrow = [0] * n
            for jj in range(1, n + 1):
                d = row[jj] - prev[jj] - row[jj - 1] + prev[jj - 1]
                mrow[n - jj] = -d // 2
            out.append((tuple(row), tuple(mrow)))
            return
        for x in (row[-1] - 1, row[-1] + 1):
            if x >= 0 and abs(x - prev[j]) == 1:
                row.append(x)
                rec(row)
                row.pop()

    rec([i])
    out.sort(key=lambda t: t[1])
    return tuple(out)


def enumerate_pasm(dims: Dims) -> Iterator[Pasm]:
    """Every m x n partial ASM once, in lexicographic order of the row-major
    entries."""
    for rows in enumerate_pasm_rows(dims):
        yield Pasm(dims, rows)


def enumerate_pasm_rows(dims: Dims) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Same as :func:`enumerate_pasm` but yields bare tuples of rows."""
    m, n = dims.m, dims.n
    acc: list[tuple[int, ...]] = []

    def rec(i: int, prev: HRow) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i > m:
            yield tuple(acc)
            return
        for row, mrow in _next_rows(i, prev):
            acc.append(mrow)
            yield from rec(i + 1, row)
            acc.pop()

    yield from rec(1, tuple(range(n + 1)))


def count_by_sum(dims: Dims) -> dict[int, int]:
    """Number of m x n partial ASMs with each total sum ``t``.

    Transfer-matrix count over height rows; the total sum is
    ``(m + n - h[m,n]) / 2``.
    """
    m, n = dims.m, dims.n
    layer: Counter[HRow] = Counter({tuple(range(n + 1)): 1})
    for i in range(1, m + 1):
        nxt: Counter[HRow] = Counter()
        for prev, k in layer.items():
            for row, _ in _next_rows(i, prev):
                nxt[row] += k
        layer = nxt
    out: Counter[int] = Counter()
    for row, k in layer.items():
        out[(m + n - row[n]) // 2] += k
    return {t: out.get(t, 0) for t in range(min(m, n) + 1)}


def count_pasm(dims: Dims) -> int:
    return sum(count_by_sum(dims).values())


def sum_one_count(dims: Dims) -> int:
    return math.comb(dims.m + dims.n, dims.m) - 1


def asm_count(n: int) -> int:
    """Number of n x n alternating sign matrices, by the product formula."""
    if n < 1:
        raise ValueError("n must be positive")
    num = math.prod(math.factorial(3 * j + 1) for j in range(n))
    den = math.prod(math.factorial(n + j) for j in range(n))
    q, r = divmod(num, den)
    assert r == 0
    return q


@dataclass(frozen=True)
class CountTable:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cells: dict[tuple[int, int], int] = field(hash=False)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.cells[key]

    def as_lists(self) -> list[list[int | None]]:
        return [[self.cells.get((r, c)) for c in self.cols] for r in self.rows]


def make_tables(max_m: int, max_n: int) -> tuple[CountTable, CountTable]:
    """The m x n count table and the n x n table refined by total sum."""
    if max_m < 1 or max_n < 1:
        raise ValueError("bounds must be positive")
    total = {}
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            total[(m, n)] = count_pasm(Dims(m, n))
    top = min(max_m, max_n)
    refined = {}
    for n in range(1, top + 1):
        for t, k in count_by_sum(Dims(n, n)).items():
            refined[(n, t)] = k
    return (
        CountTable(tuple(range(1, max_m + 1)), tuple(range(1, max_n + 1)), total),
        CountTable(tuple(range(1, top + 1)), tuple(range(0, top + 1)), refined),
    )


# --- orbits -------------------------------------------------------------------

class NotBijectiveError(ValueError):
    pass


@dataclass(frozen=True)
class OrbitReport:
    carrier_size: int
    orbits: tuple[tuple[int, str], ...]  # (size, representative key as hex)

    @property
    def sizes(self) -> Counter[int]:
        return Counter(s for s, _ in self.orbits)

    @property
    def order(self) -> int:
        return reduce(math.lcm, (s for s, _ in self.orbits), 1)

    def __len__(self) -> int:
        return len(self.orbits)


def _hex(key) -> str:
    if isinstance(key, bytes):
        return key.hex()
    return str(key)


def orbit_report(
    carrier: Iterable[T],
    action: Callable[[T], T],
    key: Callable[[T], Hashable] = lambda x: x,
) -> OrbitReport:
    """Decompose ``carrier`` into orbits of ``action``.

    ``key`` maps objects to a canonical hashable form (bytes are rendered as
    hex); each orbit's representative is its least key.  Orbits are sorted by
    size, then representative.
    """
    items = list(carrier)
    keys = [key(x) for x in items]
    index = {k: i for i, k in enumerate(keys)}
    if len(index) != len(items):
        raise NotBijectiveError("carrier contains duplicate elements")
    image = [key(action(x)) for x in items]
    succ = []
    for k in image:
        if k not in index:
            raise NotBijectiveError(f"action leaves the carrier at {_hex(k)}")
        succ.append(index[k])
    if len(set(succ)) != len(items):
        raise NotBijectiveError("action is not injective on the carrier")
    seen = [False] * len(items)
    orbits = []
    for start in range(len(items)):
        if seen[start]:
            continue
        size = 0
        best = keys[start]
        i = start
        while not seen[i]:
            seen[i] = True
            size += 1
            if keys[i] < best:
                best = keys[i]
            i = succ[i]
        orbits.append((size, _hex(best)))
    orbits.sort()
    return OrbitReport(len(items), tuple(orbits))
