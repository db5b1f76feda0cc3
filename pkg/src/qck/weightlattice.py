"""Type A weight lattice helpers plus the tableau combinatorics used for counting.

Weights are plain int tuples of length n, kept as raw vectors; nothing here
quotients by (1,...,1).
"""

from __future__ import annotations

from typing import Iterator

Weight = tuple[int, ...]
Partition = tuple[int, ...]
Composition = tuple[int, ...]
# A standard tableau is stored as a tuple of rows, each row a tuple of ints.
Tableau = tuple[tuple[int, ...], ...]


def simple_root(i: int, n: int) -> Weight:
    """e_i - e_{i+1} as a length-n vector; valid for 1 <= i <= n-1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range for n={n}")
    v = [0] * n
    v[i - 1] = 1
    v[i] = -1
    return tuple(v)


def pairing(u: Weight, v: Weight) -> int:
    """Standard dot product; the roots are self-dual here."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def rho(n: int) -> Weight:
    """(n-1, n-2, ..., 1, 0); pairs to 1 with every simple root."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(range(n - 1, -1, -1))


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def is_partition(shape) -> bool:
    parts = tuple(shape)
    if not parts or any(not isinstance(p, int) or p <= 0 for p in parts):
        return False
    return all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1))


def check_partition(shape) -> Partition:
    parts = tuple(shape)
    if not is_partition(parts):
        raise ValueError(f"not a partition (weakly decreasing positive parts): {parts}")
    return parts


def check_composition(alpha) -> Composition:
    parts = tuple(alpha)
    if not parts or any(not isinstance(p, int) or p <= 0 for p in parts):
        raise ValueError(f"not a composition (positive parts): {parts}")
    return parts


def partitions_of(m: int, max_parts: int | None = None) -> Iterator[Partition]:
    """All partitions of m, largest-part-first lexicographic order."""
    if m < 0:
        raise ValueError("m must be non-negative")

    def gen(rest: int, cap: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if rest == 0:
            yield prefix
            return
        if max_parts is not None and len(prefix) >= max_parts:
            return
        for part in range(min(rest, cap), 0, -1):
            yield from gen(rest - part, part, prefix + (part,))

    yield from gen(m, m, ())


def _is_valid_tableau_shape(rows: tuple[int, ...]) -> bool:
    return all(rows[k] >= rows[k + 1] for k in range(len(rows) - 1))


def enumerate_syt(shape) -> list[Tableau]:
    """All standard fillings of a partition shape, entries 1..m.

    Built by peeling the largest entry off every removable corner, so the
    output order is deterministic. Rows increase left to right, columns top
    to bottom, each of 1..m used once.
    """
    parts = check_partition(shape)
    m = sum(parts)

    memo: dict[tuple[int, ...], list[Tableau]] = {(): [()]}

    def fill(rows: tuple[int, ...]) -> list[Tableau]:
        if rows in memo:
            return memo[rows]
        k = sum(rows)
        out: list[Tableau] = []
        for r in range(len(rows)):
            # cell (r, rows[r]-1) is a removable corner iff the next row is shorter
            if r + 1 < len(rows) and rows[r + 1] >= rows[r]:
                continue
            smaller = tuple(c for c in rows[:r] + (rows[r] - 1,) + rows[r + 1:] if c > 0)
            for t in fill(smaller):
                grown = [list(row) for row in t]
                while len(grown) <= r:
                    grown.append([])
                grown[r].append(k)
                out.append(tuple(tuple(row) for row in grown))
        memo[rows] = out
        return out

    result = fill(parts)
    assert all(sum(len(row) for row in t) == m for t in result)
    return sorted(result)


def syt_shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def descent_composition(t: Tableau) -> Composition:
    """Composition of m recording the descents of a standard tableau.

    j is a descent when j+1 sits in a strictly lower row; the composition's
    partial sums are exactly the descent positions.
    """
    m = sum(len(row) for row in t)
    if m == 0:
        raise ValueError("empty tableau")
    row_of = {}
    for r, row in enumerate(t):
        for entry in row:
            row_of[entry] = r
    if sorted(row_of) != list(range(1, m + 1)):
        raise ValueError("tableau entries must be exactly 1..m")
    descents = [j for j in range(1, m) if row_of[j + 1] > row_of[j]]
    bounds = [0] + descents + [m]
    comp = tuple(bounds[k + 1] - bounds[k] for k in range(len(bounds) - 1))
    assert sum(comp) == m
    return comp
