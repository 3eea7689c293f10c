"""Exact Stirling numbers of the second kind, plus the small integer helpers
the counting formulas lean on."""
from __future__ import annotations

import math
import threading


class StirlingTable:
    """Triangle ``S(n, k)`` for ``0 <= k <= n <= max_n``, built eagerly.

    Lookups outside the triangle (``k > n``, negative indices) return 0 so the
    closed-form sums can probe boundary indices without special cases.
    """

    def __init__(self, max_n: int) -> None:
        if max_n < 0:
            raise ValueError("max_n must be nonnegative")
        self.max_n = max_n
        rows: list[tuple[int, ...]] = [(1,)]
        for n in range(1, max_n + 1):
            prev = rows[-1]
            row = [0] * (n + 1)
            for k in range(1, n + 1):
                row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
            rows.append(tuple(row))
        self.rows: tuple[tuple[int, ...], ...] = tuple(rows)

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n > self.max_n:
            raise IndexError(f"S({n},{k}) beyond table bound {self.max_n}")
        return self.rows[n][k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StirlingTable):
            return NotImplemented
        return self.rows == other.rows

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def bell(self, n: int) -> int:
        return sum(self.rows[n])

    def to_tsv(self) -> str:
        """One line per n: ``n`` then S(n, 0) ... S(n, n), tab-separated."""
        return "".join("\t".join([str(n), *map(str, row)]) + "\n" for n, row in enumerate(self.rows))


_table = StirlingTable(32)
_lock = threading.Lock()


def table(max_n: int) -> StirlingTable:
    """The shared memoized table, grown (by doubling) to cover ``max_n``."""
    global _table
    if max_n > _table.max_n:
        with _lock:
            if max_n > _table.max_n:
                _table = StirlingTable(max(max_n, 2 * _table.max_n))
    return _table


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return table(n)(n, k)


def binomial(n: int, r: int) -> int:
    if n < 0 or r < 0:
        return 0
    return math.comb(n, r)


def int_pow(j: int, e: int) -> int:
    # Python already has 0**0 == 1
    return j**e
