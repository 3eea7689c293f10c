"""Closed-form totals of symmetric and non-symmetric peaks over P(n, k)."""
from __future__ import annotations

from .stirling import binomial, int_pow, table


def _check(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def _interior_sum(n: int, k: int, weights, j_from: int) -> int:
    """sum_{j=j_from..k} weights(j) * sum_{i=3..n-k} j^(i-3) S(n-i, k).

    Counts peaks whose middle letter is not a record; empty ranges add 0.
    """
    S = table(n)
    total = 0
    for j in range(j_from, k + 1):
        w = weights(j)
        if w:
            total += w * sum(int_pow(j, i - 3) * S(n - i, k) for i in range(3, n - k + 1))
    return total


def total_symmetric(n: int, k: int) -> int:
    _check(n, k)
    S = table(n)
    return (k - 1) * S(n - 1, k) + _interior_sum(n, k, lambda j: binomial(j, 2), 2)


def total_non_symmetric(n: int, k: int, j_from: int = 3) -> int:
    """Total non-symmetric peaks over P(n, k).

    ``j_from`` may be 2 or 3: the j = 2 term carries C(2, 3) = 0.
    """
    _check(n, k)
    S = table(n)
    return binomial(k - 1, 2) * S(n - 1, k) + _interior_sum(
        n, k, lambda j: 2 * binomial(j, 3), j_from
    )


def total_peaks(n: int, k: int) -> int:
    return total_symmetric(n, k) + total_non_symmetric(n, k)


TOTALS = {"sym": total_symmetric, "nonsym": total_non_symmetric, "peaks": total_peaks}
