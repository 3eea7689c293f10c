"""Truncated power series in x and the peak generating functions built from them.

Coefficients live in an exact ring: :class:`QPoly` for the bivariate
functions (q marks the statistic), plain ``int`` once q has been eliminated.
Everything is computed modulo ``x^(N+1)``.
"""
from __future__ import annotations

from typing import Iterable, Union

from .qpoly import ONE, Q, QPoly, deriv_q1, eval_q1
from .stirling import binomial

Coeff = Union[QPoly, int]


class DivisionPreconditionError(ArithmeticError):
    """Divisor's constant term is not 1; a recurrence was evaluated wrongly."""


class XSeries:
    """Power series ``c_0 + c_1 x + ... + c_N x^N``, exact modulo ``x^(N+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Coeff] = (), zero: Coeff = 0) -> None:
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        c = list(coeffs)[: order + 1]
        c.extend([zero] * (order + 1 - len(c)))
        self.order = order
        self.coeffs: tuple[Coeff, ...] = tuple(c)

    @classmethod
    def constant(cls, order: int, c: Coeff) -> "XSeries":
        return cls(order, [c], zero=0 * c)

    @classmethod
    def monomial(cls, order: int, power: int, c: Coeff = 1) -> "XSeries":
        zero = 0 * c
        return cls(order, [zero] * power + [c], zero=zero)

    @classmethod
    def geometric(cls, order: int, ratio: int) -> "XSeries":
        """``1 / (1 - ratio*x)`` written out term by term."""
        return cls(order, [ratio**m for m in range(order + 1)])

    def __getitem__(self, n: int) -> Coeff:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def _check(self, other: "XSeries") -> None:
        if not isinstance(other, XSeries):
            raise TypeError(f"expected XSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def _lift(self, other) -> "XSeries":
        if isinstance(other, XSeries):
            self._check(other)
            return other
        return XSeries.constant(self.order, other)

    def __add__(self, other) -> "XSeries":
        o = self._lift(other)
        return XSeries(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "XSeries":
        return XSeries(self.order, [-a for a in self.coeffs])

    def __sub__(self, other) -> "XSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "XSeries":
        return self._lift(other) - self

    def __mul__(self, other) -> "XSeries":
        if not isinstance(other, XSeries):
            return XSeries(self.order, [a * other for a in self.coeffs])
        self._check(other)
        a, b, N = self.coeffs, other.coeffs, self.order
        out = []
        for n in range(N + 1):
            acc = a[0] * b[n]
            for i in range(1, n + 1):
                if a[i] and b[n - i]:
                    acc = acc + a[i] * b[n - i]
            out.append(acc)
        return XSeries(N, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "XSeries":
        o = self._lift(other)
        if o.coeffs[0] != 1:
            raise DivisionPreconditionError(
                f"divisor must have constant term 1, got {o.coeffs[0]!r}"
            )
        a, b, N = self.coeffs, o.coeffs, self.order
        out: list[Coeff] = []
        for n in range(N + 1):
            acc = a[n]
            for m in range(n):
                if out[m] and b[n - m]:
                    acc = acc - out[m] * b[n - m]
            out.append(acc)
        return XSeries(N, out)

    def __pow__(self, e: int) -> "XSeries":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = XSeries.constant(self.order, ONE if isinstance(self.coeffs[0], QPoly) else 1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def map(self, f) -> "XSeries":
        return XSeries(self.order, [f(c) for c in self.coeffs])

    def at_q1(self) -> "XSeries":
        """Substitute q = 1 coefficientwise, giving an integer series."""
        return self.map(eval_q1)

    def d_dq_at_q1(self) -> "XSeries":
        return self.map(deriv_q1)

    def __repr__(self) -> str:
        return f"XSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


def series_add(a: XSeries, b: XSeries) -> XSeries:
    return a + b


def series_mul(a: XSeries, b: XSeries) -> XSeries:
    return a * b


def series_div(a: XSeries, b: XSeries) -> XSeries:
    return a / b


def coeff(series: XSeries, n: int) -> Coeff:
    if not 0 <= n <= series.order:
        raise IndexError(f"x^{n} is outside truncation order {series.order}")
    return series.coeffs[n]


# The recurrences below are written out in x and q literally; every
# denominator has constant term 1, and series division refuses anything else.

def _x(N: int) -> XSeries:
    return XSeries.monomial(N, 1, ONE)


def _q(N: int) -> XSeries:
    return XSeries.constant(N, Q)


def _word_step(prev: XSeries, c: int) -> XSeries:
    """One step of the word-level recurrence with parameter ``c``.

    ``(x(q-1) + (1 - x(q-1)) P) / (1 - x(1-q)(1-c x) - x P (c x + q (1 - c x)))``
    """
    N = prev.order
    x, q = _x(N), _q(N)
    one = XSeries.constant(N, ONE)
    num = x * (q - 1) + (one - x * (q - 1)) * prev
    den = one - x * (one - q) * (one - x * c) - x * prev * (x * c + q * (one - x * c))
    return num / den


def w_series(k: int, order: int) -> XSeries:
    """Word-level recurrence for symmetric peaks over [k], W_0 = 1.

    The q-derivative at q = 1 gives the total symmetric peaks over [k]^n; the
    full q-distribution is only reproduced for k <= 2.
    """
    w = XSeries.constant(order, ONE)
    for j in range(1, k + 1):
        w = _word_step(w, j - 1)
    return w


def wt_series(k: int, order: int) -> XSeries:
    """Word-level recurrence for non-symmetric peaks over [k], W~_0 = 1.

    Same caveat as :func:`w_series`: totals at q = 1 are right, the full
    distribution is only reproduced for k <= 2.
    """
    w = XSeries.constant(order, ONE)
    for _ in range(1, k + 1):
        w = _word_step(w, 2)
    return w


def _require_order(k: int, order: int) -> None:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if order < k:
        raise ValueError(f"truncation order {order} is below k={k}")


def sp_series(k: int, order: int) -> XSeries:
    """``x^k (xq + 1 - x)^(k-1) * prod_{j=1..k} W_j``.

    Agrees with the enumerated symmetric-peak distribution of P(n, k) for
    n <= k + 2, and its q-derivative at q = 1 agrees for every n. Beyond
    n = k + 2 the distributions differ (see ``setpeaks verify``).
    """
    _require_order(k, order)
    if k == 0:
        return XSeries.constant(order, ONE)
    x, q = _x(order), _q(order)
    result = XSeries.monomial(order, k, ONE)
    boundary = x * q + 1 - x
    for _ in range(k - 1):
        result = result * boundary
    w = XSeries.constant(order, ONE)
    for j in range(1, k + 1):
        w = _word_step(w, j - 1)
        result = result * w
    return result


def nsp_series(k: int, order: int) -> XSeries:
    """``x^k prod_{i=1..k} W~_i prod_{j=3..k} ((j-2)xq + 1 - (j-2)x)``.

    Non-symmetric analogue of :func:`sp_series`, with the same range of
    agreement.
    """
    _require_order(k, order)
    x, q = _x(order), _q(order)
    result = XSeries.monomial(order, k, ONE)
    w = XSeries.constant(order, ONE)
    for _ in range(1, k + 1):
        w = _word_step(w, 2)
        result = result * w
    for j in range(3, k + 1):
        result = result * (x * q * (j - 2) + 1 - x * (j - 2))
    return result


# q-eliminated route: only integers and geometric series from here on.

def stirling_gf(k: int, order: int) -> XSeries:
    """``x^k / prod_{j=1..k} (1 - j x)`` as an integer series."""
    _require_order(k, order)
    result = XSeries.monomial(order, k, 1)
    for j in range(1, k + 1):
        result = result * XSeries.geometric(order, j)
    return result


def _interior_term(order: int, m: int, weight: int) -> XSeries:
    # weight * x^3 / (1 - m x)
    return XSeries(order, [0, 0, 0] + [weight * m**e for e in range(order + 1)])


def sp_derivative_series(k: int, order: int) -> XSeries:
    """d/dq SP_k at q = 1: ``(k-1) x S_k + S_k sum_{m=1..k} C(m,2) x^3/(1-mx)``."""
    base = stirling_gf(k, order)
    shifted = XSeries(order, [0, *base.coeffs[:-1]])
    inner = XSeries(order)
    for m in range(1, k + 1):
        inner = inner + _interior_term(order, m, binomial(m, 2))
    return shifted * max(k - 1, 0) + base * inner


def nsp_derivative_series(k: int, order: int) -> XSeries:
    """d/dq NSP_k at q = 1: ``C(k-1,2) x S_k + S_k sum_{m=3..k} 2 C(m,3) x^3/(1-mx)``."""
    base = stirling_gf(k, order)
    shifted = XSeries(order, [0, *base.coeffs[:-1]])
    inner = XSeries(order)
    for m in range(3, k + 1):
        inner = inner + _interior_term(order, m, 2 * binomial(m, 3))
    return shifted * binomial(k - 1, 2) + base * inner


def default_order(k: int) -> int:
    return 2 * k + 10


def distribution(gf: str, n: int, k: int, order: int | None = None) -> QPoly:
    """Coefficient of x^n in SP_k ("sp") or NSP_k ("nsp")."""
    build = {"sp": sp_series, "nsp": nsp_series}[gf]
    return coeff(build(k, max(n, order or 0)), n)


def derivative_total(gf: str, n: int, k: int) -> int:
    build = {"sp": sp_derivative_series, "nsp": nsp_derivative_series}[gf]
    return coeff(build(k, max(n, k)), n)
