"""Polynomials in the marker variable q with exact integer coefficients."""
from __future__ import annotations

from typing import Iterable, Union

Scalar = int


class QPoly:
    """Immutable polynomial ``c0 + c1 q + c2 q^2 + ...``.

    Trailing zeros are stripped, so the zero polynomial has no stored
    coefficients and ``degree == -1``. Plain ints mix freely in ``+ - *`` and
    ``==``, which lets power series run over either ring unchanged.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "QPoly":
        return cls([0] * degree + [c])

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "QPoly":
        if not counts:
            return cls()
        c = [0] * (max(counts) + 1)
        for d, v in counts.items():
            c[d] += v
        return cls(c)

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Inverse of :meth:`format`: space-separated coefficients, q^0 first."""
        return cls(int(t) for t in text.split())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @staticmethod
    def _coerce(other: Union["QPoly", int]) -> "QPoly | None":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly((other,))
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)  # type: ignore[arg-type]
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(other * a for a in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def derivative(self) -> "QPoly":
        return QPoly(d * c for d, c in enumerate(self.coeffs) if d)

    def format(self) -> str:
        """Space-separated coefficients of q^0, q^1, ...; the zero polynomial prints ``0``."""
        return " ".join(map(str, self.coeffs)) if self.coeffs else "0"

    def __repr__(self) -> str:
        if not self.coeffs:
            return "QPoly(0)"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if d == 0 else f"{c}*q" if d == 1 else f"{c}*q^{d}")
        return "QPoly(" + " + ".join(terms) + ")"


ONE = QPoly.const(1)
Q = QPoly.monomial(1)


def eval_q1(p: QPoly | int) -> int:
    """Value at q = 1 (the class size, for a partition-class distribution)."""
    if isinstance(p, int):
        return p
    return sum(p.coeffs)


def deriv_q1(p: QPoly | int) -> int:
    """d/dq at q = 1 (the statistic's total, for a distribution)."""
    if isinstance(p, int):
        return 0
    return sum(d * c for d, c in enumerate(p.coeffs))
