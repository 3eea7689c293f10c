"""Brute-force generation of P(n, k) as restricted growth strings.

This is the oracle every other route is checked against, so it stays
deliberately dumb: walk every RGS, score it with :func:`words.peak_counts`,
and add up.
"""
from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .qpoly import QPoly
from .words import peak_counts, validate_rgs


@dataclass(frozen=True)
class PartitionClass:
    n: int
    k: int

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n:
            raise ValueError(f"invalid partition class: need 0 <= k <= n, got n={self.n}, k={self.k}")
        if self.n > 0 and self.k == 0:
            raise ValueError(f"P({self.n}, 0) is empty; k must be >= 1 when n >= 1")


def _as_class(cls_or_n, k: int | None = None) -> PartitionClass:
    if isinstance(cls_or_n, PartitionClass):
        return cls_or_n
    return PartitionClass(cls_or_n, k)


def iterate_rgs(cls_or_n, k: int | None = None, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Yield every RGS of length n with exactly k blocks, in lexicographic order.

    Words come out as plain tuples (hot path; wrap in :class:`words.RGS` if
    needed). With ``prefix``, only words starting with it are produced, which
    is how the space is carved up for parallel aggregation. State is a single
    length-n buffer.
    """
    pc = _as_class(cls_or_n, k)
    n, k = pc.n, pc.k
    if n == 0:
        if not prefix:
            yield ()
        return
    p = len(prefix)
    if p > n or (p and not validate_rgs(prefix)):
        return
    pmax = max(prefix, default=0)
    if pmax > k or pmax + (n - p) < k:
        return

    a = list(prefix) + [0] * (n - p)
    # m[i] = max of a[0..i]
    m = [0] * n
    run = 0
    for i in range(p):
        run = max(run, a[i])
        m[i] = run

    def fill(start: int) -> None:
        # smallest completion of a[start:] reaching exactly k blocks
        top = m[start - 1] if start else 0
        need = k - top
        free = n - start - need
        for i in range(start, n):
            if i - start < free:
                a[i] = 1
                m[i] = top
            else:
                top += 1
                a[i] = top
                m[i] = top

    start = p
    if start == 0:
        a[0] = m[0] = 1
        start = 1
    fill(start)
    while True:
        yield tuple(a)
        i = n - 1
        while i >= p:
            prev = m[i - 1] if i else 0
            v = a[i] + 1
            if v <= prev + 1 and v <= k and max(prev, v) + (n - 1 - i) >= k:
                a[i] = v
                m[i] = max(prev, v)
                fill(i + 1)
                break
            i -= 1
        else:
            return


def prefixes(cls_or_n, k: int | None = None, depth: int = 1) -> list[tuple[int, ...]]:
    """All RGS prefixes of the given length that extend to a member of P(n, k).

    The prefix-restricted iterators over these partition the class exactly.
    """
    pc = _as_class(cls_or_n, k)
    depth = min(depth, pc.n)
    out: list[tuple[int, ...]] = []

    def rec(pre: list[int], top: int) -> None:
        if len(pre) == depth:
            if top <= pc.k and top + pc.n - depth >= pc.k:
                out.append(tuple(pre))
            return
        for v in range(1, min(top + 1, pc.k) + 1):
            pre.append(v)
            rec(pre, max(top, v))
            pre.pop()

    if pc.n == 0:
        return [()]
    rec([], 0)
    return out


@dataclass(frozen=True)
class AggregateTotals:
    cls: PartitionClass
    count: int = 0
    total_peaks: int = 0
    total_sym: int = 0
    total_nonsym: int = 0
    q_distribution_sym: QPoly = field(default_factory=QPoly)
    q_distribution_nonsym: QPoly = field(default_factory=QPoly)

    def __add__(self, other: "AggregateTotals") -> "AggregateTotals":
        if other.cls != self.cls:
            raise ValueError("cannot merge totals of different partition classes")
        return AggregateTotals(
            self.cls,
            self.count + other.count,
            self.total_peaks + other.total_peaks,
            self.total_sym + other.total_sym,
            self.total_nonsym + other.total_nonsym,
            self.q_distribution_sym + other.q_distribution_sym,
            self.q_distribution_nonsym + other.q_distribution_nonsym,
        )

    def to_dict(self) -> dict:
        return {
            "n": self.cls.n,
            "k": self.cls.k,
            "count": str(self.count),
            "total_peaks": str(self.total_peaks),
            "total_sym": str(self.total_sym),
            "total_nonsym": str(self.total_nonsym),
            "qdist_sym": [str(c) for c in self.q_distribution_sym],
            "qdist_nonsym": [str(c) for c in self.q_distribution_nonsym],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "AggregateTotals":
        return cls(
            PartitionClass(int(d["n"]), int(d["k"])),
            int(d["count"]),
            int(d["total_peaks"]),
            int(d["total_sym"]),
            int(d["total_nonsym"]),
            QPoly(int(c) for c in d["qdist_sym"]),
            QPoly(int(c) for c in d["qdist_nonsym"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "AggregateTotals":
        return cls.from_dict(json.loads(text))


def _aggregate_prefix(pc: PartitionClass, prefix: tuple[int, ...]) -> AggregateTotals:
    sym_hist: Counter[int] = Counter()
    nonsym_hist: Counter[int] = Counter()
    for w in iterate_rgs(pc, prefix=prefix):
        s, t = peak_counts(w)
        sym_hist[s] += 1
        nonsym_hist[t] += 1
    total_sym = sum(d * c for d, c in sym_hist.items())
    total_nonsym = sum(d * c for d, c in nonsym_hist.items())
    return AggregateTotals(
        pc,
        count=sum(sym_hist.values()),
        total_peaks=total_sym + total_nonsym,
        total_sym=total_sym,
        total_nonsym=total_nonsym,
        q_distribution_sym=QPoly.from_counts(sym_hist),
        q_distribution_nonsym=QPoly.from_counts(nonsym_hist),
    )


def aggregate(
    cls_or_n, k: int | None = None, *, prefix_depth: int = 0, workers: int | None = None
) -> AggregateTotals:
    """Exact totals and q-distributions over all of P(n, k).

    ``prefix_depth > 0`` splits the class by fixed prefixes; with ``workers``
    the pieces run in a process pool. The result does not depend on either.
    """
    pc = _as_class(cls_or_n, k)
    if prefix_depth <= 0:
        return _aggregate_prefix(pc, ())
    parts = prefixes(pc, depth=prefix_depth)
    result = AggregateTotals(pc)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_aggregate_prefix, [pc] * len(parts), parts):
                result = result + part
    else:
        for pre in parts:
            result = result + _aggregate_prefix(pc, pre)
    return result
