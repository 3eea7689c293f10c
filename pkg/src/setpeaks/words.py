"""Words over [k], restricted growth strings, and the peak/rise/record counters.

Letters are 1-based throughout. Every counter accepts any sequence of ints
(a :class:`Word`, an :class:`RGS`, a tuple straight from the enumerator), and
is total: short and empty words simply score zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Word:
    """A finite word over the alphabet ``[k] = {1, ..., k}``.

    ``k`` is carried separately from the letters so that a word over ``[3]``
    need not use the letter 3.
    """

    letters: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        if self.k < 0:
            raise ValueError(f"alphabet bound must be nonnegative, got {self.k}")
        for a in self.letters:
            if not 1 <= a <= self.k:
                raise ValueError(f"letter {a} outside alphabet [1..{self.k}]")

    @classmethod
    def of(cls, letters: Sequence[int], k: int | None = None) -> "Word":
        letters = tuple(letters)
        return cls(letters, max(letters, default=0) if k is None else k)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Word":
        return cls.of(parse_letters(text), k)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        return format_letters(self.letters, self.k)

    def reversed(self) -> "Word":
        return Word(self.letters[::-1], self.k)


class RGS(Word):
    """A restricted growth string: the canonical sequential form of a set partition.

    Construction fails unless the letters satisfy the restricted-growth
    property. ``k`` is always the number of blocks.
    """

    def __init__(self, letters: Sequence[int]) -> None:
        letters = tuple(int(a) for a in letters)
        if not validate_rgs(letters):
            raise ValueError(f"not a restricted growth string: {format_letters(letters)}")
        super().__init__(letters, max(letters, default=0))

    @classmethod
    def of(cls, letters: Sequence[int], k: int | None = None) -> "RGS":
        r = cls(letters)
        if k is not None and k != r.k:
            raise ValueError(f"RGS has {r.k} blocks, expected {k}")
        return r

    @property
    def block_count(self) -> int:
        return self.k

    def blocks(self) -> list[list[int]]:
        """Block-set form, blocks ordered by their minima (display only)."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for i, a in enumerate(self.letters, start=1):
            out[a - 1].append(i)
        return out


@dataclass(frozen=True)
class StatBundle:
    peaks: int = 0
    symmetric_peaks: int = 0
    non_symmetric_peaks: int = 0
    rises: int = 0
    descents: int = 0
    records: int = 0


def parse_letters(text: str) -> tuple[int, ...]:
    """Parse ``"1213"`` or ``"1,2,13,4"`` into a tuple of ints."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    if not text.isdigit():
        raise ValueError(f"cannot parse word {text!r}")
    return tuple(int(c) for c in text)


def format_letters(letters: Sequence[int], k: int | None = None) -> str:
    if k is None:
        k = max(letters, default=0)
    if k <= 9:
        return "".join(map(str, letters))
    return ",".join(map(str, letters))


def validate_rgs(w: Sequence[int]) -> bool:
    m = 0
    for a in w:
        if a < 1 or a > m + 1:
            return False
        if a > m:
            m = a
    return True


def count_peaks(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w) - 2) if w[i] < w[i + 1] > w[i + 2])


def count_symmetric_peaks(w: Sequence[int]) -> int:
    return sum(
        1 for i in range(len(w) - 2) if w[i] < w[i + 1] > w[i + 2] and w[i] == w[i + 2]
    )


def count_non_symmetric_peaks(w: Sequence[int]) -> int:
    return sum(
        1 for i in range(len(w) - 2) if w[i] < w[i + 1] > w[i + 2] and w[i] != w[i + 2]
    )


def count_rises_descents(w: Sequence[int]) -> tuple[int, int]:
    rises = descents = 0
    for a, b in zip(w, w[1:]):
        if a < b:
            rises += 1
        elif a > b:
            descents += 1
    return rises, descents


def count_records(w: Sequence[int]) -> int:
    records = 0
    best = None
    for a in w:
        if best is None or a > best:
            records += 1
            best = a
    return records


def peak_counts(w: Sequence[int]) -> tuple[int, int]:
    """(symmetric, non-symmetric) peak counts in one pass; the enumeration hot path."""
    sym = nonsym = 0
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        if a < b > c:
            if a == c:
                sym += 1
            else:
                nonsym += 1
    return sym, nonsym


def stats(w: Sequence[int]) -> StatBundle:
    sym = nonsym = rises = descents = records = 0
    best = None
    n = len(w)
    for i in range(n):
        a = w[i]
        if best is None or a > best:
            records += 1
            best = a
        if i + 1 < n:
            b = w[i + 1]
            if a < b:
                rises += 1
                if i + 2 < n and b > w[i + 2]:
                    if a == w[i + 2]:
                        sym += 1
                    else:
                        nonsym += 1
            elif a > b:
                descents += 1
    return StatBundle(sym + nonsym, sym, nonsym, rises, descents, records)
