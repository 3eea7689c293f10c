import pytest
from hypothesis import given, strategies as st

from setpeaks.words import (
    RGS,
    StatBundle,
    Word,
    count_non_symmetric_peaks,
    count_peaks,
    count_records,
    count_rises_descents,
    count_symmetric_peaks,
    format_letters,
    parse_letters,
    peak_counts,
    stats,
    validate_rgs,
)

RUNNING = Word.parse("1322141251")


@pytest.mark.parametrize(
    "text, expected",
    [("112", True), ("121", True), ("1322141251", False), ("", True), ("2", False), ("1213", True), ("1131", False)],
)
def test_validate_rgs(text, expected):
    assert validate_rgs(parse_letters(text)) is expected


def test_running_example():
    assert RUNNING.k == 5
    assert count_peaks(RUNNING) == 3
    assert count_symmetric_peaks(RUNNING) == 1
    assert count_non_symmetric_peaks(RUNNING) == 2
    s = stats(RUNNING)
    assert (s.peaks, s.symmetric_peaks, s.non_symmetric_peaks) == (3, 1, 2)


@pytest.mark.parametrize(
    "text, peaks, sym, nonsym",
    [("1111111", 0, 0, 0), ("1213", 1, 1, 0), ("12345", 0, 0, 0), ("1212", 1, 1, 0), ("1231", 1, 0, 1), ("12", 0, 0, 0), ("", 0, 0, 0)],
)
def test_peak_counters(text, peaks, sym, nonsym):
    w = parse_letters(text)
    assert count_peaks(w) == peaks
    assert count_symmetric_peaks(w) == sym
    assert count_non_symmetric_peaks(w) == nonsym
    assert peak_counts(w) == (sym, nonsym)


def test_rises_descents():
    assert count_rises_descents(parse_letters("1121324323")) == (4, 4)
    assert count_rises_descents(()) == (0, 0)
    assert count_rises_descents(parse_letters("1122")) == (1, 0)


def test_records():
    assert count_records(parse_letters("1121324323")) == 4
    assert count_records(parse_letters("111")) == 1
    assert count_records(()) == 0


def test_stats_bundle():
    assert stats((1,)) == StatBundle(records=1)
    assert stats(parse_letters("1213")) == StatBundle(1, 1, 0, 2, 1, 3)
    assert stats(()) == StatBundle()


def test_word_validation():
    with pytest.raises(ValueError):
        Word((1, 4), 3)
    with pytest.raises(ValueError):
        Word((0, 1), 3)
    assert len(Word((), 3)) == 0
    assert Word((1, 1), 3).k == 3


def test_rgs_type():
    r = RGS((1, 2, 1, 3))
    assert r.block_count == 3
    assert r.blocks() == [[1, 3], [2], [4]]
    assert RGS(()).block_count == 0
    with pytest.raises(ValueError):
        RGS((1, 3))
    with pytest.raises(ValueError):
        RGS.of((1, 2), k=3)


def test_serialization_forms():
    assert str(Word.parse("1213")) == "1213"
    assert parse_letters("1,2,13,4") == (1, 2, 13, 4)
    assert format_letters((1, 2, 13, 4)) == "1,2,13,4"
    assert format_letters((1, 2), k=10) == "1,2"
    assert str(Word((1, 2, 10), 10)) == "1,2,10"
    with pytest.raises(ValueError):
        parse_letters("12a")


words = st.integers(1, 6).flatmap(
    lambda k: st.lists(st.integers(1, k), max_size=30).map(lambda ls: Word(tuple(ls), k))
)


@st.composite
def rgs_strategy(draw):
    n = draw(st.integers(0, 25))
    letters, top = [], 0
    for _ in range(n):
        a = draw(st.integers(1, top + 1))
        letters.append(a)
        top = max(top, a)
    return RGS(letters)


@given(words)
def test_peaks_split(w):
    assert count_peaks(w) == count_symmetric_peaks(w) + count_non_symmetric_peaks(w)
    s = stats(w)
    assert s == StatBundle(
        count_peaks(w), count_symmetric_peaks(w), count_non_symmetric_peaks(w),
        *count_rises_descents(w), count_records(w),
    )
    assert s.rises + s.descents <= max(len(w) - 1, 0)


@given(st.lists(st.integers(1, 2), max_size=40))
def test_binary_alphabet_has_no_non_symmetric_peaks(letters):
    assert count_non_symmetric_peaks(letters) == 0


@given(rgs_strategy())
def test_rgs_records_equal_blocks(r):
    assert validate_rgs(r)
    assert count_records(r) == r.block_count


@given(words)
def test_reversal_preserves_peaks(w):
    r = w.reversed()
    assert count_peaks(r) == count_peaks(w)
    assert count_symmetric_peaks(r) == count_symmetric_peaks(w)
    assert count_non_symmetric_peaks(r) == count_non_symmetric_peaks(w)


@given(words)
def test_adjacent_pairs_partition(w):
    if len(w):
        rises, descents = count_rises_descents(w)
        equal = sum(1 for a, b in zip(w, w[1:]) if a == b)
        assert rises + descents + equal == len(w) - 1


@given(words)
def test_parse_round_trip(w):
    assert Word.parse(str(w), w.k) == w
