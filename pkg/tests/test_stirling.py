import pytest

from setpeaks.enumeration import iterate_rgs
from setpeaks.stirling import StirlingTable, binomial, int_pow, stirling2, table

from conftest import brute_rgs


def test_small_values_against_brute_force():
    assert stirling2(4, 2) == len(brute_rgs(4, 2)) == 7
    assert stirling2(5, 3) == len(brute_rgs(5, 3)) == 25
    for n in range(8):
        assert stirling2(n, n) == 1


def test_boundary_conventions():
    assert stirling2(0, 0) == 1
    assert all(stirling2(n, 0) == 0 for n in range(1, 10))
    assert stirling2(3, 5) == 0
    assert stirling2(-1, 0) == 0
    assert stirling2(4, -1) == 0


def test_recurrence_holds():
    t = StirlingTable(30)
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert t(n, k) == k * t(n - 1, k) + t(n - 1, k - 1)


def test_bell_row_sums_match_enumeration():
    t = StirlingTable(10)
    for n in range(11):
        ks = range(1, n + 1) if n else [0]
        words = sum(1 for k in ks for _ in iterate_rgs(n, k))
        assert t.bell(n) == words
    assert [t.bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_reproducible_and_big():
    assert StirlingTable(25) == StirlingTable(25)
    assert stirling2(20, 8) == 15170932662679
    assert table(100)(100, 50) == stirling2(100, 50)


def test_out_of_table_lookup_is_an_error():
    with pytest.raises(IndexError):
        StirlingTable(5)(6, 2)


@pytest.mark.parametrize("n, r, expected", [(2, 2, 1), (3, 2, 3), (4, 3, 4), (1, 2, 0), (0, 0, 1), (-1, 2, 0)])
def test_binomial(n, r, expected):
    assert binomial(n, r) == expected


@pytest.mark.parametrize("j, e, expected", [(2, 0, 1), (3, 2, 9), (0, 0, 1), (0, 3, 0)])
def test_int_pow(j, e, expected):
    assert int_pow(j, e) == expected


def test_tsv():
    assert StirlingTable(2).to_tsv() == "0\t1\n1\t0\t1\n2\t0\t1\t1\n"
