"""Smoke tests for the python bindings, driven against the staged build tree."""

from fractions import Fraction

import pytest

import hexamoment as hm


def test_counts():
    assert hm.count(1, 1, 1) == 2
    assert hm.count(2, 2, 2) == 20
    assert hm.count(3, 3, 3) == 980
    assert hm.count(6, 6, 6) == hm.macmahon_count(6, 6, 6)


def test_enumeration_is_complete_and_limited():
    pps = hm.enumerate_box(2, 2, 2)
    assert len(pps) == 20
    assert len({tuple(map(tuple, pp)) for pp in pps}) == 20
    with pytest.raises(hm.TooLargeError):
        hm.enumerate_box(3, 3, 3, limit=10)
    assert issubclass(hm.TooLargeError, hm.HexamomentError)
    with pytest.raises(hm.HexamomentError):
        hm.row_sum(2, 2, 2, 99)
    assert len(hm.enumerate_box(3, 3, 3, limit=10, force=True)) == 980


def test_exact_fractions_cross_the_boundary():
    assert hm.row_sum(3, 5, 4, 0) == Fraction(15, 7)
    assert hm.column_sum(3, 5, 4, 4) == 3
    table = dict()
    for x, y, p in hm.prob_table(1, 1, 1):
        table[(x, y)] = p
    assert table == {(1, 0): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    e = hm.expected_entries(2, 2, 2)
    assert e[0][0] == Fraction(33, 20)
    assert e[1][1] == Fraction(7, 20)


def test_moments_report():
    r = hm.moments(2, 2, 2)
    assert r["horizontal"] == Fraction(2)
    assert r["vertical"] == Fraction(18)
    assert r["closed_vertical"] == Fraction(18)
    assert r["consistent"] is True
    assert hm.moments(3, 5, 4)["horizontal"] == Fraction(40)


def test_sampling_is_deterministic_and_valid():
    first = hm.sample(2, 2, 2, seed=42, count=5)
    second = hm.sample(2, 2, 2, seed=42, count=5)
    assert first == second
    for pp in first:
        for i in range(2):
            for j in range(2):
                assert 0 <= pp[i][j] <= 2
                if j > 0:
                    assert pp[i][j - 1] >= pp[i][j]
                if i > 0:
                    assert pp[i - 1][j] >= pp[i][j]


def test_rendering():
    svg = hm.render_svg(3, 5, 4, [[0] * 5] * 3)
    assert svg.startswith("<?xml")
    assert svg.count('class="horizontal"') == 15
    ascii_art = hm.render_ascii(1, 1, 1, [[0]])
    assert ascii_art == "/\\\n/\\\n__\n"


def test_tableau_functions():
    assert hm.hook_content_gf([1], 3) == [0, 1, 1, 1]
    assert hm.ssyt_count([2, 1], 2) == 2
    assert hm.mean_norm_ssyt([2, 1], 3) == Fraction(6)


def test_staircase_functions():
    count, interior = hm.staircase_stats(2, 1, 2, [1, 0])
    assert count > 0
    assert Fraction(interior, count) == hm.staircase_mean_norm(2, 1, 2, [1, 0])


def test_verify():
    checks = hm.verify(2, 2, 2)
    assert checks
    assert all(c["pass"] for c in checks)
