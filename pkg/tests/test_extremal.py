from fractions import Fraction

import pytest


def test_merriell_max():
    from permspec.extremal import merriell_check, merriell_max

    assert [merriell_max(n) for n in (3, 4, 6, 7, 8)] == [6, 9, 36, 54, 81]
    with pytest.warns(UserWarning, match="validity range"):
        assert merriell_max(5) == Fraction(27, 2)
    for n in (6, 7, 8, 9):
        assert merriell_check(n)["agrees"]
    with pytest.raises(ValueError, match="n >= 3"):
        merriell_max(2)


def test_bolshakov_and_voorhoeve():
    from permspec.extremal import UndefinedCaseError, bolshakov_second, voorhoeve_bound

    assert [bolshakov_second(n) for n in (6, 9, 12, 15)] == [20, 120, 729, 4374]
    with pytest.raises(UndefinedCaseError, match="undefined case"):
        bolshakov_second(7)
    with pytest.raises(UndefinedCaseError):
        bolshakov_second(3)
    assert [voorhoeve_bound(n) for n in (3, 4, 5)] == [6, 8, Fraction(32, 3)]


def test_cube_conditions():
    from permspec.extremal import check_cube_conditions

    assert all(ok for _, ok in check_cube_conditions(1, 1, 1))
    names = [name for name, _ in check_cube_conditions(1, 1, 1)]
    assert len(names) == 4

    flags = [ok for _, ok in check_cube_conditions(1, 1, 3)]
    assert flags[1] is False

    flags = dict(check_cube_conditions("1/2", "1/2", 1))
    assert flags["a(4)^3 <= a(3)^4"] is True


def test_quadratic_at_cube_root():
    from permspec.extremal import quadratic_at_cube_root_nonnegative

    # x = 2: 4 - 2 - 2 = 0
    assert quadratic_at_cube_root_nonnegative(8, 1, 2)
    assert not quadratic_at_cube_root_nonnegative(8, 1, 3)
    # x = 6^(1/3) ~ 1.817: x² - x - 1 ~ 0.485
    assert quadratic_at_cube_root_nonnegative(6, 1, 1)
    assert not quadratic_at_cube_root_nonnegative(6, 1, Fraction(1, 2) + 1)


def test_max_weighted_symmetric_blocks_of_three():
    from permspec.extremal import max_weighted_symmetric

    report = max_weighted_symmetric(6, 1, 1, 2)
    assert report.max_value == 256
    assert [str(p) for p in report.attaining_partitions] == ["3+3"]
    assert report.closed_forms == {"blocks-of-3": 256, "blocks-of-3, beta=gamma-alpha": 256}
    assert report.closed_forms_agree
    assert report.maximizer_count == 1


def test_max_weighted_symmetric_blocks_of_four():
    from permspec.extremal import max_weighted_symmetric

    report = max_weighted_symmetric(8, "4/5", "1/5", 1)
    assert report.max_value == Fraction(1762, 625) ** 2
    assert [str(p) for p in report.attaining_partitions] == ["4+4"]
    assert "blocks-of-4, beta=gamma-alpha" in report.closed_forms
    assert report.closed_forms_agree
    assert report.todict()["closed_forms_agree"] is True


def test_unweighted_max_matches_merriell():
    from permspec.extremal import max_weighted_symmetric, merriell_max

    for n in (6, 7, 8, 9, 10):
        assert max_weighted_symmetric(n).max_value == merriell_max(n)


def test_theta_boundary():
    from permspec.extremal import (
        THETA,
        UndefinedCaseError,
        boundary_closed_forms,
        boundary_maximizer_count,
        ratio_below_theta,
        theta_rational,
    )

    assert THETA == pytest.approx(0.71402, rel=1e-4)
    assert float(theta_rational()) == pytest.approx(THETA, rel=1e-9)
    assert ratio_below_theta(1, 2)
    assert not ratio_below_theta("4/5", 1)
    assert boundary_maximizer_count(12) == 2
    assert boundary_maximizer_count(24) == 3
    forms = boundary_closed_forms(12)
    assert forms["relative_difference"] < 1e-4
    with pytest.raises(UndefinedCaseError, match="undefined case"):
        boundary_maximizer_count(10)
