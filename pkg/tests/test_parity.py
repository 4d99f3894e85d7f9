from itertools import combinations

import pytest


def test_testing_sequence():
    from permspec.parity import testing_sequence

    assert testing_sequence(3) == []
    assert testing_sequence(6) == [4]
    assert testing_sequence(9) == [4, 6]
    assert testing_sequence(14) == [4, 6, 8]
    with pytest.raises(ValueError):
        testing_sequence(2)


def test_upsilon_and_det_oracle():
    from permspec.core import circulant, identity, ones
    from permspec.parity import parity_det_oracle, upsilon

    assert upsilon(ones(3)) == 1
    assert upsilon(ones(3), [0]) == 0
    assert upsilon(ones(3), 0b11) == 1
    assert parity_det_oracle(identity(4)) == 1
    assert parity_det_oracle(ones(3)) == 0
    assert parity_det_oracle(circulant(7, (0, 1, 2))) == 1
    assert parity_det_oracle(circulant(7, (0, 1, 3))) == 0


def test_parity_matches_permanent():
    """Every circulant with three offsets, n = 3..9"""
    from permspec.core import circulant, permanent_ryser
    from permspec.parity import parity_ryser

    for n in range(3, 10):
        for offsets in combinations(range(n), 3):
            matrix = circulant(n, offsets)
            assert parity_ryser(matrix).bit == permanent_ryser(matrix) % 2


def test_parity_report():
    from permspec.core import circulant, direct_sum, ones
    from permspec.parity import parity_ryser

    report = parity_ryser(circulant(7, (0, 1, 2)), label="C7")
    assert report.parity == "odd"
    assert report.contributing_subsets[0] == 1
    assert report.todict()["matrix"] == "C7"

    report = parity_ryser(direct_sum(ones(3), ones(3)))
    assert report.bit == 0
    assert not report.distinct_columns
    assert report.contributing_subsets == {}


def test_not_in_class():
    from permspec.core import WeightedMatrix, identity
    from permspec.parity import NotInClassError, parity_ryser

    with pytest.raises(NotInClassError, match="exactly three"):
        parity_ryser(identity(4))
    with pytest.raises(NotInClassError, match="BinaryMatrix"):
        parity_ryser(WeightedMatrix.from_lists([[1]]))


def test_odd_subsets():
    from permspec.core import circulant, ones
    from permspec.parity import odd_subsets, parity_ryser

    assert list(odd_subsets(ones(3), 0)) == [((), [3, 3, 3])]
    matrix = circulant(9, (0, 1, 3))
    report = parity_ryser(matrix)
    for r in report.testing_sequence:
        found = list(odd_subsets(matrix, r))
        assert len(found) == report.contributing_subsets[r]
        for removed, sums in found:
            assert len(removed) == r
            assert all(s % 2 for s in sums)
