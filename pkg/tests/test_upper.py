from fractions import Fraction

import pytest


def test_threshold():
    from permspec.upper import threshold

    assert threshold(0, 0) == 1
    assert threshold(1, 1) == Fraction(27, 32)
    assert threshold(2, 3) == Fraction(9, 4) * Fraction(9, 16) ** 3


def test_small_depth_tables():
    from permspec.upper import upper_symmetric

    assert upper_symmetric(12, 1).coefficients == [1, Fraction(9, 16)]
    ranked = upper_symmetric(16, 1)
    assert ranked.coefficients == [Fraction(3, 2), Fraction(31, 36), Fraction(27, 32)]
    assert ranked.scale == 6**5
    assert ranked.values[0] == 9 * 6**4
    assert [str(p) for p in ranked.provenance[-1]] == ["4+4+4+4"]


def test_hypothesis_violated():
    from permspec.upper import HypothesisViolated, upper_general, upper_symmetric

    with pytest.raises(HypothesisViolated, match="hypothesis violated"):
        upper_symmetric(20, 2)
    with pytest.raises(HypothesisViolated):
        upper_general(5, 0)
    with pytest.raises(HypothesisViolated, match="non-negative"):
        upper_symmetric(30, -1)


def test_symmetric_tables_against_published():
    from permspec.tables import default_tables
    from permspec.upper import table_mismatches, upper_symmetric

    tables = default_tables()
    for j, (n, t) in {0: (36, 3), 2: (32, 2)}.items():
        ranked = upper_symmetric(n, t)
        published = tables.coefficients("symmetric", j)
        assert ranked.coefficients[: len(published)] == published
        assert table_mismatches("symmetric", j, ranked.coefficients) == []


def test_symmetric_residue_one_recomputation():
    from permspec.upper import table_mismatches, upper_symmetric

    ranked = upper_symmetric(28, 2)
    assert ranked.coefficients[8:10] == [Fraction(49, 96), Fraction(637, 1296)]
    # 4+4+8 blocks: 9·9·49 / 6^5
    assert "8+4+4+3+3+3+3" in [str(p) for p in ranked.provenance[8]]
    mismatches = table_mismatches("symmetric", 1, ranked.coefficients)
    assert [m["rank"] for m in mismatches] == [9, 10]


def test_upper_general_small():
    from permspec.upper import upper_general

    ranked = upper_general(8, 0)
    assert ranked.coefficients == [Fraction(9, 4)]
    assert ranked.values == [81]
    assert ranked.conditional_on_mci
    assert ranked.blocking_bound is None


def test_upper_general_strict_missing():
    from permspec.upper import MissingSpectrumError, upper_general

    with pytest.raises(MissingSpectrumError, match="required") as excinfo:
        upper_general(24, 2)
    assert 9 in excinfo.value.sizes


def test_upper_general_partial_spectra():
    """User spectra without sizes 3 and 4 are reported, not raised"""
    from permspec.upper import upper_general

    ranked = upper_general(24, 1, {5: [12, 13], 8: [52]}, strict=False)
    assert ranked.coefficients == [1]
    assert ranked.missing_sizes == [4, 6, 7, 9, 12]
    assert ranked.certified == 0
    assert ranked.todict()["missing_sizes"] == [4, 6, 7, 9, 12]


def test_upper_general_bounded_spectra():
    from permspec.upper import MissingSpectrumError, upper_general

    spectra = {4: [9], 5: [12, 13]}
    ranked = upper_general(24, 1, spectra, strict=False)
    assert ranked.coefficients == [1, Fraction(9, 16)]
    assert [str(p) for p in ranked.provenance[1]] == ["4+4+4+3+3+3+3"]
    assert ranked.missing_sizes == [6]
    assert ranked.blocking_bound == 1
    assert ranked.certified == 1

    with pytest.raises(MissingSpectrumError) as excinfo:
        upper_general(24, 1, spectra)
    assert excinfo.value.sizes == [6]


@pytest.mark.parametrize(
    "j, n, expected_certified",
    [(0, 24, 4), (1, 28, 6), (2, 32, 11)],
)
def test_upper_general_certified(j, n, expected_certified):
    from permspec.tables import default_tables
    from permspec.upper import upper_general

    ranked = upper_general(n, 2, strict=False)
    assert ranked.j == j
    assert ranked.certified == expected_certified
    assert ranked.blocking_bound is not None
    published = default_tables().coefficients("general", j)
    certified = ranked.coefficients[: ranked.certified]
    if j == 1:
        assert certified[5] == Fraction(13, 16)
        assert published[5] == Fraction(13, 15)
        certified = certified[:5]
        published = published[:5]
    assert certified == published[: len(certified)]


@pytest.mark.parametrize(
    "n, expected",
    [(24, [1, 2, 3, 4]), (32, [1, 2, 5, 7, 8, 9, 11])],
)
def test_attained_in_symmetric(n, expected):
    from permspec.tables import default_tables
    from permspec.upper import RankedMagnitudes, attained_in_symmetric, upper_general

    ranked = upper_general(n, 2, strict=False)
    top = RankedMagnitudes(
        ranked.kind,
        n,
        ranked.t,
        ranked.j,
        ranked.coefficients[: ranked.certified],
        ranked.provenance[: ranked.certified],
        ranked.certified,
    )
    assert attained_in_symmetric(top) == expected
    assert default_tables().attained_in_symmetric(ranked.j) == expected


def test_mci_bounds():
    from permspec.upper import MissingSpectrumError, mci_bounds

    known = {3: 6, 4: 9, 5: 13, 6: 20, 7: 32, 8: 52}
    bounds = mci_bounds(known, 13)
    assert [bounds[s] for s in range(9, 14)] == [117, 169, 260, 400, 640]
    assert bounds[5] == 13
    with pytest.raises(MissingSpectrumError, match="size 4"):
        mci_bounds({3: 6}, 5)
    assert mci_bounds({3: 6, 5: 13}, 7, strict=False) == {3: 6, 5: 13, 6: 36}


def test_table_fixture():
    from permspec.tables import RankOutOfRange
    from permspec.upper import table_fixture

    assert table_fixture("symmetric", 0, 1) == 1
    assert table_fixture("general", 2, 3) == 2
    with pytest.raises(RankOutOfRange, match="out of range"):
        table_fixture("symmetric", 0, 11)
