import pytest


def test_offsets():
    from permspec.circulant import CirculantOffsets

    c = CirculantOffsets(7, (5, 2, 3))
    assert c.offsets == (2, 3, 5)
    assert c.normalized().offsets == (0, 1, 3)
    assert c.canonical().offsets == (0, 1, 3)
    assert len(c.orbit()) == 14
    assert str(c) == "{2, 3, 5} mod 7"
    with pytest.raises(ValueError, match="not distinct"):
        CirculantOffsets(5, (0, 5, 1))


def test_reis_count():
    from permspec.circulant import canonical_classes, reis_count, reis_triangle_cases

    assert [reis_count(n, 3) for n in (5, 6, 7, 12)] == [2, 3, 4, 12]
    assert reis_count(4, 2) == 2
    assert reis_count(8, 4) == 8
    for n in range(3, 31):
        assert reis_count(n, 3) == reis_triangle_cases(n)
    for n, k in [(7, 3), (8, 4), (9, 4), (10, 5)]:
        assert len(canonical_classes(n, k)) == reis_count(n, k)
    with pytest.raises(ValueError, match="1 <= k <= n"):
        reis_count(3, 4)


def test_circulant_spectrum():
    from permspec.circulant import circulant_bound, circulant_spectrum

    assert list(circulant_spectrum(3)) == [6]
    assert list(circulant_spectrum(5)) == [13]
    assert list(circulant_spectrum(6)) == [17, 20, 36]
    for n in range(3, 13):
        assert len(circulant_spectrum(n)) <= circulant_bound(n)
    with pytest.raises(ValueError, match="n >= 3"):
        circulant_spectrum(2)


def test_class_permanents_constant_on_orbit():
    from permspec.circulant import CirculantOffsets, circulant_matrix, class_permanents
    from permspec.core import permanent_ryser

    for rep, per in class_permanents(8):
        for image in rep.orbit():
            assert permanent_ryser(circulant_matrix(CirculantOffsets(8, image))) == per


def test_weighted_class_count():
    from permspec.circulant import reis_count, weighted_class_bound, weighted_class_count

    for n in range(3, 10):
        assert weighted_class_count(n, "abc") == (n - 1) * (n - 2) // 2
        assert weighted_class_count(n, "aaa") == reis_count(n, 3)
        for pattern in ("aaa", "aab", "abc"):
            assert weighted_class_count(n, pattern) <= weighted_class_bound(n, pattern)
    assert weighted_class_count(5, "aab") == 4
    assert weighted_class_count(10, "aab") == 20
    with pytest.raises(ValueError, match="Unknown pattern"):
        weighted_class_count(5, "abb")


def test_circulant_parity_census():
    from permspec.circulant import circulant_parity_census

    census = circulant_parity_census(7)
    assert (census["odd"], census["even"]) == (21, 14)
    assert census["disagreements"] == []
