import json
from fractions import Fraction

import pytest

fano_text = """# incidence matrix of the Fano plane
7
1 1 0 1 0 0 0
0 1 1 0 1 0 0
0 0 1 1 0 1 0
0 0 0 1 1 0 1
1 0 0 0 1 1 0
0 1 0 0 0 1 1
1 0 1 0 0 0 1
"""


def test_read_matrix(fs):
    from permspec.core import BinaryMatrix, permanent_ryser
    from permspec.io import read_matrix

    fs.create_file("fano.txt", contents=fano_text)
    matrix = read_matrix("fano.txt")
    assert isinstance(matrix, BinaryMatrix)
    assert permanent_ryser(matrix) == 24
    weighted = read_matrix("fano.txt", binary=False)
    assert weighted.to_binary() == matrix


def test_read_weighted_matrices(fs):
    from permspec.core import WeightedMatrix
    from permspec.io import read_matrices

    fs.create_file("two.txt", contents="2\n1/2 -1\n0 3  # trailing comment\n\n1\n7\n")
    first, second = read_matrices("two.txt")
    assert isinstance(first, WeightedMatrix)
    assert first.entries[0] == (Fraction(1, 2), Fraction(-1))
    assert second.n == 1


@pytest.mark.parametrize(
    "text, message",
    [
        ("x\n1\n", "expected the dimension"),
        ("2\n1 0\n", "expected 2 rows"),
        ("2\n1 0\n1\n", "expected 2 entries"),
        ("1\n1/0\n", "not a rational literal"),
        ("0\n", "dimension must be positive"),
        ("1\n1\n1\n1\n", "Expected exactly one matrix"),
    ],
)
def test_malformed_input(text, message):
    from permspec.io import MatrixFormatError, parse_matrix

    with pytest.raises(MatrixFormatError, match=message):
        parse_matrix(text)


def test_binary_required():
    from permspec.io import MatrixFormatError, parse_matrix

    with pytest.raises(MatrixFormatError, match="other than 0 and 1"):
        parse_matrix("1\n2\n", binary=True)


def test_write_and_read_back(fs):
    from permspec.core import circulant
    from permspec.io import format_matrix, read_matrices, write_matrices, write_matrix

    matrix = circulant(5, (0, 1, 2))
    text = format_matrix(matrix, comment="C5")
    assert text.splitlines()[:3] == ["# C5", "5", "1 1 1 0 0"]
    write_matrix("c5.txt", matrix)
    write_matrices("both.txt", [matrix, circulant(6, (0, 2, 4))])
    assert read_matrices("c5.txt") == [matrix]
    assert [m.n for m in read_matrices("both.txt")] == [5, 6]


def test_encode_exact():
    from permspec.io import decode_exact, dumps_report, encode_exact
    from permspec.spectrum import Partition, Spectrum

    report = {
        "values": Spectrum((Fraction(755, 8), 17)),
        "partition": Partition((4, 4, 3)),
        "ratio": Fraction(-2, 6),
        "set": {3, 1},
    }
    encoded = encode_exact(report)
    assert encoded["values"] == [17, {"num": "755", "den": "8"}]
    assert encoded["partition"] == "4+4+3"
    assert encoded["ratio"] == {"num": "-1", "den": "3"}
    assert encoded["set"] == [1, 3]
    assert decode_exact(encoded)["ratio"] == Fraction(-1, 3)

    text = dumps_report({"b": 1, "a": Fraction(1, 2)})
    assert json.loads(text) == {"a": {"den": "2", "num": "1"}, "b": 1}
    assert text == dumps_report({"a": Fraction(1, 2), "b": 1})
    assert json.loads(dumps_report({}, timestamp="today"))["generated"] == "today"

    with pytest.raises(TypeError, match="Cannot encode"):
        encode_exact(object())


def test_spectra_files(fs):
    from permspec.io import MatrixFormatError, read_spectra, write_spectra

    write_spectra("small.json", {9: [117, 100, 117], 3: [6]})
    assert read_spectra("small.json") == {3: [6], 9: [100, 117]}
    fs.create_file("bad.json", contents="[1, 2]")
    with pytest.raises(MatrixFormatError, match="must hold an object"):
        read_spectra("bad.json")
    fs.create_file("broken.json", contents="{")
    with pytest.raises(MatrixFormatError, match="not valid JSON"):
        read_spectra("broken.json")
