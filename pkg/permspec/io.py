"""Text and JSON formats of permspec

Matrix text format: a line holding n, followed by n lines of n
whitespace-separated rational literals ("p" or "p/q"). Several matrices
may follow each other in one file; `#` starts a comment.

JSON output is exact: a non-integral rational is written as
{"num": "p", "den": "q"} with decimal strings.
"""
import json
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Union

from ase.utils import reader, writer

from .core import BinaryMatrix, WeightedMatrix
from .spectrum import Partition, Spectrum


class MatrixFormatError(ValueError):
    def __init__(self, message):
        self.message = message

    def __str__(self):
        return self.message


def _strip(lines: Iterable[str]) -> List[tuple]:
    """(line number, content) of every non-empty, comment-free line"""
    result = []
    for lineno, line in enumerate(lines, start=1):
        content = line.split("#", 1)[0].strip()
        if content:
            result.append((lineno, content))
    return result


def _parse_entry(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise MatrixFormatError(f"line {lineno}: {token!r} is not a rational literal")


def _parse_blocks(lines: List[tuple], binary) -> List[Union[BinaryMatrix, WeightedMatrix]]:
    matrices = []
    pos = 0
    while pos < len(lines):
        lineno, header = lines[pos]
        try:
            n = int(header)
        except ValueError:
            raise MatrixFormatError(f"line {lineno}: expected the dimension n, got {header!r}")
        if n < 1:
            raise MatrixFormatError(f"line {lineno}: dimension must be positive, got {n}")
        body = lines[pos + 1 : pos + 1 + n]
        if len(body) != n:
            raise MatrixFormatError(f"line {lineno}: expected {n} rows, found {len(body)}")
        rows = []
        for row_lineno, content in body:
            tokens = content.split()
            if len(tokens) != n:
                raise MatrixFormatError(f"line {row_lineno}: expected {n} entries, found {len(tokens)}")
            rows.append([_parse_entry(tok, row_lineno) for tok in tokens])
        matrix = WeightedMatrix.from_lists(rows)
        is_binary = matrix.is_binary()
        if binary is True and not is_binary:
            raise MatrixFormatError(f"line {lineno}: matrix has entries other than 0 and 1")
        if is_binary and binary is not False:
            matrix = matrix.to_binary()
        matrices.append(matrix)
        pos += 1 + n
    return matrices


@reader
def read_matrices(fileobj, binary=None) -> List[Union[BinaryMatrix, WeightedMatrix]]:
    """All matrices of a file.

    binary=None returns a BinaryMatrix whenever every entry is 0 or 1,
    True requires it and False always gives WeightedMatrix.
    """
    return _parse_blocks(_strip(fileobj), binary)


@reader
def read_matrix(fileobj, binary=None) -> Union[BinaryMatrix, WeightedMatrix]:
    """The single matrix of a file

    Raises:
        MatrixFormatError: if the file is malformed or holds other than one matrix.
    """
    matrices = _parse_blocks(_strip(fileobj), binary)
    if len(matrices) != 1:
        raise MatrixFormatError(f"Expected exactly one matrix, found {len(matrices)}")
    return matrices[0]


def parse_matrix(text: str, binary=None) -> Union[BinaryMatrix, WeightedMatrix]:
    matrices = _parse_blocks(_strip(text.splitlines()), binary)
    if len(matrices) != 1:
        raise MatrixFormatError(f"Expected exactly one matrix, found {len(matrices)}")
    return matrices[0]


def format_matrix(matrix: Union[BinaryMatrix, WeightedMatrix], comment=None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in str(comment).splitlines())
    lines.append(str(matrix.n))
    lines.extend(str(matrix).splitlines())
    return "\n".join(lines) + "\n"


@writer
def write_matrix(fileobj, matrix, comment=None):
    fileobj.write(format_matrix(matrix, comment))


@writer
def write_matrices(fileobj, matrices, comment=None):
    for idx, matrix in enumerate(matrices):
        fileobj.write(format_matrix(matrix, comment if idx == 0 else None))


def encode_exact(obj):
    """JSON-ready copy of a report. Integral values stay JSON integers."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return obj.numerator
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, (Partition, BinaryMatrix, WeightedMatrix)):
        return str(obj)
    if isinstance(obj, Spectrum):
        return [encode_exact(v) for v in obj]
    if hasattr(obj, "todict"):
        return encode_exact(obj.todict())
    if isinstance(obj, Mapping):
        return {str(k): encode_exact(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [encode_exact(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [encode_exact(v) for v in obj]
    raise TypeError(f"Cannot encode {type(obj).__name__} as exact JSON")


def decode_exact(obj):
    """Inverse of encode_exact for numbers, lists and dicts"""
    if isinstance(obj, dict):
        if set(obj) == {"num", "den"}:
            return Fraction(int(obj["num"]), int(obj["den"]))
        return {k: decode_exact(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [decode_exact(v) for v in obj]
    return obj


def dumps_report(report, timestamp=None) -> str:
    """Deterministic JSON text (sorted keys). `timestamp` adds a
    "generated" field and is the only part allowed to differ between runs.
    """
    data = encode_exact(report)
    if timestamp is not None:
        data = {"generated": str(timestamp), "report": data}
    return json.dumps(data, sort_keys=True, indent=2)


@reader
def read_spectra(fileobj) -> Dict[int, List[int]]:
    """Small-spectra JSON {"size": [values]} as used by `upper --spectra`"""
    try:
        data = json.load(fileobj)
    except json.JSONDecodeError as e:
        raise MatrixFormatError(f"Spectra file is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise MatrixFormatError("Spectra file must hold an object {size: [values]}")
    spectra = {}
    for size, values in data.items():
        try:
            spectra[int(size)] = sorted({int(v) for v in decode_exact(values)})
        except (TypeError, ValueError):
            raise MatrixFormatError(f"Invalid spectrum for size {size!r}")
    return spectra


@writer
def write_spectra(fileobj, spectra: Mapping[int, Iterable]):
    data = {str(size): sorted(set(values)) for size, values in sorted(spectra.items())}
    json.dump(encode_exact(data), fileobj, sort_keys=True, indent=2)
    fileobj.write("\n")
