"""Exact matrix types, permanent kernels and structural predicates.

Two matrix representations are used throughout permspec:

* `BinaryMatrix`: square (0,1) pattern with bit-packed rows. Bit j of
  `rows[i]` is the entry (i, j) (little-endian inside a row).
* `WeightedMatrix`: square matrix of `fractions.Fraction` entries.

Both are immutable and hashable. Permanents are always exact: a weighted
matrix is scaled by the common denominator of its entries, the integer
permanent is computed by Ryser's formula and divided back.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union
from warnings import warn

from .accel import HAS_NUMBA, ryser_accelerated
from .utils import load_settings, to_fraction, warn_once


class EmptyMatrixError(ValueError):
    def __init__(self, message):
        self.message = message


class OracleLimitError(ValueError):
    def __init__(self, message):
        self.message = message


@dataclass(frozen=True)
class BinaryMatrix:
    """Square (0,1) matrix with bit-packed rows"""

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Matrix dimension must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError(f"Expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for row in self.rows:
            if row < 0 or row >= limit:
                raise ValueError(f"Row bits {row:b} do not fit into {self.n} columns")

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]]) -> "BinaryMatrix":
        n = len(lists)
        rows = []
        for line in lists:
            if len(line) != n:
                raise ValueError("Matrix is not square")
            bits = 0
            for j, value in enumerate(line):
                if value not in (0, 1):
                    raise ValueError(f"Entry {value!r} is not 0 or 1")
                if value:
                    bits |= 1 << j
            rows.append(bits)
        return cls(n, tuple(rows))

    @classmethod
    def from_columns_sets(cls, n: int, row_sets: Iterable[Iterable[int]]) -> "BinaryMatrix":
        """Build from the column indices holding a 1, row by row"""
        rows = []
        for cols in row_sets:
            bits = 0
            for j in cols:
                bits |= 1 << (j % n)
            rows.append(bits)
        return cls(n, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> List[List[int]]:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def row_support(self, i: int) -> List[int]:
        return [j for j in range(self.n) if (self.rows[i] >> j) & 1]

    def row_sum(self, i: int) -> int:
        return bin(self.rows[i]).count("1")

    def columns(self) -> Tuple[int, ...]:
        """Column bitmasks, bit i of column j is the entry (i, j)"""
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            for j in range(self.n):
                if (row >> j) & 1:
                    cols[j] |= 1 << i
        return tuple(cols)

    def col_sum(self, j: int) -> int:
        return sum((row >> j) & 1 for row in self.rows)

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(self.n, self.columns())

    def to_weighted(self) -> "WeightedMatrix":
        return WeightedMatrix.from_lists(self.to_lists())

    def __add__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        """Sum of two patterns, defined only when the supports are disjoint"""
        if self.n != other.n:
            raise ValueError("Dimension mismatch")
        for a, b in zip(self.rows, other.rows):
            if a & b:
                raise ValueError("Supports overlap, the sum is not a (0,1) matrix")
        return BinaryMatrix(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in line) for line in self.to_lists())


@dataclass(frozen=True)
class WeightedMatrix:
    """Square matrix of exact rationals"""

    n: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("Matrix is not square")

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence]) -> "WeightedMatrix":
        entries = tuple(tuple(to_fraction(v) for v in line) for line in lists)
        return cls(len(entries), entries)

    @classmethod
    def zeros(cls, n: int) -> "WeightedMatrix":
        return cls(n, tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n)))

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self.entries]

    def transpose(self) -> "WeightedMatrix":
        return WeightedMatrix(self.n, tuple(zip(*self.entries)) if self.n else ())

    def is_binary(self) -> bool:
        return all(v in (0, 1) for row in self.entries for v in row)

    def to_binary(self) -> BinaryMatrix:
        if not self.is_binary():
            raise ValueError("Matrix has entries other than 0 and 1")
        return BinaryMatrix.from_lists([[int(v) for v in row] for row in self.entries])

    def scaled(self, factor) -> "WeightedMatrix":
        factor = to_fraction(factor)
        return WeightedMatrix(self.n, tuple(tuple(v * factor for v in row) for row in self.entries))

    def __add__(self, other: "WeightedMatrix") -> "WeightedMatrix":
        other = as_weighted(other)
        if self.n != other.n:
            raise ValueError("Dimension mismatch")
        return WeightedMatrix(
            self.n,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __matmul__(self, other: "WeightedMatrix") -> "WeightedMatrix":
        other = as_weighted(other)
        if self.n != other.n:
            raise ValueError("Dimension mismatch")
        cols = other.transpose().entries
        return WeightedMatrix(
            self.n,
            tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols) for row in self.entries),
        )

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


MatrixLike = Union[BinaryMatrix, WeightedMatrix]


def as_weighted(matrix: MatrixLike) -> WeightedMatrix:
    if isinstance(matrix, WeightedMatrix):
        return matrix
    if isinstance(matrix, BinaryMatrix):
        return matrix.to_weighted()
    return WeightedMatrix.from_lists(matrix)


class ClassKind(Enum):
    LAMBDA3 = "lambda3"
    LAMBDA3_DIAG = "lambda3-diag"
    LAMBDA3_SYM = "lambda3-sym"
    LAMBDA_ABG = "abg"
    LAMBDA_ABG_DIAG = "abg-diag"
    LAMBDA_ABG_SYM = "abg-sym"

    @property
    def weighted(self) -> bool:
        return self in (ClassKind.LAMBDA_ABG, ClassKind.LAMBDA_ABG_DIAG, ClassKind.LAMBDA_ABG_SYM)

    @property
    def diagonal(self) -> bool:
        """Diag kinds and Sym kinds fix the main diagonal"""
        return self not in (ClassKind.LAMBDA3, ClassKind.LAMBDA_ABG)

    @property
    def symmetric(self) -> bool:
        return self in (ClassKind.LAMBDA3_SYM, ClassKind.LAMBDA_ABG_SYM)


@dataclass(frozen=True)
class ClassSpec:
    """A matrix class: Λ_n³ and its diagonal / symmetric-position subclasses,
    or the weighted class Λ_n(α,β,γ) and its subclasses.
    """

    kind: ClassKind
    weights: Optional[Tuple[Fraction, Fraction, Fraction]] = None

    def __post_init__(self):
        if self.kind.weighted:
            if self.weights is None or len(self.weights) != 3:
                raise ValueError(f"Class {self.kind.value} requires weights (alpha, beta, gamma)")
            weights = tuple(to_fraction(w) for w in self.weights)
            if any(w == 0 for w in weights):
                raise ValueError("Weights alpha, beta, gamma must all be nonzero")
            object.__setattr__(self, "weights", weights)
        elif self.weights is not None:
            raise ValueError(f"Class {self.kind.value} does not take weights")

    @classmethod
    def parse(cls, name: str, weights=None) -> "ClassSpec":
        """Build from a name such as `lambda3-diag` or `abg-sym`"""
        try:
            kind = ClassKind(name.lower())
        except ValueError:
            allowed = [k.value for k in ClassKind]
            raise ValueError(f"Unknown class {name!r}, allowed values are {allowed}")
        return cls(kind, tuple(weights) if weights is not None else None)

    @property
    def entry_values(self) -> Tuple[Fraction, Fraction, Fraction]:
        """The three nonzero values of each row, in (alpha, beta, gamma) order"""
        if self.kind.weighted:
            return self.weights
        return (Fraction(1), Fraction(1), Fraction(1))

    @property
    def diagonal_value(self) -> Fraction:
        return self.entry_values[1]

    def __str__(self):
        if self.weights is None:
            return self.kind.value
        return f"{self.kind.value}({', '.join(str(w) for w in self.weights)})"


def identity(n: int) -> BinaryMatrix:
    return BinaryMatrix(n, tuple(1 << i for i in range(n)))


def ones(n: int) -> BinaryMatrix:
    full = (1 << n) - 1
    return BinaryMatrix(n, tuple(full for _ in range(n)))


def power_matrix(n: int, k: int) -> BinaryMatrix:
    """P^k for the cyclic shift P with 1's at (i, i+1 mod n).

    k is reduced mod n, P^0 is the identity and P^-1 the transpose of P.
    """
    if n < 1:
        raise ValueError("Dimension must be at least 1")
    k %= n
    return BinaryMatrix(n, tuple(1 << ((i + k) % n) for i in range(n)))


def circulant(n: int, offsets: Iterable[int]) -> BinaryMatrix:
    """Sum of P^o over distinct offsets o (mod n)"""
    offsets = sorted({o % n for o in offsets})
    return BinaryMatrix.from_columns_sets(n, ([(i + o) % n for o in offsets] for i in range(n)))


def weighted_combination(terms: Iterable[Tuple[object, MatrixLike]]) -> WeightedMatrix:
    """Σ c_k·A_k for exact coefficients c_k"""
    total = None
    for coefficient, matrix in terms:
        term = as_weighted(matrix).scaled(coefficient)
        total = term if total is None else total + term
    if total is None:
        raise ValueError("No terms given")
    return total


def direct_sum(a: MatrixLike, b: MatrixLike) -> MatrixLike:
    """Block-diagonal matrix diag(A, B). Stays binary if both inputs are."""
    if isinstance(a, BinaryMatrix) and isinstance(b, BinaryMatrix):
        return BinaryMatrix(a.n + b.n, a.rows + tuple(row << a.n for row in b.rows))
    a, b = as_weighted(a), as_weighted(b)
    zero = Fraction(0)
    rows = [row + (zero,) * b.n for row in a.entries]
    rows += [(zero,) * a.n + row for row in b.entries]
    return WeightedMatrix(a.n + b.n, tuple(rows))


def _integer_rows(matrix: MatrixLike) -> Tuple[List[List[int]], int]:
    """Integer rows and the common denominator D of the entries"""
    if isinstance(matrix, BinaryMatrix):
        return matrix.to_lists(), 1
    denominator = reduce(lcm, (v.denominator for row in matrix.entries for v in row), 1)
    rows = [[int(v * denominator) for v in row] for row in matrix.entries]
    return rows, denominator


def ryser_gray(int_rows: Sequence[Sequence[int]]) -> int:
    """Ryser's formula over column subsets in Gray-code order.

    Consecutive subsets differ by one column, so only the rows touched by
    that column are updated. The product is skipped while a row sum is 0.
    """
    n = len(int_rows)
    columns = [[(i, int_rows[i][j]) for i in range(n) if int_rows[i][j]] for j in range(n)]
    sums = [0] * n
    zero_rows = n
    total = 0
    sign = 1
    gray = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        gray ^= 1 << j
        step = 1 if (gray >> j) & 1 else -1
        for i, value in columns[j]:
            before = sums[i]
            sums[i] = before + step * value
            if before == 0:
                zero_rows -= 1
            elif sums[i] == 0:
                zero_rows += 1
        sign = -sign
        if zero_rows == 0:
            prod = 1
            for s in sums:
                prod *= s
            total += sign * prod
    return -total if n % 2 else total


def permanent_ryser(matrix: MatrixLike, use_numba: Optional[bool] = None) -> Union[int, Fraction]:
    """Exact permanent by Ryser's inclusion-exclusion formula.

    Binary matrices give an int, weighted matrices a Fraction.

    Raises:
        EmptyMatrixError: for a 0 x 0 matrix.
    """
    if not isinstance(matrix, (BinaryMatrix, WeightedMatrix)):
        matrix = as_weighted(matrix)
    if matrix.n == 0:
        raise EmptyMatrixError("empty matrix")
    int_rows, denominator = _integer_rows(matrix)
    if use_numba is None:
        use_numba = _numba_enabled()
    value = ryser_accelerated(int_rows) if use_numba else None
    if value is None:
        value = ryser_gray(int_rows)
    if isinstance(matrix, BinaryMatrix):
        return value
    return Fraction(value, denominator**matrix.n)


_NUMBA_SETTING = []


def _numba_enabled() -> bool:
    if not _NUMBA_SETTING:
        try:
            _NUMBA_SETTING.append(load_settings()["use_numba"])
        except ValueError as e:
            warn(f"Ignoring invalid settings ({e}), numba kernel disabled")
            _NUMBA_SETTING.append(False)
        if _NUMBA_SETTING[0] and not HAS_NUMBA:
            warn_once("numba is not installed, using the pure-python Ryser kernel")
            _NUMBA_SETTING[0] = False
    return _NUMBA_SETTING[0]


def permanent_expansion(matrix: MatrixLike, limit: Optional[int] = None) -> Union[int, Fraction]:
    """Permanent by Laplace-style expansion along the first remaining row,
    memoized on the set of used columns. Independent of the Ryser kernel,
    meant as a cross-check oracle for small matrices.

    Raises:
        EmptyMatrixError: for a 0 x 0 matrix.
        OracleLimitError: when n exceeds `limit` (default from settings).
    """
    matrix = matrix if isinstance(matrix, (BinaryMatrix, WeightedMatrix)) else as_weighted(matrix)
    n = matrix.n
    if n == 0:
        raise EmptyMatrixError("empty matrix")
    if limit is None:
        limit = load_settings()["oracle_limit"]
    if n > limit:
        raise OracleLimitError(f"oracle limit: n={n} exceeds the configured limit {limit}")
    if isinstance(matrix, BinaryMatrix):
        rows = [[(j, 1) for j in matrix.row_support(i)] for i in range(n)]
        zero = 0
    else:
        rows = [[(j, v) for j, v in enumerate(row) if v] for row in matrix.entries]
        zero = Fraction(0)
    # layer i maps used-column masks of popcount i to partial sums
    layer = {0: zero + 1}
    for i in range(n):
        nxt = {}
        for used, acc in layer.items():
            for j, value in rows[i]:
                if not (used >> j) & 1:
                    key = used | (1 << j)
                    nxt[key] = nxt.get(key, zero) + acc * value
        layer = nxt
        if not layer:
            return zero
    return layer[(1 << n) - 1]


def permanent(matrix: MatrixLike) -> Union[int, Fraction]:
    """Default permanent: the Ryser kernel"""
    return permanent_ryser(matrix)


def is_class_member(matrix: MatrixLike, spec: ClassSpec) -> bool:
    """Row/column multiset condition, plus the diagonal condition for Diag
    kinds and the symmetric-position condition for Sym kinds.
    """
    m = as_weighted(matrix)
    n = m.n
    if n == 0:
        return False
    alpha, beta, gamma = spec.entry_values
    expected = sorted(spec.entry_values)
    zero = Fraction(0)

    def line_ok(line):
        nonzero = sorted(v for v in line if v != zero)
        return nonzero == expected

    if not spec.kind.weighted and not m.is_binary():
        return False
    if not all(line_ok(row) for row in m.entries):
        return False
    if not all(line_ok(col) for col in m.transpose().entries):
        return False
    if spec.kind.diagonal and any(m.entries[i][i] != beta for i in range(n)):
        return False
    if spec.kind.symmetric:
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if (m.entries[i][j] == alpha) != (m.entries[j][i] == gamma):
                    return False
    return True


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)


def component_index_sets(matrix: MatrixLike) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(rows, columns) of every connected component of the bipartite
    support graph, ordered by their smallest row.
    """
    n = matrix.n
    uf = _UnionFind(2 * n)
    if isinstance(matrix, BinaryMatrix):
        support = [matrix.row_support(i) for i in range(n)]
    else:
        support = [[j for j, v in enumerate(row) if v] for row in matrix.entries]
    for i, cols in enumerate(support):
        for j in cols:
            uf.union(i, n + j)
    groups = {}
    for node in range(2 * n):
        groups.setdefault(uf.find(node), []).append(node)
    result = []
    for nodes in groups.values():
        rows = tuple(x for x in nodes if x < n)
        cols = tuple(x - n for x in nodes if x >= n)
        if rows or cols:
            result.append((rows, cols))
    result.sort(key=lambda rc: rc[0][0] if rc[0] else n + rc[1][0])
    return result


def submatrix(matrix: MatrixLike, rows: Sequence[int], cols: Sequence[int]) -> MatrixLike:
    if isinstance(matrix, BinaryMatrix):
        lists = matrix.to_lists()
        return BinaryMatrix.from_lists([[lists[i][j] for j in cols] for i in rows])
    return WeightedMatrix(len(rows), tuple(tuple(matrix.entries[i][j] for j in cols) for i in rows))


def decompose_components(matrix: MatrixLike) -> List[MatrixLike]:
    """Direct summands of a class member under simultaneous row/column
    permutation: the connected components of the bipartite support graph.

    A member is completely indecomposable iff a single block comes back.

    Raises:
        ValueError: if a component is not square (not a class member).
    """
    blocks = []
    for rows, cols in component_index_sets(matrix):
        if len(rows) != len(cols):
            raise ValueError("Support component is not square, matrix is not doubly-stochastic")
        blocks.append(submatrix(matrix, rows, cols))
    return blocks


def is_indecomposable(matrix: MatrixLike) -> bool:
    return len(component_index_sets(matrix)) == 1
