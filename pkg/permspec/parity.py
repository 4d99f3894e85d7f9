"""Parity of the permanent on Λ_n³ from Ryser's formula modulo 2.

Modulo 2 the Ryser sum only counts column sets whose removal leaves all
row sums odd. For A ∈ Λ_n³ with pairwise distinct columns every row sum
is then 3 or 1, which forces the number r of removed columns into
{0} ∪ {4, 6, ..., 2⌊n/3⌋}. Two equal columns make the permanent even.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from .core import BinaryMatrix


class NotInClassError(ValueError):
    def __init__(self, message):
        self.message = message


def _removed_mask(removed_cols: Union[int, Iterable[int]]) -> int:
    if isinstance(removed_cols, int):
        return removed_cols
    mask = 0
    for j in removed_cols:
        mask |= 1 << j
    return mask


def upsilon(matrix: BinaryMatrix, removed_cols: Union[int, Iterable[int]] = ()) -> int:
    """1 if every row sum is odd once the given columns are zeroed, else 0"""
    keep = ~_removed_mask(removed_cols)
    return int(all(bin(row & keep).count("1") % 2 for row in matrix.rows))


def parity_det_oracle(matrix: BinaryMatrix) -> int:
    """det A over GF(2), by elimination on bit-packed rows"""
    rows = list(matrix.rows)
    n = matrix.n
    for col in range(n):
        bit = 1 << col
        pivot = next((i for i in range(col, n) if rows[i] & bit), None)
        if pivot is None:
            return 0
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for i in range(col + 1, n):
            if rows[i] & bit:
                rows[i] ^= rows[col]
    return 1


def testing_sequence(n: int) -> List[int]:
    """Removal sizes 4, 6, ..., 2t with t = ⌊n/3⌋"""
    if n < 3:
        raise ValueError(f"testing_sequence is defined for n >= 3, got {n}")
    return list(range(4, 2 * (n // 3) + 1, 2))


def _require_lambda3(matrix: BinaryMatrix):
    if not isinstance(matrix, BinaryMatrix):
        raise NotInClassError("Parity test expects a BinaryMatrix")
    if any(matrix.row_sum(i) != 3 for i in range(matrix.n)) or any(
        matrix.col_sum(j) != 3 for j in range(matrix.n)
    ):
        raise NotInClassError("Matrix is not in Λ_n³: every row and column needs exactly three 1's")


def _odd_removals(columns: Tuple[int, ...], n: int, sizes) -> Iterator[Tuple[int, ...]]:
    """Column sets with a size in `sizes` whose removal leaves every row
    odd. Row parities are tracked as a mask, bit i set when row i is odd.
    """
    full = (1 << n) - 1
    largest = max(sizes)
    # rows that can still be flipped by columns j..n-1
    reachable = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        reachable[j] = reachable[j + 1] | columns[j]

    def walk(start, chosen, odd_rows):
        if chosen and odd_rows == full and len(chosen) in sizes:
            yield tuple(chosen)
        if len(chosen) == largest:
            return
        for j in range(start, n):
            flipped = odd_rows ^ columns[j]
            # even rows with no column left to fix them
            if (full & ~flipped) & ~reachable[j + 1]:
                continue
            chosen.append(j)
            yield from walk(j + 1, chosen, flipped)
            chosen.pop()

    if sizes:
        yield from walk(0, [], full)


@dataclass
class ParityReport:
    bit: int
    testing_sequence: List[int]
    contributing_subsets: Dict[int, int] = field(default_factory=dict)
    distinct_columns: bool = True
    label: Optional[str] = None

    @property
    def parity(self) -> str:
        return "odd" if self.bit else "even"

    def todict(self) -> dict:
        return {
            "matrix": self.label,
            "parity": self.parity,
            "distinct_columns": self.distinct_columns,
            "testing_sequence": self.testing_sequence,
            "contributing_subsets": {str(r): c for r, c in sorted(self.contributing_subsets.items())},
        }


def parity_ryser(matrix: BinaryMatrix, label: Optional[str] = None) -> ParityReport:
    """Parity of per A for A ∈ Λ_n³ by counting odd-row removals

    Raises:
        NotInClassError: if A is not in Λ_n³.
    """
    _require_lambda3(matrix)
    sequence = testing_sequence(matrix.n)
    columns = matrix.columns()
    if len(set(columns)) < matrix.n:
        return ParityReport(0, sequence, {}, distinct_columns=False, label=label)
    counts = {0: 1}
    counts.update({r: 0 for r in sequence})
    for removed in _odd_removals(columns, matrix.n, set(sequence)):
        counts[len(removed)] += 1
    return ParityReport(sum(counts.values()) % 2, sequence, counts, label=label)


def odd_subsets(matrix: BinaryMatrix, r: int) -> Iterator[Tuple[Tuple[int, ...], List[int]]]:
    """(removed columns, row sums) for every r-set of columns leaving only
    odd row sums
    """
    if r == 0:
        if upsilon(matrix):
            yield (), [matrix.row_sum(i) for i in range(matrix.n)]
        return
    for removed in _odd_removals(matrix.columns(), matrix.n, {r}):
        keep = ~_removed_mask(removed)
        yield removed, [bin(row & keep).count("1") for row in matrix.rows]
