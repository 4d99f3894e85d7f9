"""Exhaustive enumeration of the matrix classes and brute-force spectra.

Binary classes are built row by row, each row a 3-subset of the columns
taken in lexicographic order, pruned on column capacities. Weighted
classes are built as 3-rowed Latin rectangles (the columns of α, β and γ
in every row), and Λ̂_n(α,β,γ) from permutations whose cycles all have
length >= 3.

The search space is split by the first two rows. Shard i of N takes the
prefixes i, i+N, i+2N, ... so any N gives a disjoint cover, and results
are merged as set or count unions.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .core import (
    BinaryMatrix,
    ClassKind,
    ClassSpec,
    WeightedMatrix,
    is_indecomposable,
    permanent_ryser,
)
from .sequences import asymptotic_estimate, count_lambda_abg_diag, latin_count
from .spectrum import Spectrum, weighted_from_permutation
from .utils import load_settings

PREFIX_DEPTH = 2

_FULL, _DIAG, _SYM, _CANONICAL = "full", "diag", "sym", "canonical"


class EnumerationLimitError(ValueError):
    def __init__(self, message):
        self.message = message


@dataclass(frozen=True)
class EnumerationTask:
    """One enumeration job. `shard` is (index, count) or None for all."""

    spec: ClassSpec
    n: int
    indecomposable_only: bool = False
    canonical: bool = False
    shard: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"Enumeration requires n >= 3, got {self.n}")
        if self.canonical and self.spec.kind is not ClassKind.LAMBDA3:
            raise ValueError("Canonical mode is only available for the class lambda3")
        if self.shard is not None:
            index, count = self.shard
            if count < 1 or not 0 <= index < count:
                raise ValueError(f"Invalid shard {index} of {count}")

    def with_shard(self, index: int, count: int) -> "EnumerationTask":
        return EnumerationTask(self.spec, self.n, self.indecomposable_only, self.canonical, (index, count))


class _BinarySearch:
    """Row-by-row backtracking over (0,1) rows with three 1's"""

    def __init__(self, n: int, mode: str):
        self.n = n
        self.mode = mode
        self.candidates = [sum(1 << c for c in combo) for combo in combinations(range(n), 3)]
        self.index_of = {mask: idx for idx, mask in enumerate(self.candidates)}
        self.rows: List[int] = []
        self.row_index: List[int] = []
        self.colsums = [0] * n
        # tied[j]: columns j and j+1 agree on all rows placed so far
        self.tied = [True] * (n - 1)
        self._tied_stack: List[List[bool]] = []

    def _fits(self, i: int, idx: int, mask: int) -> bool:
        n = self.n
        remaining = n - i - 1
        for j in range(n):
            s = self.colsums[j] + ((mask >> j) & 1)
            if s > 3 or 3 - s > remaining:
                return False
        if self.mode in (_DIAG, _SYM) and not (mask >> i) & 1:
            return False
        if self.mode == _SYM:
            low = 0
            for j in range(i):
                if (self.rows[j] >> i) & 1:
                    low |= 1 << j
            if mask & ((1 << i) - 1) != low:
                return False
        if self.mode == _CANONICAL:
            for j in range(n - 1):
                if self.tied[j] and ((mask >> j) & 1) < ((mask >> (j + 1)) & 1):
                    return False
        return True

    def _push(self, idx: int, mask: int):
        self.rows.append(mask)
        self.row_index.append(idx)
        for j in range(self.n):
            self.colsums[j] += (mask >> j) & 1
        self._tied_stack.append(self.tied)
        self.tied = [
            t and ((mask >> j) & 1) == ((mask >> (j + 1)) & 1) for j, t in enumerate(self.tied)
        ]

    def _pop(self):
        mask = self.rows.pop()
        self.row_index.pop()
        for j in range(self.n):
            self.colsums[j] -= (mask >> j) & 1
        self.tied = self._tied_stack.pop()

    def _walk(self, depth: int) -> Iterator[Tuple[int, ...]]:
        i = len(self.rows)
        if i == depth:
            yield tuple(self.rows)
            return
        # canonical rows are non-decreasing in the combination order
        start = self.row_index[-1] if self.mode == _CANONICAL and self.row_index else 0
        for idx in range(start, len(self.candidates)):
            mask = self.candidates[idx]
            if self._fits(i, idx, mask):
                self._push(idx, mask)
                yield from self._walk(depth)
                self._pop()

    def extend(self, prefix: Tuple[int, ...], depth: int) -> Iterator[Tuple[int, ...]]:
        for mask in prefix:
            self._push(self.index_of[mask], mask)
        try:
            yield from self._walk(depth)
        finally:
            for _ in prefix:
                self._pop()


class _LatinSearch:
    """Rows (cα, cβ, cγ) of distinct columns, each weight once per column"""

    def __init__(self, n: int, diagonal: bool):
        self.n = n
        self.diagonal = diagonal
        self.used = [0, 0, 0]
        self.rows: List[Tuple[int, int, int]] = []

    def _choices(self, i: int) -> Iterator[Tuple[int, int, int]]:
        n = self.n
        used_a, used_b, used_g = self.used
        betas = [i] if self.diagonal else range(n)
        for cb in betas:
            if (used_b >> cb) & 1:
                continue
            for ca in range(n):
                if ca == cb or (used_a >> ca) & 1:
                    continue
                for cg in range(n):
                    if cg in (ca, cb) or (used_g >> cg) & 1:
                        continue
                    yield ca, cb, cg

    def _push(self, row):
        self.rows.append(row)
        for k in range(3):
            self.used[k] |= 1 << row[k]

    def _pop(self):
        row = self.rows.pop()
        for k in range(3):
            self.used[k] &= ~(1 << row[k])

    def _walk(self, depth: int):
        i = len(self.rows)
        if i == depth:
            yield tuple(self.rows)
            return
        for row in self._choices(i):
            self._push(row)
            yield from self._walk(depth)
            self._pop()

    def extend(self, prefix, depth):
        for row in prefix:
            self._push(row)
        try:
            yield from self._walk(depth)
        finally:
            for _ in prefix:
                self._pop()


class _LongCycleSearch:
    """Permutations s without fixed points or 2-cycles, as image tuples"""

    def __init__(self, n: int):
        self.n = n
        self.images: List[int] = []
        self.used = 0

    def _walk(self, depth: int):
        i = len(self.images)
        if i == depth:
            yield tuple(self.images)
            return
        for target in range(self.n):
            if target == i or (self.used >> target) & 1:
                continue
            if target < i and self.images[target] == i:
                continue
            self.images.append(target)
            self.used |= 1 << target
            yield from self._walk(depth)
            self.used &= ~(1 << target)
            self.images.pop()

    def extend(self, prefix, depth):
        for target in prefix:
            self.images.append(target)
            self.used |= 1 << target
        try:
            yield from self._walk(depth)
        finally:
            for target in prefix:
                self.images.pop()
                self.used &= ~(1 << target)


def _searcher(task: EnumerationTask):
    kind = task.spec.kind
    if not kind.weighted:
        if kind is ClassKind.LAMBDA3:
            mode = _CANONICAL if task.canonical else _FULL
        elif kind is ClassKind.LAMBDA3_DIAG:
            mode = _DIAG
        else:
            mode = _SYM
        return _BinarySearch(task.n, mode)
    if kind is ClassKind.LAMBDA_ABG_SYM:
        return _LongCycleSearch(task.n)
    return _LatinSearch(task.n, diagonal=kind is ClassKind.LAMBDA_ABG_DIAG)


def _to_matrix(task: EnumerationTask, leaf) -> object:
    kind = task.spec.kind
    n = task.n
    if not kind.weighted:
        return BinaryMatrix(n, leaf)
    alpha, beta, gamma = task.spec.weights
    if kind is ClassKind.LAMBDA_ABG_SYM:
        return weighted_from_permutation(leaf, alpha, beta, gamma)
    zero = Fraction(0)
    rows = []
    for ca, cb, cg in leaf:
        row = [zero] * n
        row[ca], row[cb], row[cg] = alpha, beta, gamma
        rows.append(tuple(row))
    return WeightedMatrix(n, tuple(rows))


def check_limits(task: EnumerationTask, settings: Optional[dict] = None, allow_heavy: bool = False):
    """Raises EnumerationLimitError when the task exceeds the configured
    ceilings. Runs above `heavy_n` need allow_heavy.
    """
    settings = load_settings() if settings is None else settings
    kind, n = task.spec.kind, task.n
    limit = settings["sym_limit"] if kind.symmetric else settings["diag_limit"]
    if kind.weighted:
        estimate = f"{count_lambda_abg_diag(n) if kind.diagonal else latin_count(n)} (exact)"
    elif kind is ClassKind.LAMBDA3:
        estimate = f"~{asymptotic_estimate('lambda3', n):.3g}"
    else:
        estimate = f"~{asymptotic_estimate('lambda3diag', n):.3g}"
    if n > limit:
        raise EnumerationLimitError(
            f"n={n} exceeds the enumeration limit {limit} for {task.spec} (class size {estimate})"
        )
    if not kind.symmetric and n > settings["heavy_n"] and not allow_heavy:
        raise EnumerationLimitError(
            f"n={n} is above heavy_n={settings['heavy_n']} for {task.spec} (class size {estimate}); "
            "pass allow_heavy to run it"
        )


def enumerate_matrices(
    task: EnumerationTask, settings: Optional[dict] = None, allow_heavy: bool = False
) -> Iterator[object]:
    """Every matrix of the task's class (or its shard) exactly once, in
    lexicographic order of the rows. With `indecomposable_only` matrices
    with more than one direct summand are skipped.

    Weighted classes with repeated weights may produce one matrix from
    several Latin rectangles; those duplicates are removed within a shard.
    """
    check_limits(task, settings, allow_heavy)
    depth = min(PREFIX_DEPTH, task.n)
    search = _searcher(task)
    prefixes = list(search.extend((), depth))
    if task.shard is not None:
        index, count = task.shard
        prefixes = prefixes[index::count]
    dedupe = task.spec.kind.weighted and len(set(task.spec.weights)) < 3
    seen = set()
    for prefix in prefixes:
        for leaf in search.extend(prefix, task.n):
            matrix = _to_matrix(task, leaf)
            if dedupe:
                if matrix in seen:
                    continue
                seen.add(matrix)
            if task.indecomposable_only and not is_indecomposable(matrix):
                continue
            yield matrix


def _run_shard(payload):
    task, what, allow_heavy, settings = payload
    matrices = enumerate_matrices(task, settings, allow_heavy)
    if what == "spectrum":
        return {permanent_ryser(m) for m in matrices}
    if what == "count":
        return sum(1 for _ in matrices)
    if what == "set":
        return set(matrices)
    raise ValueError(f"Unknown shard result {what!r}")


def _run_sharded(
    task: EnumerationTask,
    what: str,
    workers: Optional[int],
    allow_heavy: bool,
    settings: Optional[dict] = None,
):
    if settings is None:
        settings = load_settings(workers=workers)
    elif workers is not None:
        settings = dict(settings, workers=workers)
    workers = settings["workers"]
    check_limits(task, settings, allow_heavy)
    if task.shard is not None or workers == 1:
        return [_run_shard((task, what, allow_heavy, settings))]
    payloads = [(task.with_shard(i, workers), what, allow_heavy, settings) for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_shard, payloads))


def _default_canonical(spec: ClassSpec, canonical: Optional[bool]) -> bool:
    if canonical is None:
        return spec.kind is ClassKind.LAMBDA3
    return canonical


def brute_spectrum(
    spec: ClassSpec,
    n: int,
    workers: Optional[int] = None,
    canonical: Optional[bool] = None,
    allow_heavy: bool = False,
    indecomposable_only: bool = False,
    shard: Optional[Tuple[int, int]] = None,
    settings: Optional[dict] = None,
) -> Spectrum:
    """Set of permanents over the enumerated class.

    For lambda3 the canonical (doubly lexicographic) representatives are
    used unless canonical=False; every row/column permutation orbit has
    one, and the permanent is constant on orbits.
    """
    task = EnumerationTask(spec, n, indecomposable_only, _default_canonical(spec, canonical), shard)
    values = set()
    for part in _run_sharded(task, "spectrum", workers, allow_heavy, settings):
        values |= part
    return Spectrum(tuple(values))


def brute_count(
    spec: ClassSpec,
    n: int,
    workers: Optional[int] = None,
    allow_heavy: bool = False,
    canonical: bool = False,
    indecomposable_only: bool = False,
    shard: Optional[Tuple[int, int]] = None,
    settings: Optional[dict] = None,
) -> int:
    """Number of members of the class (canonical=True counts the doubly
    lexicographic representatives instead)
    """
    task = EnumerationTask(spec, n, indecomposable_only, canonical, shard)
    if spec.kind.weighted and len(set(spec.weights)) < 3:
        merged = set()
        for part in _run_sharded(task, "set", workers, allow_heavy, settings):
            merged |= part
        return len(merged)
    return sum(_run_sharded(task, "count", workers, allow_heavy, settings))


def indecomposable_spectrum(
    n: int, workers: Optional[int] = None, settings: Optional[dict] = None
) -> Tuple[Spectrum, int]:
    """Permanents of completely indecomposable members of Λ_n³ and their
    maximum μ₁(n)
    """
    spectrum = brute_spectrum(
        ClassSpec(ClassKind.LAMBDA3), n, workers=workers, indecomposable_only=True, settings=settings
    )
    return spectrum, spectrum.max


@dataclass
class MciReport:
    n_max: int
    mu: Dict[int, int]
    pairs: List[Tuple[int, int, bool]] = field(default_factory=list)
    sqrt3_bound: Dict[int, bool] = field(default_factory=dict)

    @property
    def violations(self) -> List[Tuple[int, int]]:
        return [(n1, n2) for n1, n2, ok in self.pairs if not ok]

    @property
    def bound_violations(self) -> List[int]:
        return [n for n, ok in self.sqrt3_bound.items() if not ok]

    def todict(self) -> dict:
        return {
            "n_max": self.n_max,
            "mu": {str(k): v for k, v in sorted(self.mu.items())},
            "pairs": [[n1, n2, ok] for n1, n2, ok in self.pairs],
            "mu_below_sqrt3_power": {str(k): v for k, v in sorted(self.sqrt3_bound.items())},
            "violations": [list(p) for p in self.violations],
        }


def mci_check(
    n_max: int,
    workers: Optional[int] = None,
    mu: Optional[Dict[int, int]] = None,
    settings: Optional[dict] = None,
) -> MciReport:
    """Check μ₁(n1 + n2) <= μ₁(n1)·μ₁(n2) for 3 <= n1 <= n2, n1 + n2 <= n_max,
    and μ₁(n) <= 3^{n/2} (as μ₁(n)² <= 3ⁿ) for 4 <= n <= n_max.

    `mu` supplies known maxima and skips their enumeration.
    """
    if n_max < 3:
        raise ValueError(f"mci_check requires n_max >= 3, got {n_max}")
    values = dict(mu or {})
    for n in range(3, n_max + 1):
        if n not in values:
            values[n] = indecomposable_spectrum(n, workers, settings)[1]
    report = MciReport(n_max, {n: values[n] for n in range(3, n_max + 1)})
    for n1 in range(3, n_max + 1):
        for n2 in range(n1, n_max - n1 + 1):
            report.pairs.append((n1, n2, values[n1 + n2] <= values[n1] * values[n2]))
    for n in range(4, n_max + 1):
        report.sqrt3_bound[n] = values[n] ** 2 <= 3**n
    return report


def _cycles_at_least_three(perm) -> bool:
    return all(perm[i] != i and perm[perm[i]] != i for i in range(len(perm)))


def random_member(spec: ClassSpec, n: int, rng=None, max_tries: int = 100000):
    """A random member of the class, drawn by rejection from independent
    random permutations (not uniform over the class).

    `rng` is a numpy Generator or a seed.
    """
    if n < 3:
        raise ValueError(f"random_member requires n >= 3, got {n}")
    rng = np.random.default_rng(rng)
    kind = spec.kind
    identity = np.arange(n)
    for _ in range(max_tries):
        if kind.symmetric:
            perm = rng.permutation(n).tolist()
            if not _cycles_at_least_three(perm):
                continue
            leaf = tuple(perm)
            if not kind.weighted:
                return BinaryMatrix(n, tuple((1 << i) | (1 << perm[i]) | (1 << perm.index(i)) for i in range(n)))
            return _to_matrix(EnumerationTask(spec, n), leaf)
        first = rng.permutation(n)
        middle = identity if kind.diagonal else rng.permutation(n)
        last = rng.permutation(n)
        if np.any(first == middle) or np.any(first == last) or np.any(middle == last):
            continue
        if not kind.weighted:
            return BinaryMatrix.from_columns_sets(n, zip(first.tolist(), middle.tolist(), last.tolist()))
        leaf = tuple(zip(first.tolist(), middle.tolist(), last.tolist()))
        return _to_matrix(EnumerationTask(spec, n), leaf)
    raise RuntimeError(f"No member of {spec} found after {max_tries} draws")
