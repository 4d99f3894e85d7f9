"""Ranked upper magnitudes of the permanent on Λ̂_n³ and Λ_n³.

Write n = 3·k + j with j = n mod 3. A candidate value is

    6^{(n-j-3i)/3} · y,   i = 1 .. 4t+j,

where y is the product attached to a partition of m = 3i+j into parts
>= 4 (the empty partition of m = 3 counts as the single product 6). In
the symmetric class y is a product of a(part); in the general class each
part contributes a permanent of a completely indecomposable matrix of
that size. Candidates with y >= 9^{3t+j}·6^{i-4t-j} are kept.

Dividing by 6^{(n-j)/3}, everything is expressed as a coefficient
c = y/6^i, independent of n, with the cut-off c >= (3/2)^j·(9/16)^t.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from operator import mul
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .sequences import a_seq
from .spectrum import Partition, iter_partitions, spectrum_symmetric
from .tables import RankOutOfRange, default_tables
from .utils import as_exact, warn_once

__all__ = [
    "HypothesisViolated",
    "MissingSpectrumError",
    "RankOutOfRange",
    "RankedMagnitudes",
    "threshold",
    "upper_symmetric",
    "upper_general",
    "mci_bounds",
    "table_fixture",
    "table_mismatches",
    "attained_in_symmetric",
]


class HypothesisViolated(ValueError):
    def __init__(self, message):
        self.message = message


class MissingSpectrumError(KeyError):
    def __init__(self, message, sizes=()):
        self.message = message
        self.sizes = sorted(sizes)

    def __str__(self):
        return self.message


@dataclass
class RankedMagnitudes:
    """Descending upper magnitudes, coefficient c meaning c·6^{(n-j)/3}"""

    kind: str
    n: int
    t: int
    j: int
    coefficients: List[Fraction]
    provenance: List[List[Partition]]
    certified: int
    conditional_on_mci: bool = False
    blocking_bound: Optional[Fraction] = None
    missing_sizes: List[int] = field(default_factory=list)

    @property
    def scale(self) -> int:
        return 6 ** ((self.n - self.j) // 3)

    @property
    def values(self) -> list:
        return [as_exact(c * self.scale) for c in self.coefficients]

    def __len__(self):
        return len(self.coefficients)

    def todict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "t": self.t,
            "j": self.j,
            "values": self.values,
            "coefficients": [as_exact(c) for c in self.coefficients],
            "provenance": [[str(p) for p in parts] for parts in self.provenance],
            "certified": self.certified,
            "conditional_on_mci": self.conditional_on_mci,
            "blocking_bound": None if self.blocking_bound is None else as_exact(self.blocking_bound),
            "missing_sizes": self.missing_sizes,
        }


def threshold(j: int, t: int) -> Fraction:
    """Coefficient cut-off (3/2)^j·(9/16)^t"""
    return Fraction(3, 2) ** j * Fraction(9, 16) ** t


def _check_hypothesis(n: int, t: int) -> int:
    if t < 0:
        raise HypothesisViolated(f"hypothesis violated: depth t must be non-negative, got {t}")
    j = n % 3
    if n < 4 * (3 * t + j):
        raise HypothesisViolated(f"hypothesis violated: n={n} < 4(3t+j) = {4 * (3 * t + j)} for t={t}, j={j}")
    return j


def _blocks(j: int, t: int) -> Iterable[Tuple[int, Partition]]:
    """(i, ρ) for every partition ρ of 3i+j into parts >= 4, i = 1..4t+j"""
    for i in range(1, 4 * t + j + 1):
        m = 3 * i + j
        if m == 3:
            yield i, Partition((), 4)
            continue
        for rho in iter_partitions(m, 4):
            yield i, rho


def _full_partition(n: int, m: int, rho: Partition) -> Partition:
    threes = (n - m) // 3
    if not rho.parts:
        threes = n // 3
    return Partition(rho.parts + (3,) * threes, 3)


def _collect(n, found: Dict[Fraction, List[Partition]], coefficient, m, rho):
    provenance = found.setdefault(coefficient, [])
    full = _full_partition(n, m, rho)
    if full not in provenance:
        provenance.append(full)


def upper_symmetric(n: int, t: int) -> RankedMagnitudes:
    """Top magnitudes of ps[Λ̂_n³], certified for n >= 4(3t+j)

    Raises:
        HypothesisViolated: if n < 4(3t+j).
    """
    j = _check_hypothesis(n, t)
    cut = threshold(j, t)
    found: Dict[Fraction, List[Partition]] = {}
    for i, rho in _blocks(j, t):
        y = 6 if not rho.parts else reduce(mul, (a_seq(p) for p in rho), 1)
        coefficient = Fraction(y, 6**i)
        if coefficient >= cut:
            _collect(n, found, coefficient, 3 * i + j, rho)
    ordered = sorted(found, reverse=True)
    return RankedMagnitudes(
        "symmetric", n, t, j, ordered, [found[c] for c in ordered], certified=len(ordered)
    )


def mci_bounds(known: Mapping[int, int], s_max: int, strict: bool = True) -> Dict[int, int]:
    """Upper bounds of μ₁(s), 3 <= s <= s_max, from submultiplicativity.

    Known sizes keep their value; an unknown s gets the minimum of
    bound(s1)·bound(s2) over s1 + s2 = s with s1, s2 >= 3. With
    strict=False a size without a bounded split is left out.

    Raises:
        MissingSpectrumError: in strict mode, if an unknown size cannot be split.
    """
    bounds: Dict[int, int] = {}
    for s in range(3, s_max + 1):
        if s in known:
            bounds[s] = known[s]
            continue
        splits = [
            bounds[s1] * bounds[s - s1]
            for s1 in range(3, s // 2 + 1)
            if s1 in bounds and s - s1 in bounds
        ]
        if not splits:
            if strict:
                raise MissingSpectrumError(f"No spectrum and no split for size {s}", [s])
            continue
        bounds[s] = min(splits)
    return bounds


def _products_above(spectra: Sequence[Sequence[int]], floor: Fraction) -> List[int]:
    """All products x_1·...·x_k (x_i from spectra[i]) that are >= floor"""
    spectra = [sorted(values, reverse=True) for values in spectra]
    tail_max = [1] * (len(spectra) + 1)
    for idx in range(len(spectra) - 1, -1, -1):
        tail_max[idx] = tail_max[idx + 1] * spectra[idx][0]
    result = set()

    def walk(idx, partial):
        if idx == len(spectra):
            result.add(partial)
            return
        for x in spectra[idx]:
            if partial * x * tail_max[idx + 1] < floor:
                break
            walk(idx + 1, partial * x)

    walk(0, 1)
    return sorted(result, reverse=True)


def upper_general(
    n: int, t: int, small_spectra: Optional[Mapping[int, Iterable[int]]] = None, strict: bool = True
) -> RankedMagnitudes:
    """Top magnitudes of ps[Λ_n³] from indecomposable spectra of small sizes.

    The ranking relies on the submultiplicativity of the indecomposable
    maximum μ₁ (conditional_on_mci is always set).

    `small_spectra` maps size -> permanents of completely indecomposable
    members (default: the bundled table, sizes 3..8). With strict=True
    a size that is not given but could reach the cut-off raises. With
    strict=False those partitions are bounded by `mci_bounds` and only
    the values at or above the largest such bound are certified; a size
    with neither a spectrum nor a bounded split certifies nothing. The
    sizes involved are listed in `missing_sizes`. μ₁(3) = 6 is implied.

    Raises:
        HypothesisViolated: if n < 4(3t+j).
        MissingSpectrumError: in strict mode, listing the required sizes.
    """
    j = _check_hypothesis(n, t)
    if small_spectra is None:
        small_spectra = default_tables().indecomposable_spectra
    spectra = {int(s): sorted({int(v) for v in values}) for s, values in small_spectra.items() if values}
    known_max = {s: values[-1] for s, values in spectra.items()}
    # μ₁(3) = per J_3
    known_max.setdefault(3, 6)
    cut = threshold(j, t)
    blocks = list(_blocks(j, t))
    needed = {s for _, rho in blocks for s in rho if s not in spectra}
    bounds = mci_bounds(known_max, max(needed), strict=False) if needed else {}

    found: Dict[Fraction, List[Partition]] = {}
    missing = set()
    blocking = None
    unbounded = False
    for i, rho in blocks:
        scale = 6**i
        if not rho.parts:
            if Fraction(6, scale) >= cut:
                _collect(n, found, Fraction(6, scale), 3, rho)
            continue
        unknown = [s for s in rho if s not in spectra]
        if unknown:
            if any(s not in bounds for s in rho):
                missing.update(unknown)
                unbounded = True
                continue
            bound = Fraction(reduce(mul, (bounds[s] for s in rho), 1), scale)
            if bound >= cut:
                missing.update(unknown)
                blocking = bound if blocking is None else max(blocking, bound)
            continue
        for y in _products_above([spectra[s] for s in rho], cut * scale):
            _collect(n, found, Fraction(y, scale), 3 * i + j, rho)

    if missing and strict:
        raise MissingSpectrumError(
            f"Indecomposable spectra of sizes {sorted(missing)} are required for n={n}, t={t}", missing
        )
    ordered = sorted(found, reverse=True)
    if unbounded:
        certified = 0
    elif blocking is None:
        certified = len(ordered)
    else:
        certified = sum(1 for c in ordered if c >= blocking)
    return RankedMagnitudes(
        "general",
        n,
        t,
        j,
        ordered,
        [found[c] for c in ordered],
        certified=certified,
        conditional_on_mci=True,
        blocking_bound=blocking,
        missing_sizes=sorted(missing),
    )


def table_fixture(kind: str, j: int, rank: int) -> Fraction:
    """Published coefficient of 6^{(n-j)/3} at a 1-based rank

    Raises:
        RankOutOfRange: if the rank is not in the published table.
    """
    return default_tables().coefficient(kind, j, rank)


def table_mismatches(kind: str, j: int, computed: Sequence[Fraction]) -> List[dict]:
    """Ranks where recomputed coefficients differ from the published ones"""
    published = default_tables().coefficients(kind, j)
    mismatches = []
    for rank, (expected, actual) in enumerate(zip(published, computed), start=1):
        if Fraction(expected) != Fraction(actual):
            mismatches.append({"rank": rank, "published": expected, "computed": Fraction(actual)})
    if mismatches:
        ranks = [m["rank"] for m in mismatches]
        warn_once(f"Published {kind} table j={j} differs from the recomputation at ranks {ranks}")
    return mismatches


def attained_in_symmetric(ranked: RankedMagnitudes) -> List[int]:
    """1-based ranks whose value is a permanent of some member of Λ̂_n³"""
    spectrum = spectrum_symmetric(ranked.n)
    return [rank for rank, value in enumerate(ranked.values, start=1) if value in spectrum]
