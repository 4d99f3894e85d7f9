"""Permanent spectra of the symmetric-position classes Λ̂_n³ and
Λ̂_n(α,β,γ) from integer partitions.

Every member of Λ̂_n(α,β,γ) is αS⁻¹ + βI + γS for a permutation S whose
cycles all have length >= 3, and its permanent is the product of
a(α,β,γ; l) over the cycle lengths l. The spectrum of the class is
therefore the set of partition products.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from operator import mul
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .core import WeightedMatrix
from .sequences import a_general, a_seq
from .utils import as_exact, to_fraction


class CycleTooShortError(ValueError):
    def __init__(self, message):
        self.message = message


class ZeroWeightError(ValueError):
    def __init__(self, message):
        self.message = message


@dataclass(frozen=True)
class Partition:
    """Parts in non-increasing order, all at least `min_part`"""

    parts: Tuple[int, ...]
    min_part: int = 1

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if any(p < self.min_part for p in parts):
            raise ValueError(f"Partition {parts} has a part below {self.min_part}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "+".join(str(p) for p in self.parts) if self.parts else "0"


@dataclass(frozen=True)
class Spectrum:
    """Strictly increasing tuple of exact values"""

    values: Tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted({as_exact(v) for v in self.values})))

    def __contains__(self, value):
        return value in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    @property
    def min(self):
        return self.values[0]

    @property
    def max(self):
        return self.values[-1]

    def as_set(self) -> set:
        return set(self.values)


def _partition_parts(n: int, min_part: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        rest = n - first
        if rest and rest < min_part:
            continue
        for tail in _partition_parts(rest, min_part, first):
            yield (first,) + tail


def iter_partitions(n: int, min_part: int) -> Iterator[Partition]:
    if n < 0 or min_part < 1:
        raise ValueError("partitions require n >= 0 and min_part >= 1")
    for parts in _partition_parts(n, min_part, n):
        yield Partition(parts, min_part)


def partitions(n: int, min_part: int) -> List[Partition]:
    """All partitions of n with parts >= min_part, decreasing-lexicographic.

    >>> [str(p) for p in partitions(11, 3)]
    ['11', '8+3', '7+4', '6+5', '5+3+3', '4+4+3']
    """
    return list(iter_partitions(n, min_part))


def _weights(alpha, beta, gamma) -> Tuple[Fraction, Fraction, Fraction]:
    weights = tuple(to_fraction(w) for w in (alpha, beta, gamma))
    if any(w == 0 for w in weights):
        raise ZeroWeightError(f"Weights must be nonzero, got {tuple(str(w) for w in weights)}")
    return weights


def partition_product(partition: Iterable[int], weights: Optional[Sequence] = None):
    """H(r) = Π a(n_i), with the weighted a(α,β,γ; n_i) when weights are given"""
    if weights is None:
        values = (a_seq(p) for p in partition)
    else:
        values = (a_general(*weights, p) for p in partition)
    return as_exact(reduce(mul, values, Fraction(1)))


def spectrum_multiplicity(n: int, weights: Optional[Sequence] = None) -> Dict[object, List[Partition]]:
    """Spectrum value -> partitions of n (parts >= 3) attaining it, ascending by value"""
    if n < 3:
        raise ValueError(f"Spectrum of Λ̂_n is defined for n >= 3, got {n}")
    if weights is not None:
        weights = _weights(*weights)
    attained = {}
    for partition in iter_partitions(n, 3):
        attained.setdefault(partition_product(partition, weights), []).append(partition)
    return {value: attained[value] for value in sorted(attained)}


def spectrum_symmetric(n: int) -> Spectrum:
    """ps[Λ̂_n³] = {H(r) : r partition of n with parts >= 3}"""
    return Spectrum(tuple(spectrum_multiplicity(n)))


def spectrum_weighted(n: int, alpha, beta, gamma) -> Spectrum:
    """ps[Λ̂_n(α,β,γ)] as partition products of a(α,β,γ; n_i)

    Raises:
        ZeroWeightError: if any weight is 0.
    """
    return Spectrum(tuple(spectrum_multiplicity(n, (alpha, beta, gamma))))


def cycle_permutation(cycle_lengths: Iterable[int]) -> List[int]:
    """Permutation s (as a list i -> s(i)) with consecutive cycles of the
    given lengths.

    Raises:
        CycleTooShortError: if a cycle is shorter than 3.
    """
    perm = []
    offset = 0
    for length in cycle_lengths:
        if length < 3:
            raise CycleTooShortError(f"cycle too short: length {length} < 3")
        perm.extend(offset + (i + 1) % length for i in range(length))
        offset += length
    return perm


def weighted_from_permutation(perm: Sequence[int], alpha, beta, gamma) -> WeightedMatrix:
    """αS⁻¹ + βI + γS for the incidence matrix S of `perm`"""
    alpha, beta, gamma = (to_fraction(w) for w in (alpha, beta, gamma))
    n = len(perm)
    inverse = [0] * n
    for i, image in enumerate(perm):
        inverse[image] = i
    rows = []
    for i in range(n):
        row = [Fraction(0)] * n
        row[i] += beta
        row[perm[i]] += gamma
        row[inverse[i]] += alpha
        rows.append(tuple(row))
    return WeightedMatrix(n, tuple(rows))


def build_cycle_type_matrix(cycle_lengths: Iterable[int], alpha, beta, gamma) -> WeightedMatrix:
    """Member of Λ̂_n(α,β,γ) whose permutation has the given cycle type"""
    perm = cycle_permutation(cycle_lengths)
    if not perm:
        raise ValueError("At least one cycle is required")
    return weighted_from_permutation(perm, *_weights(alpha, beta, gamma))


@dataclass
class ClaimReport:
    n: int
    weights: Tuple
    computed: Spectrum
    claimed: Tuple
    omitted: Optional[object] = None

    @property
    def missing(self) -> List:
        """Claimed values that are not attained"""
        return sorted(set(self.claimed) - self.computed.as_set())

    @property
    def extra(self) -> List:
        return sorted(self.computed.as_set() - set(self.claimed))

    @property
    def agrees(self) -> bool:
        return not self.missing and not self.extra

    @property
    def omitted_absent(self) -> Optional[bool]:
        if self.omitted is None:
            return None
        return self.omitted not in self.computed

    def todict(self) -> dict:
        return {
            "n": self.n,
            "weights": list(self.weights),
            "computed": list(self.computed),
            "claimed": sorted(self.claimed),
            "omitted": self.omitted,
            "omitted_absent": self.omitted_absent,
            "missing": self.missing,
            "extra": self.extra,
            "agrees": self.agrees,
        }


def negative_unit_report(n: int) -> ClaimReport:
    """Compare ps[Λ̂_n(-1,1,1)] with the closed form in powers of -2.

    For 3 ∤ n the claim is {(-2)^k : k <= (n-3)/3}. For 3 | n the claim is
    {(-2)^k : k <= (n-6)/3} plus (-2)^{n/3}, omitting (-2)^{(n-3)/3}.
    """
    computed = spectrum_weighted(n, -1, 1, 1)
    if n % 3:
        claimed = tuple((-2) ** k for k in range((n - 3) // 3 + 1))
        omitted = None
    else:
        claimed = tuple((-2) ** k for k in range((n - 6) // 3 + 1)) + ((-2) ** (n // 3),)
        omitted = (-2) ** ((n - 3) // 3)
    return ClaimReport(n, (-1, 1, 1), computed, claimed, omitted)


def alternating_report(n: int) -> ClaimReport:
    """Compare ps[Λ̂_n(-1,2,1)] with {4^k : 1 <= k <= n/4} for even n and
    {2·4^k : k <= (n-3)/4} for odd n.
    """
    computed = spectrum_weighted(n, -1, 2, 1)
    if n % 2:
        claimed = tuple(2 * 4**k for k in range((n - 3) // 4 + 1))
    else:
        claimed = tuple(4**k for k in range(1, n // 4 + 1))
    return ClaimReport(n, (-1, 2, 1), computed, claimed)
