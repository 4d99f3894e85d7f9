"""Circulants Σ P^o and their classes under rotation and reflection.

Rotating the offset set corresponds to multiplying by a power of P and
reflecting it to transposition up to a rotation, so the permanent is
constant on every dihedral orbit of offset sets.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, List, Set, Tuple

from sympy import divisors, totient

from .core import BinaryMatrix, circulant, permanent_ryser
from .parity import parity_det_oracle, parity_ryser
from .spectrum import Spectrum


@dataclass(frozen=True)
class CirculantOffsets:
    """Distinct offsets in Z_n, stored sorted"""

    n: int
    offsets: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Modulus must be at least 1")
        offsets = tuple(sorted({o % self.n for o in self.offsets}))
        if len(offsets) != len(self.offsets):
            raise ValueError(f"Offsets {self.offsets} are not distinct modulo {self.n}")
        object.__setattr__(self, "offsets", offsets)

    @property
    def k(self) -> int:
        return len(self.offsets)

    def normalized(self) -> "CirculantOffsets":
        """Shift so that the smallest offset is 0 (multiplication by P^{-i})"""
        first = self.offsets[0]
        return CirculantOffsets(self.n, tuple(o - first for o in self.offsets))

    def orbit(self) -> Set[Tuple[int, ...]]:
        return dihedral_orbit(self.offsets, self.n)

    def canonical(self) -> "CirculantOffsets":
        """Lexicographically least offset set of the dihedral orbit"""
        return CirculantOffsets(self.n, min(self.orbit()))

    def __str__(self):
        return f"{{{', '.join(str(o) for o in self.offsets)}}} mod {self.n}"


def dihedral_orbit(offsets: Iterable[int], n: int) -> Set[Tuple[int, ...]]:
    """All 2n images x -> x + l and x -> s - x of an offset set"""
    offsets = tuple(offsets)
    images = set()
    for shift in range(n):
        images.add(tuple(sorted((o + shift) % n for o in offsets)))
        images.add(tuple(sorted((shift - o) % n for o in offsets)))
    return images


def circulant_matrix(c: CirculantOffsets) -> BinaryMatrix:
    return circulant(c.n, c.offsets)


def canonical_classes(n: int, k: int) -> List[CirculantOffsets]:
    """One lexicographically least representative per dihedral orbit of
    k-subsets of Z_n, in lexicographic order.
    """
    if not 1 <= k <= n:
        raise ValueError(f"canonical_classes requires 1 <= k <= n, got n={n}, k={k}")
    seen = set()
    classes = []
    for subset in combinations(range(n), k):
        if subset in seen:
            continue
        # combinations run in lex order, so the first unseen member is least
        seen.update(dihedral_orbit(subset, n))
        classes.append(CirculantOffsets(n, subset))
    return classes


def reis_count(n: int, k: int) -> int:
    """Number of incongruent convex k-gons on n equally spaced points,
    with h_k = k mod 2 in the reflection term.
    """
    if not 1 <= k <= n:
        raise ValueError(f"reis_count requires 1 <= k <= n, got n={n}, k={k}")
    h = k % 2
    reflections = math.comb((n - h) // 2, k // 2)
    necklaces = Fraction(
        sum(int(totient(d)) * math.comb(n // d - 1, k // d - 1) for d in divisors(math.gcd(k, n))),
        k,
    )
    total = (reflections + necklaces) / 2
    if total.denominator != 1:
        raise ArithmeticError(f"R({n},{k}) evaluated to a non-integer {total}")
    return total.numerator


def reis_triangle_cases(n: int) -> int:
    """R(n, 3) by residue of n modulo 6"""
    r = n % 6
    if r == 0:
        return n * n // 12
    if r in (1, 5):
        return (n * n - 1) // 12
    if r in (2, 4):
        return (n * n - 4) // 12
    return (n * n + 3) // 12


def circulant_bound(n: int) -> int:
    """Upper bound ⌊(n² + 3)/12⌋ on |ps[Δ_n³]|"""
    return (n * n + 3) // 12


def class_permanents(n: int, k: int = 3) -> List[Tuple[CirculantOffsets, int]]:
    """(class representative, permanent) for every dihedral class"""
    return [(c, permanent_ryser(circulant_matrix(c.normalized()))) for c in canonical_classes(n, k)]


def circulant_spectrum(n: int, k: int = 3) -> Spectrum:
    if n < 3:
        raise ValueError(f"circulant_spectrum is defined for n >= 3, got {n}")
    return Spectrum(tuple(per for _, per in class_permanents(n, k)))


_PATTERN_BOUNDS = {"aaa": 12, "aab": 4, "abc": 2}


def weighted_class_count(n: int, pattern: str) -> int:
    """Dihedral classes of weighted circulants αP^i + βP^j + γP^k.

    `pattern` names which weights coincide: "aaa" (α = β = γ), "aab"
    (two equal) or "abc" (pairwise distinct).
    """
    if pattern not in _PATTERN_BOUNDS:
        raise ValueError(f"Unknown pattern {pattern!r}, allowed values are {list(_PATTERN_BOUNDS)}")
    if n < 3:
        raise ValueError(f"weighted_class_count is defined for n >= 3, got {n}")
    words = set()
    for positions in permutations(range(n), 3):
        word = ["."] * n
        for letter, position in zip(pattern, positions):
            word[position] = letter
        words.add("".join(word))
    seen = set()
    count = 0
    for word in sorted(words):
        if word in seen:
            continue
        count += 1
        for shift in range(n):
            rotated = word[shift:] + word[:shift]
            seen.add(rotated)
            seen.add(rotated[::-1])
    return count


def weighted_class_bound(n: int, pattern: str) -> int:
    """⌊(n² + 3)/d⌋ with d = 12, 4, 2 for "aaa", "aab", "abc" """
    try:
        return (n * n + 3) // _PATTERN_BOUNDS[pattern]
    except KeyError:
        raise ValueError(f"Unknown pattern {pattern!r}, allowed values are {list(_PATTERN_BOUNDS)}")


def circulant_parity_census(n: int) -> dict:
    """Parity of the permanent over all C(n,3) offset triples of Δ_n³,
    by the restricted Ryser parity sum and by the GF(2) determinant.
    """
    odd = even = 0
    disagreements = []
    for offsets in combinations(range(n), 3):
        matrix = circulant(n, offsets)
        bit = parity_ryser(matrix).bit
        if bit != parity_det_oracle(matrix):
            disagreements.append(list(offsets))
        if bit:
            odd += 1
        else:
            even += 1
    return {"n": n, "odd": odd, "even": even, "disagreements": disagreements}
