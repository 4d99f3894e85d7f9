"""Extremal permanent values of Λ_n³ and of the weighted classes Λ̂_n(α,β,γ).

The weighted maximum is always obtained by a search over the partitions
of n. The closed forms are reported next to it, together with the
conditions under which they are known to hold, so a condition that is
reported true can be compared against the searched maximum.

All comparisons involving cube roots or the ratio θ = (2^{1/3} - 1)^{1/4}
are decided exactly on rationals.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple
from warnings import warn

from sympy import integer_nthroot

from .sequences import a_general
from .spectrum import Partition, spectrum_multiplicity, spectrum_symmetric
from .utils import as_exact, to_fraction

THETA = (2 ** (1 / 3) - 1) ** 0.25


class UndefinedCaseError(ValueError):
    def __init__(self, message):
        self.message = message


def merriell_max(n: int):
    """Maximal permanent on Λ_n³: a(4)^h·a(3)^{(n-4h)/3} with h = n mod 3.

    This is 6^{(n-h)/3}·(3/2)^h without rounding. The value is a maximum
    for n >= 4h, i.e. every n >= 3 except n = 5, where a warning is issued.
    """
    if n < 3:
        raise ValueError(f"merriell_max is defined for n >= 3, got {n}")
    h = n % 3
    value = as_exact(Fraction(3, 2) ** h * 6 ** ((n - h) // 3))
    if n < 4 * h:
        warn(f"Closed form {value} for n={n} is outside its validity range (n >= {4 * h})")
    return value


def merriell_check(n: int) -> dict:
    """Closed-form maximum against the partition-search maximum of Λ̂_n³"""
    closed = merriell_max(n)
    searched = spectrum_symmetric(n).max
    return {"n": n, "closed_form": closed, "symmetric_max": searched, "agrees": closed == searched}


def bolshakov_second(n: int) -> int:
    """Second largest permanent on Λ_n³ for n divisible by 3

    Raises:
        UndefinedCaseError: if n is not a multiple of 3 or n < 6.
    """
    if n % 3 or n < 6:
        raise UndefinedCaseError(f"undefined case: second maximum is known for n = 0 mod 3, n >= 6, got {n}")
    if n == 6:
        return 20
    if n == 9:
        return 120
    return as_exact(Fraction(9, 16) * 6 ** (n // 3))


def voorhoeve_bound(n: int) -> Fraction:
    """Lower bound 6·(4/3)^{n-3} for the minimal permanent on Λ_n³"""
    if n < 3:
        raise ValueError(f"voorhoeve_bound is defined for n >= 3, got {n}")
    return as_exact(6 * Fraction(4, 3) ** (n - 3))


def _exact_cube_root(c: Fraction) -> Optional[Fraction]:
    sign = -1 if c < 0 else 1
    num, num_exact = integer_nthroot(abs(c.numerator), 3)
    den, den_exact = integer_nthroot(c.denominator, 3)
    if num_exact and den_exact:
        return sign * Fraction(int(num), int(den))
    return None


def quadratic_at_cube_root_nonnegative(c, beta, offset) -> bool:
    """Decide x² - βx - offset >= 0 at x = c^{1/3} (real cube root) exactly.

    When c is not a rational cube, x is irrational and the quadratic does
    not vanish there, so bisecting a rational bracket of x terminates once
    the bracket avoids the vertex β/2 and both ends share a sign.
    """
    c, beta, offset = (to_fraction(v) for v in (c, beta, offset))

    def g(x):
        return x * x - beta * x - offset

    root = _exact_cube_root(c)
    if root is not None:
        return g(root) >= 0
    if c > 0:
        lo, hi = Fraction(0), max(Fraction(1), c)
    else:
        lo, hi = min(Fraction(-1), c), Fraction(0)
    vertex = beta / 2
    while True:
        if not (lo <= vertex <= hi):
            g_lo, g_hi = g(lo), g(hi)
            if g_lo > 0 and g_hi > 0:
                return True
            if g_lo < 0 and g_hi < 0:
                return False
        mid = (lo + hi) / 2
        if mid**3 < c:
            lo = mid
        else:
            hi = mid


def check_cube_conditions(alpha, beta, gamma) -> List[Tuple[str, bool]]:
    """Sufficient conditions for M_n(α,β,γ) = a(3)^{n/3} when 3 | n:

    0 <= α <= β+γ, 0 <= γ <= α+β, a(4)³ <= a(3)⁴ and
    αγ + β·a(3)^{1/3} <= a(3)^{2/3}.
    """
    alpha, beta, gamma = (to_fraction(w) for w in (alpha, beta, gamma))
    a3 = a_general(alpha, beta, gamma, 3)
    a4 = a_general(alpha, beta, gamma, 4)
    return [
        ("0 <= alpha <= beta + gamma", 0 <= alpha <= beta + gamma),
        ("0 <= gamma <= alpha + beta", 0 <= gamma <= alpha + beta),
        ("a(4)^3 <= a(3)^4", a4**3 <= a3**4),
        (
            "alpha*gamma + beta*a(3)^(1/3) <= a(3)^(2/3)",
            quadratic_at_cube_root_nonnegative(a3, beta, alpha * gamma),
        ),
    ]


def ratio_below_theta(alpha, gamma) -> bool:
    """α <= θγ for γ > 0 and α >= 0, as (α⁴ + γ⁴)³ <= 2γ¹².

    Equality is impossible for rational α, γ since 2^{1/3} is irrational.
    """
    alpha, gamma = to_fraction(alpha), to_fraction(gamma)
    if gamma <= 0 or alpha < 0:
        raise ValueError("ratio_below_theta requires gamma > 0 and alpha >= 0")
    return (alpha**4 + gamma**4) ** 3 <= 2 * gamma**12


@dataclass
class ExtremalReport:
    n: int
    weights: Tuple[Fraction, Fraction, Fraction]
    max_value: object
    attaining_partitions: List[Partition]
    conditions_checked: List[Tuple[str, bool]] = field(default_factory=list)
    closed_forms: Dict[str, object] = field(default_factory=dict)
    maximizer_count: Optional[int] = None

    @property
    def closed_forms_agree(self) -> bool:
        return all(value == self.max_value for value in self.closed_forms.values())

    def todict(self) -> dict:
        return {
            "n": self.n,
            "weights": list(self.weights),
            "max_value": self.max_value,
            "attaining_partitions": [list(p.parts) for p in self.attaining_partitions],
            "conditions_checked": [[name, ok] for name, ok in self.conditions_checked],
            "closed_forms": dict(self.closed_forms),
            "closed_forms_agree": self.closed_forms_agree,
            "maximizer_count": self.maximizer_count,
        }


def max_weighted_symmetric(n: int, alpha=1, beta=1, gamma=1) -> ExtremalReport:
    """Maximum of ps[Λ̂_n(α,β,γ)] by partition search, annotated with the
    closed forms whose conditions hold.

    Closed-form keys:
        "blocks-of-3": a(3)^{n/3} under `check_cube_conditions`, 3 | n.
        "blocks-of-3, beta=gamma-alpha": 2^{n/3}γⁿ when α <= θγ, 3 | n.
        "blocks-of-4, beta=gamma-alpha": (2(α⁴+γ⁴))^{n/4} when α >= θγ, 4 | n.
    """
    weights = tuple(to_fraction(w) for w in (alpha, beta, gamma))
    alpha, beta, gamma = weights
    attained = spectrum_multiplicity(n, weights)
    max_value = max(attained)
    report = ExtremalReport(n, weights, max_value, attained[max_value])

    cube_conditions = check_cube_conditions(*weights)
    report.conditions_checked.extend(cube_conditions)
    report.conditions_checked.append(("n = 0 mod 3", n % 3 == 0))
    if n % 3 == 0 and all(ok for _, ok in cube_conditions):
        report.closed_forms["blocks-of-3"] = as_exact(a_general(*weights, 3) ** (n // 3))

    linked = beta == gamma - alpha
    report.conditions_checked.append(("beta = gamma - alpha", linked))
    if linked and gamma > 0 and alpha >= 0:
        below = ratio_below_theta(alpha, gamma)
        report.conditions_checked.append(("0 <= alpha <= theta*gamma", below))
        report.conditions_checked.append(("alpha >= theta*gamma", not below))
        report.conditions_checked.append(("n = 0 mod 4", n % 4 == 0))
        if below and n % 3 == 0:
            report.closed_forms["blocks-of-3, beta=gamma-alpha"] = as_exact(2 ** (n // 3) * gamma**n)
        if not below and n % 4 == 0:
            report.closed_forms["blocks-of-4, beta=gamma-alpha"] = as_exact(
                (2 * (alpha**4 + gamma**4)) ** (n // 4)
            )
    report.maximizer_count = len(report.attaining_partitions)
    return report


def boundary_maximizer_count(n: int) -> int:
    """Maximizers of the boundary class α = θγ, β = γ - α for 12 | n:
    the partitions into 3i fours and (n - 12i)/3 threes, i = 0..n/12.
    """
    if n % 12 or n <= 0:
        raise UndefinedCaseError(f"undefined case: boundary class is considered for n = 0 mod 12, got {n}")
    return n // 12 + 1


def theta_rational(max_denominator: int = 10**6) -> Fraction:
    """Rational approximation of θ = (2^{1/3} - 1)^{1/4}"""
    return Fraction(THETA).limit_denominator(max_denominator)


def boundary_closed_forms(n: int, ratio=None) -> dict:
    """Both closed forms 2^{n/3} and (2(ratio⁴ + 1))^{n/4} for γ = 1 and α =
    ratio close to θ. They coincide exactly only at the irrational θ.
    """
    if n % 12 or n <= 0:
        raise UndefinedCaseError(f"undefined case: boundary class is considered for n = 0 mod 12, got {n}")
    ratio = theta_rational() if ratio is None else to_fraction(ratio)
    threes = Fraction(2) ** (n // 3)
    fours = (2 * (ratio**4 + 1)) ** (n // 4)
    return {
        "n": n,
        "ratio": ratio,
        "blocks_of_3": threes,
        "blocks_of_4": fours,
        "relative_difference": float(abs(fours - threes) / threes),
    }
