"""Integer and rational sequences of the Λ_n³ counting problems.

Every sequence lives in a memoized `SequenceTable` that is filled bottom-up
by its recursion. Where an independent closed form exists it is exposed
next to the recursion so both can be compared.
"""
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Union

from sympy import lucas

from .utils import to_fraction

ExactValue = Union[int, Fraction]


class FormulaMismatch(ArithmeticError):
    def __init__(self, message):
        self.message = message


@dataclass
class SequenceTable:
    """Memoized sequence filled by `step(values, k)` for increasing k.

    Reads never lock. Filling is serialized, so concurrent callers see
    identical entries.
    """

    name: str
    source: str
    step: Callable[[Dict[int, ExactValue], int], ExactValue]
    values: Dict[int, ExactValue] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __getitem__(self, n: int) -> ExactValue:
        value = self.values.get(n)
        if value is not None:
            return value
        with self._lock:
            k = max(self.values) + 1 if self.values else 0
            while k <= n:
                self.values[k] = self.step(self.values, k)
                k += 1
        return self.values[n]


def _exact_int(value: Fraction, name: str, n: int) -> int:
    if value.denominator != 1:
        raise FormulaMismatch(f"formula mismatch: {name}({n}) = {value} is not an integer")
    return value.numerator


def _check_n(n: int, minimum: int, name: str):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} expects an integer index, got {n!r}")
    if n < minimum:
        raise ValueError(f"{name}(n) is defined for n >= {minimum}, got {n}")


def _subfactorial_step(values, k):
    if k == 0:
        return 1
    return k * values[k - 1] + (-1) ** k


def _menage_step(values, k):
    # U_n = nU_{n-1} + n/(n-2) U_{n-2} - 4(-1)^n/(n-2); the minus sign
    # reproduces per(J_n - I_n - P_n)
    if k < 3:
        return (1, -1, 0)[k]
    value = k * values[k - 1] + Fraction(k * values[k - 2], k - 2) - Fraction(4 * (-1) ** k, k - 2)
    return _exact_int(value, "menage_u", k)


def _s_step(values, k):
    if k < 2:
        return (Fraction(1), Fraction(0))[k]
    return (k - 1) * (values[k - 1] + values[k - 2] / 2)


def _a_step(values, k):
    if k < 3:
        return 0
    if k == 3:
        return 6
    if k == 4:
        return 9
    return values[k - 1] + values[k - 2] - 2


_SUBFACTORIAL = SequenceTable("subfactorial", "recursion", _subfactorial_step)
_MENAGE = SequenceTable("menage_u", "recursion", _menage_step)
_S = SequenceTable("s_seq", "recursion", _s_step)
_A = SequenceTable("a_seq", "recursion", _a_step)

# weight triples whose recursion tables are kept
WEIGHTED_CACHE_SIZE = 128


def subfactorial(n: int) -> int:
    """D_n, the number of derangements of n elements"""
    _check_n(n, 0, "subfactorial")
    return _SUBFACTORIAL[n]


def menage_u(n: int) -> int:
    """Ménage numbers U_n with U_0 = 1, U_1 = -1, U_2 = 0.

    For n >= 3 this is the permanent of J_n - I_n - P_n.
    """
    _check_n(n, 0, "menage_u")
    return _MENAGE[n]


def s_seq(n: int) -> Fraction:
    _check_n(n, 0, "s_seq")
    return _S[n]


def latin_k(n: int) -> int:
    """K_n, the number of reduced 3-rowed Latin rectangles of length n"""
    _check_n(n, 3, "latin_k")
    return sum(
        math.comb(n, k) * subfactorial(n - k) * subfactorial(k) * menage_u(n - 2 * k)
        for k in range(n // 2 + 1)
    )


def latin_count(n: int) -> int:
    """|Λ_n(α,β,γ)| = n!·K_n for pairwise distinct α, β, γ"""
    return math.factorial(n) * latin_k(n)


def count_lambda_abg_diag(n: int) -> int:
    """|Λ̄_n(α,β,γ)| = K_n for pairwise distinct α, β, γ"""
    return latin_k(n)


def count_lambda3(n: int) -> int:
    """|Λ_n³| from the triple sum over k1 + k2 + k3 = n.

    Raises:
        FormulaMismatch: if the exact evaluation is not an integer.
    """
    _check_n(n, 3, "count_lambda3")
    f = math.factorial
    total = Fraction(0)
    for k3 in range(n + 1):
        for k2 in range(n - k3 + 1):
            k1 = n - k2 - k3
            numerator = (-1) ** k2 * f(n) ** 2 * f(k2 + 3 * k3) * 2**k1 * 3**k2
            denominator = f(k1) * f(k2) * f(k3) ** 2 * 6**k3
            total += Fraction(numerator, denominator)
    return _exact_int(total / 6**n, "count_lambda3", n)


def count_lambda3_diag(n: int) -> int:
    """|Λ̄_n³| = Σ_k C(n,k)·S_{n-k}·S_k·U_{n-2k}

    Raises:
        FormulaMismatch: if the exact evaluation is not an integer.
    """
    _check_n(n, 3, "count_lambda3_diag")
    total = sum(
        (math.comb(n, k) * s_seq(n - k) * s_seq(k) * menage_u(n - 2 * k) for k in range(n // 2 + 1)),
        Fraction(0),
    )
    return _exact_int(total, "count_lambda3_diag", n)


def a_seq(n: int) -> int:
    """Permanent of I_n + P + P² (a(3) = 6, a(4) = 9)"""
    _check_n(n, 3, "a_seq")
    return _A[n]


def a_seq_closed(n: int) -> int:
    """φⁿ + 2 + (-1)ⁿφ⁻ⁿ, which is the Lucas number L_n plus 2"""
    _check_n(n, 3, "a_seq_closed")
    return int(lucas(n)) + 2


@lru_cache(maxsize=WEIGHTED_CACHE_SIZE)
def _weighted_table(alpha: Fraction, beta: Fraction, gamma: Fraction) -> SequenceTable:
    def step(values, k):
        if k < 3:
            return Fraction(0)
        if k == 3:
            return alpha**3 + beta**3 + gamma**3 + 3 * alpha * beta * gamma
        if k == 4:
            return alpha**4 + beta**4 + gamma**4 + 4 * alpha * beta**2 * gamma + 2 * (alpha * gamma) ** 2
        return (
            beta * values[k - 1]
            + alpha * gamma * values[k - 2]
            + alpha ** (k - 1) * (alpha - beta - gamma)
            + gamma ** (k - 1) * (gamma - beta - alpha)
        )

    return SequenceTable(f"a_general{(alpha, beta, gamma)}", "recursion", step)


def a_general(alpha, beta, gamma, n: int) -> Fraction:
    """per(αP⁻¹ + βI_n + γP), computed by its order-two recursion with
    the α^{n-1} and γ^{n-1} correction terms.
    """
    _check_n(n, 3, "a_general")
    alpha, beta, gamma = (to_fraction(w) for w in (alpha, beta, gamma))
    if 0 in (alpha, beta, gamma):
        raise ValueError("Weights alpha, beta, gamma must all be nonzero")
    return _weighted_table(alpha, beta, gamma)[n]


def a_lemma4(alpha, gamma, n: int) -> Fraction:
    """a(α, γ-α, γ; n): 2γⁿ for odd n, 2(αⁿ + γⁿ) for even n"""
    _check_n(n, 3, "a_lemma4")
    alpha, gamma = to_fraction(alpha), to_fraction(gamma)
    if n % 2:
        return 2 * gamma**n
    return 2 * (alpha**n + gamma**n)


ASYMPTOTIC_C = 2 * math.sqrt(math.pi * math.exp(-5))


def asymptotic_estimate(which: str, n: int) -> float:
    """Leading-order estimate of |Λ_n³| ("lambda3") or |Λ̄_n³|
    ("lambda3diag"). Floating point, for sanity ratios only.
    """
    _check_n(n, 3, "asymptotic_estimate")
    if which == "lambda3":
        return math.exp(math.lgamma(3 * n + 1) - n * math.log(36) - 2)
    if which == "lambda3diag":
        return ASYMPTOTIC_C * math.sqrt(n) * math.exp(2 * n * (math.log(n) - 1))
    raise ValueError(f"Unknown estimate {which!r}, allowed values are ['lambda3', 'lambda3diag']")


# name -> (callable, smallest index)
SEQUENCES = {
    "subfactorial": (subfactorial, 0),
    "menage": (menage_u, 0),
    "s": (s_seq, 0),
    "latin-k": (latin_k, 3),
    "latin-count": (latin_count, 3),
    "lambda3": (count_lambda3, 3),
    "lambda3-diag": (count_lambda3_diag, 3),
    "a": (a_seq, 3),
    "a-closed": (a_seq_closed, 3),
}


def sequence_values(name: str, start: int, stop: int, weights=None) -> Dict[int, ExactValue]:
    """Values of a named sequence for start <= n <= stop.

    `name="a-general"` requires `weights=(alpha, beta, gamma)`.
    """
    if start > stop:
        raise ValueError(f"Empty index range {start}..{stop}")
    if name == "a-general":
        if weights is None:
            raise ValueError("Sequence a-general requires weights")
        return {n: a_general(*weights, n) for n in range(start, stop + 1)}
    try:
        func, minimum = SEQUENCES[name]
    except KeyError:
        allowed = sorted(SEQUENCES) + ["a-general"]
        raise ValueError(f"Unknown sequence {name!r}, allowed values are {allowed}")
    if start < minimum:
        raise ValueError(f"Sequence {name} starts at n={minimum}")
    return {n: func(n) for n in range(start, stop + 1)}
