"""Reproduction suite for the published permanent values
Usage:
python -m permspec.reproduce [--full]

Each check recomputes a group of published numbers and compares them
with the bundled tables. Exhaustive runs at n = 8 are only part of the
--full suite.
"""
import sys
from fractions import Fraction

import numpy as np

from .utils import cprint, load_settings

# Ranks where the published coefficient differs from the recomputed one.
KNOWN_TABLE_DISCREPANCIES = {("symmetric", 1): {9, 10}, ("general", 1): {6}}

# (n, t) deep enough for all published ranks of a residue class
SYMMETRIC_DEPTHS = {0: (36, 3), 1: (28, 2), 2: (32, 2)}
GENERAL_DEPTHS = {0: (24, 2), 1: (28, 2), 2: (32, 2)}


def random_weight(rng) -> Fraction:
    numerator = 0
    while numerator == 0:
        numerator = int(rng.integers(-4, 5))
    return Fraction(numerator, int(rng.integers(1, 4)))


class BaseCheck(object):
    """Base class for all reproduction checks

    Each child class implements `make_check`, which sets `result` and may
    fill `info`. A docstring line starting with `Error handling` begins
    the help shown when the check fails.
    """

    label = None

    def __init__(self, full=False, seed=None):
        self.full = full
        self.seed = load_settings(seed=seed)["seed"]
        self.result = None
        self.error_msg = ""
        self.error_handling = ""
        self.info = {}

    @property
    def display_name(self):
        return self.label or self.__class__.__name__

    def display_docstring(self):
        """Indented text after the `Error handling` line of the docstring"""
        doc = self.__class__.__doc__ or ""
        lines = []
        indent = None
        for line in doc.splitlines():
            if line.lstrip().startswith("Error handling"):
                if indent is not None:
                    raise ValueError(f"There are multiple Error handlings in the docstring of {self.__class__.__name__}.")
                indent = len(line) - len(line.lstrip())
            elif indent is not None and line.strip():
                extra = max(0, len(line) - len(line.lstrip()) - indent)
                lines.append(" " * extra + line.strip())
        return "\n".join(lines)

    def make_check(self):
        raise NotImplementedError

    def run_check(self):
        """Run the check; any exception counts as a failure"""
        try:
            self.make_check()
        except Exception as e:
            self.result = False
            self.error_msg = f"{e.__class__.__name__}: {e}"
        if self.result is None:
            raise ValueError(f"Check result is not updated for {self.__class__.__name__} !")
        if self.result is False:
            self.error_handling = self.display_docstring()
        return self

    def todict(self):
        return {"check": self.display_name, "passed": bool(self.result), "error": self.error_msg, "info": self.info}


class SpectraCheck(BaseCheck):
    """Brute-force spectra of Λ_n³ against the published sets

    Error handling:
    - The enumeration limits may be too low, see `diag_limit` and `heavy_n`
      in the [permspec] section or $PERMSPEC_DIAG_LIMIT
    """

    label = "lambda3 spectra"

    def make_check(self):
        from .core import ClassSpec
        from .enumerator import brute_spectrum
        from .tables import default_tables

        published = default_tables().spectra
        sizes = range(3, 9) if self.full else range(3, 8)
        wrong = []
        for n in sizes:
            computed = brute_spectrum(ClassSpec.parse("lambda3"), n, workers=1)
            if list(computed) != published[n]:
                wrong.append(n)
            self.info[f"|ps(lambda3, {n})|"] = len(computed)
        self.result = not wrong
        if wrong:
            self.error_msg = f"Spectra differ for n = {wrong}"


class CirculantCheck(BaseCheck):
    """Permanents of I + P^a + P^b and circulant spectra for n = 5, 6

    Error handling:
    - Compare `permspec circulant classes 6` with the published values
    """

    label = "circulants"

    def make_check(self):
        from .circulant import circulant_spectrum
        from .core import circulant, permanent_ryser
        from .tables import default_tables

        expected = {(5, (0, 1, 2)): 13, (5, (0, 1, 3)): 13, (6, (0, 1, 2)): 20, (6, (0, 1, 3)): 17, (6, (0, 2, 4)): 36}
        wrong = [key for key, value in expected.items() if permanent_ryser(circulant(*key)) != value]
        for n, values in default_tables().circulant_spectra.items():
            if list(circulant_spectrum(n)) != values:
                wrong.append(("spectrum", n))
        self.result = not wrong
        if wrong:
            self.error_msg = f"Mismatching circulants: {wrong}"


class WeightedExampleCheck(BaseCheck):
    """Spectrum of Λ̂_n(α,β,γ) for the published weight examples"""

    label = "weighted spectrum"

    def make_check(self):
        from .spectrum import spectrum_weighted
        from .tables import default_tables

        wrong = []
        for key, values in default_tables().weighted_spectra.items():
            n, *weights = key.split()
            if list(spectrum_weighted(int(n), *weights)) != values:
                wrong.append(key)
        self.result = not wrong
        if wrong:
            self.error_msg = f"Weighted spectra differ for {wrong}"


class ParityCensusCheck(BaseCheck):
    """Odd/even census of the circulants of order 7, Ryser parity against
    the GF(2) determinant

    Error handling:
    - Run `permspec parity census 7` and inspect `disagreements`
    """

    label = "parity census"

    def make_check(self):
        from .circulant import circulant_parity_census
        from .tables import default_tables

        wrong = []
        for n, expected in default_tables().parity_census.items():
            report = circulant_parity_census(n)
            self.info[f"census n={n}"] = f"{report['odd']} odd, {report['even']} even"
            if report["disagreements"] or (report["odd"], report["even"]) != (expected["odd"], expected["even"]):
                wrong.append(n)
        self.result = not wrong
        if wrong:
            self.error_msg = f"Parity census differs for n = {wrong}"


class SymmetricOracleCheck(BaseCheck):
    """Partition spectrum of Λ̂_n³ against enumeration of the class"""

    label = "symmetric spectra vs enumeration"

    def make_check(self):
        from .core import ClassSpec
        from .enumerator import brute_spectrum
        from .spectrum import spectrum_symmetric

        top = 8 if self.full else 7
        wrong = [
            n
            for n in range(3, top + 1)
            if spectrum_symmetric(n) != brute_spectrum(ClassSpec.parse("lambda3-sym"), n, workers=1)
        ]
        self.result = not wrong
        if wrong:
            self.error_msg = f"Symmetric spectra differ for n = {wrong}"


class WeightedOracleCheck(BaseCheck):
    """Partition spectrum of Λ̂_n(α,β,γ) and the recursion for
    per(αP⁻¹ + βI + γP) against brute force, for random weights
    """

    label = "weighted spectra vs enumeration"

    def make_check(self):
        from .core import ClassSpec, permanent_ryser, power_matrix, weighted_combination
        from .enumerator import brute_spectrum
        from .sequences import a_general
        from .spectrum import spectrum_weighted

        rng = np.random.default_rng(self.seed)
        top = 7 if self.full else 6
        wrong = []
        for _ in range(10):
            weights = tuple(random_weight(rng) for _ in range(3))
            spec = ClassSpec.parse("abg-sym", weights)
            for n in range(3, top + 1):
                if spectrum_weighted(n, *weights) != brute_spectrum(spec, n, workers=1):
                    wrong.append((weights, n, "spectrum"))
                matrix = weighted_combination(
                    zip(weights, (power_matrix(n, -1), power_matrix(n, 0), power_matrix(n, 1)))
                )
                if a_general(*weights, n) != permanent_ryser(matrix):
                    wrong.append((weights, n, "recursion"))
        self.info["weighted triples"] = 10
        self.result = not wrong
        if wrong:
            self.error_msg = f"Mismatches: {wrong[:5]}"


class UpperTablesCheck(BaseCheck):
    """Ranked upper magnitudes against the published coefficient tables.

    Ranks listed in KNOWN_TABLE_DISCREPANCIES are reported in `info` and
    do not fail the check.

    Error handling:
    - A custom table file is in use if $PERMSPEC_TABLES is set
    """

    label = "upper magnitudes"

    def make_check(self):
        from .upper import table_mismatches, upper_general, upper_symmetric

        unexpected = []
        for kind, depths, build in (
            ("symmetric", SYMMETRIC_DEPTHS, lambda n, t: upper_symmetric(n, t)),
            ("general", GENERAL_DEPTHS, lambda n, t: upper_general(n, t, strict=False)),
        ):
            for j, (n, t) in depths.items():
                ranked = build(n, t)
                mismatches = table_mismatches(kind, j, ranked.coefficients[: ranked.certified])
                ranks = {m["rank"] for m in mismatches}
                known = KNOWN_TABLE_DISCREPANCIES.get((kind, j), set())
                if ranks - known:
                    unexpected.append((kind, j, sorted(ranks - known)))
                if ranks & known:
                    self.info[f"{kind} j={j} published discrepancies"] = sorted(ranks & known)
        singleton = upper_general(8, 0).coefficients
        if singleton != [Fraction(9, 4)]:
            unexpected.append(("general", 2, "depth 0"))
        self.result = not unexpected
        if unexpected:
            self.error_msg = f"Unexpected table mismatches: {unexpected}"


class ExtremalCheck(BaseCheck):
    """Maximum, second maximum and lower bound against the spectra"""

    label = "extremal values"

    def make_check(self):
        from .extremal import bolshakov_second, merriell_max, voorhoeve_bound
        from .tables import default_tables

        spectra = default_tables().spectra
        wrong = [n for n in (6, 7, 8) if merriell_max(n) != spectra[n][-1]]
        if bolshakov_second(6) != spectra[6][-2]:
            wrong.append("second maximum n=6")
        wrong.extend(f"lower bound n={n}" for n in range(3, 8) if spectra[n][0] < voorhoeve_bound(n))
        self.result = not wrong
        if wrong:
            self.error_msg = f"Extremal mismatches: {wrong}"


class MciCheck(BaseCheck):
    """Submultiplicativity of the indecomposable maxima up to n = 8"""

    label = "indecomposable maxima"

    def make_check(self):
        from .enumerator import indecomposable_spectrum, mci_check
        from .tables import default_tables

        table = default_tables().indecomposable_spectra
        enumerated = range(3, 9) if self.full else range(3, 7)
        mu = {}
        wrong = []
        for n in enumerated:
            spectrum, mu[n] = indecomposable_spectrum(n, workers=1)
            if list(spectrum) != table[n]:
                wrong.append(n)
        for n in range(3, 9):
            mu.setdefault(n, table[n][-1])
        report = mci_check(8, mu=mu)
        self.info["mu"] = ", ".join(f"{n}: {v}" for n, v in sorted(mu.items()))
        if report.violations or report.bound_violations:
            wrong.append(("violations", report.violations, report.bound_violations))
        self.result = not wrong
        if wrong:
            self.error_msg = f"Indecomposable spectra or inequality failed: {wrong}"


class CountingCheck(BaseCheck):
    """Counting formulas against enumeration and the ménage permanents"""

    label = "class counts"

    def make_check(self):
        from .core import BinaryMatrix, ClassSpec, permanent_ryser
        from .enumerator import brute_count
        from .sequences import count_lambda3, count_lambda3_diag, latin_k, menage_u

        wrong = []
        for n in (3, 4, 5):
            if brute_count(ClassSpec.parse("lambda3"), n, workers=1) != count_lambda3(n):
                wrong.append(("lambda3", n))
            if brute_count(ClassSpec.parse("lambda3-diag"), n, workers=1) != count_lambda3_diag(n):
                wrong.append(("lambda3-diag", n))
        if brute_count(ClassSpec.parse("abg-diag", (1, 2, 3)), 4, workers=1) != latin_k(4):
            wrong.append(("abg-diag", 4))
        for n in range(3, 10):
            full = (1 << n) - 1
            board = BinaryMatrix(n, tuple(full & ~(1 << i) & ~(1 << ((i + 1) % n)) for i in range(n)))
            if permanent_ryser(board) != menage_u(n):
                wrong.append(("menage", n))
        self.result = not wrong
        if wrong:
            self.error_msg = f"Count mismatches: {wrong}"


class PropertyCheck(BaseCheck):
    """Randomized and exhaustive identities between independent routines"""

    label = "property suites"

    def make_check(self):
        from .circulant import canonical_classes, circulant_bound, circulant_spectrum, reis_count
        from .core import WeightedMatrix, permanent_expansion, permanent_ryser
        from .sequences import a_general, a_lemma4, a_seq, a_seq_closed

        rng = np.random.default_rng(self.seed)
        wrong = []
        samples = 500 if self.full else 50
        for _ in range(samples):
            n = int(rng.integers(1, 9 if self.full else 7))
            entries = [[Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3))) for _ in range(n)] for _ in range(n)]
            matrix = WeightedMatrix.from_lists(entries)
            if permanent_ryser(matrix) != permanent_expansion(matrix):
                wrong.append(("ryser", entries))
        wrong.extend(("lucas", n) for n in range(3, 61) if a_seq(n) != a_seq_closed(n))
        for _ in range(50):
            alpha, gamma = random_weight(rng), random_weight(rng)
            if alpha == gamma:
                continue
            wrong.extend(
                ("blocks", alpha, gamma, n)
                for n in range(3, 13)
                if a_lemma4(alpha, gamma, n) != a_general(alpha, gamma - alpha, gamma, n)
            )
        wrong.extend(
            ("submultiplicative", n1, n2)
            for n1 in range(3, 31)
            for n2 in range(3, 31)
            if a_seq(n1 + n2) > a_seq(n1) * a_seq(n2)
        )
        reis_top = 18 if self.full else 12
        wrong.extend(
            ("reis", n, k)
            for n in range(3, reis_top + 1)
            for k in (3, 4)
            if k <= n and reis_count(n, k) != len(canonical_classes(n, k))
        )
        wrong.extend(("circulant bound", n) for n in range(3, 15) if len(circulant_spectrum(n)) > circulant_bound(n))
        self.info["random matrices"] = samples
        self.result = not wrong
        if wrong:
            self.error_msg = f"{len(wrong)} identities failed, first: {wrong[0]}"


def all_checks(full=False, seed=None):
    return [
        cls(full=full, seed=seed)
        for cls in (
            CirculantCheck,
            WeightedExampleCheck,
            ParityCensusCheck,
            SpectraCheck,
            SymmetricOracleCheck,
            WeightedOracleCheck,
            UpperTablesCheck,
            ExtremalCheck,
            MciCheck,
            CountingCheck,
            PropertyCheck,
        )
    ]


def run_checks(full=False, seed=None):
    return [check.run_check() for check in all_checks(full, seed)]


def print_summary(checks):
    print("-" * 80)
    cprint("Summary", bold=True, color="HEADER")
    print("-" * 80)
    cprint("Information", bold=True, color="HEADER")
    for check in checks:
        for key, val in check.info.items():
            print(f"{check.display_name} / {key}: {val}")
    print("-" * 80)
    cprint("Checks", bold=True, color="HEADER")
    for check in checks:
        cprint(f"{check.display_name}:", bold=True, end="")
        if check.result is True:
            cprint("  PASS", color="OKGREEN")
        else:
            cprint("  FAIL", color="FAIL")
    print("-" * 80)
    failed = [check for check in checks if check.result is not True]
    if failed:
        cprint("Some checks failed! Please check the following information.\n", color="FAIL")
    for check in failed:
        cprint(f"{check.display_name}:", bold=True)
        cprint(f"{check.error_msg}", color="FAIL")
        if check.error_handling:
            print(check.error_handling)
        print("\n")


def main(full=False, seed=None) -> int:
    """Run every check, print the summary table and return the exit status"""
    cprint("Reproducing the published permanent values", color=None)
    checks = run_checks(full, seed)
    print_summary(checks)
    return 0 if all(check.result is True for check in checks) else 1


if __name__ == "__main__":
    sys.exit(main(full="--full" in sys.argv[1:]))
