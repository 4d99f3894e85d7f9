from ..circulant import (
    circulant_bound,
    circulant_parity_census,
    class_permanents,
    reis_count,
    reis_triangle_cases,
    weighted_class_bound,
    weighted_class_count,
)
from .common import add_common_arguments, emit, split_mode

MODES = ("spectrum", "classes", "reis", "weighted-count", "parity")


def overview(n, k=3, census=False):
    """{n, k, classes, spectrum, bound} with the parity census on request"""
    if census and k != 3:
        raise ValueError(f"The parity census covers offset triples, got k={k}")
    classes = class_permanents(n, k)
    report = {
        "n": n,
        "k": k,
        "classes": [{"offsets": list(c.offsets), "permanent": per} for c, per in classes],
        "spectrum": sorted({per for _, per in classes}),
        "bound": circulant_bound(n),
    }
    if census:
        report["parity_census"] = circulant_parity_census(n)
    return report


def execute(args):
    mode, values = split_mode(args.values, MODES, None)
    if len(values) != 1:
        raise ValueError(f"Expected [MODE] N, got {args.values}")
    n, k = int(values[0]), args.k
    if mode is None:
        report = overview(n, k, args.census)
        disagreements = report.get("parity_census", {}).get("disagreements")
        return (1 if disagreements else 0), report
    if mode == "spectrum":
        report = overview(n, k)
        return 0, {"n": n, "k": k, "spectrum": report["spectrum"], "bound": report["bound"]}
    if mode == "classes":
        report = overview(n, k)
        return 0, {"n": n, "k": k, "classes": report["classes"]}
    if mode == "reis":
        report = {"n": n, "k": k, "count": reis_count(n, k)}
        if k == 3:
            report["residue_formula"] = reis_triangle_cases(n)
        return 0, report
    if mode == "weighted-count":
        return 0, {
            "n": n,
            "pattern": args.pattern,
            "count": weighted_class_count(n, args.pattern),
            "bound": weighted_class_bound(n, args.pattern),
        }
    report = circulant_parity_census(n)
    return (1 if report["disagreements"] else 0), report


class CLICommand:
    """Circulant matrices Σ P^o up to rotation and reflection.

    `N [--k K] [--census]` lists the dihedral classes with their
    permanents, the spectrum and its bound, and with --census the
    odd/even census over all offset triples. Modes: `spectrum N`,
    `classes N`, `reis N` (number of classes), `weighted-count N
    --pattern abc` and `parity N` (the census alone).

    Examples: `permspec circulant 7 --census`,
    `permspec circulant 9 --k 4` and `permspec circulant reis 12`.
    """

    @staticmethod
    def add_arguments(parser):
        add_common_arguments(parser)
        parser.add_argument("values", nargs="+", help="[MODE] N")
        parser.add_argument("-k", "--k", dest="k", type=int, default=3, help="Number of offsets (default: 3)")
        parser.add_argument("--census", action="store_true", help="Add the odd/even census over offset triples")
        parser.add_argument("--pattern", choices=("aaa", "aab", "abc"), default="aaa")

    @staticmethod
    def run(args, parser):
        emit(args, *execute(args))
