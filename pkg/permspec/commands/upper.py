from ..io import read_spectra
from ..tables import default_tables
from ..upper import (
    attained_in_symmetric,
    mci_bounds,
    table_fixture,
    table_mismatches,
    upper_general,
    upper_symmetric,
)
from .common import add_common_arguments, emit

MODES = ("sym", "gen", "symmetric", "general", "fixture", "mci-bounds")
ALIASES = {"sym": "symmetric", "gen": "general"}


def _spectra(args):
    if args.spectra:
        return read_spectra(args.spectra)
    return default_tables().indecomposable_spectra


def _n_and_t(args):
    values = args.values
    if args.t is not None and len(values) == 1:
        return int(values[0]), args.t
    if args.t is None and len(values) == 2:
        return int(values[0]), int(values[1])
    raise ValueError(f"Mode {args.mode} takes N --t T (or N T)")


def execute(args):
    mode = ALIASES.get(args.mode, args.mode)
    values = args.values
    if mode == "fixture":
        if len(values) != 3 or values[0] not in ("symmetric", "general"):
            raise ValueError("Mode fixture takes KIND J RANK with KIND symmetric or general")
        kind, j, rank = values[0], int(values[1]), int(values[2])
        return 0, {"kind": kind, "j": j, "rank": rank, "coefficient": table_fixture(kind, j, rank)}
    if mode == "mci-bounds":
        spectra = _spectra(args)
        known = {size: max(v) for size, v in spectra.items() if v}
        bounds = mci_bounds(known, int(values[0]))
        return 0, {"known": sorted(known), "bounds": {str(s): b for s, b in bounds.items()}}

    n, t = _n_and_t(args)
    if mode == "symmetric":
        ranked = upper_symmetric(n, t)
    else:
        ranked = upper_general(n, t, _spectra(args), strict=not args.non_strict)
    report = ranked.todict()
    if args.compare:
        computed = ranked.coefficients[: ranked.certified]
        report["table_mismatches"] = table_mismatches(ranked.kind, ranked.j, computed)
        if ranked.kind == "general":
            report["attained_in_symmetric"] = attained_in_symmetric(ranked)
    return 0, report


class CLICommand:
    """Ranked upper permanent magnitudes.

    Modes: `sym N --t T` and `gen N --t T` (also spelled `symmetric` and
    `general`, with T as a second value) list the values c·6^{(n-j)/3}
    above the depth-t cut-off, `fixture KIND J RANK` reads a published
    coefficient and `mci-bounds SMAX` bounds the indecomposable maxima
    of sizes up to SMAX.

    Examples: `permspec upper sym 24 --t 1`,
    `permspec upper gen 28 --t 2 --non-strict` and
    `permspec upper fixture general 1 6`.
    """

    @staticmethod
    def add_arguments(parser):
        add_common_arguments(parser)
        parser.add_argument("mode", choices=MODES)
        parser.add_argument("values", nargs="+")
        parser.add_argument("--t", type=int, default=None, help="Depth parameter t")
        parser.add_argument("--spectra", default=None, help="JSON {size: [values]} of indecomposable spectra")
        parser.add_argument(
            "--non-strict",
            action="store_true",
            help="Bound missing sizes by submultiplicativity instead of failing",
        )
        parser.add_argument("--compare", action="store_true", help="Compare with the published tables")

    @staticmethod
    def run(args, parser):
        emit(args, *execute(args))
