from ..core import ClassKind, ClassSpec
from ..enumerator import brute_count, brute_spectrum, mci_check
from ..io import write_spectra
from .common import add_common_arguments, add_weights_argument, emit, parse_weights, settings_from


def _shard(args):
    if args.shard is None:
        return None
    if args.shards is None:
        raise ValueError("--shard requires --shards")
    return (args.shard, args.shards)


def execute(args):
    settings = settings_from(args)
    if args.mci:
        report = mci_check(args.n, settings=settings)
        status = 1 if report.violations or report.bound_violations else 0
        return status, report.todict()

    spec = ClassSpec.parse(args.cls, parse_weights(args.weights))
    shard = _shard(args)
    report = {"class": str(spec), "n": args.n, "indecomposable_only": args.indecomposable}
    if shard is not None:
        report["shard"] = list(shard)
    if args.count or not args.spectrum:
        report["count"] = brute_count(
            spec,
            args.n,
            allow_heavy=args.allow_heavy,
            canonical=bool(args.canonical),
            indecomposable_only=args.indecomposable,
            shard=shard,
            settings=settings,
        )
        report["canonical_count"] = bool(args.canonical)
    if args.spectrum:
        spectrum = brute_spectrum(
            spec,
            args.n,
            canonical=args.canonical,
            allow_heavy=args.allow_heavy,
            indecomposable_only=args.indecomposable,
            shard=shard,
            settings=settings,
        )
        report["spectrum"] = list(spectrum)
        if args.spectra_out:
            write_spectra(args.spectra_out, {args.n: spectrum})
            report["spectra_file"] = str(args.spectra_out)
    return 0, report


class CLICommand:
    """Exhaustive enumeration of a matrix class.

    Counts the members of CLASS at size N and, with --spectrum, collects
    their permanents. With --indecomposable only completely indecomposable
    members are kept, and --spectra-out writes the spectrum in the format
    read by `upper --spectra`. --mci checks submultiplicativity of
    the indecomposable maxima for sizes up to N.

    Examples: `permspec enumerate lambda3-diag 4` counts 9 matrices and
    `permspec enumerate lambda3 5 --spectrum` finds the values 12 and 13.
    """

    @staticmethod
    def add_arguments(parser):
        add_common_arguments(parser)
        parser.add_argument("cls", metavar="class", choices=[k.value for k in ClassKind])
        parser.add_argument("n", type=int)
        add_weights_argument(parser)
        parser.add_argument("--spectrum", action="store_true", help="Collect the permanent spectrum")
        parser.add_argument("--count", action="store_true", help="Count the members (default without --spectrum)")
        parser.add_argument("--indecomposable", action="store_true")
        parser.add_argument(
            "--canonical",
            action="store_true",
            default=None,
            help="Doubly lexicographic representatives only (default for lambda3 spectra)",
        )
        parser.add_argument("--no-canonical", dest="canonical", action="store_false")
        parser.add_argument("--shards", type=int, default=None, help="Number of shards")
        parser.add_argument("--shard", type=int, default=None, help="Run only this shard (0-based)")
        parser.add_argument("--allow-heavy", action="store_true", help="Permit runs above heavy_n")
        parser.add_argument("--spectra-out", default=None, help="Write the spectrum as {n: [values]} JSON")
        parser.add_argument("--mci", action="store_true", help="Run the submultiplicativity check up to n")

    @staticmethod
    def run(args, parser):
        emit(args, *execute(args))
