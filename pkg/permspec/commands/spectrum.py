from ..spectrum import alternating_report, negative_unit_report, spectrum_multiplicity
from ..utils import to_fraction
from .common import add_common_arguments, emit

MODES = ("sym", "symmetric", "weighted", "multiplicity", "negative-unit", "alternating")


def _weights(args):
    if len(args.weights) != 3:
        raise ValueError(f"Mode {args.mode} needs three weights ALPHA BETA GAMMA, got {len(args.weights)}")
    return tuple(to_fraction(w) for w in args.weights)


def spectrum_report(n, weights=None) -> dict:
    """{n, weights, values, attaining_partitions} of Λ̂_n(α,β,γ), Λ̂_n³ without weights"""
    attained = spectrum_multiplicity(n, weights)
    return {
        "n": n,
        "weights": list(weights) if weights else [1, 1, 1],
        "values": list(attained),
        "attaining_partitions": {str(value): [str(p) for p in parts] for value, parts in attained.items()},
    }


def execute(args):
    n = args.n
    if args.mode in ("sym", "symmetric"):
        return 0, spectrum_report(n)
    if args.mode == "weighted":
        return 0, spectrum_report(n, _weights(args))
    if args.mode == "multiplicity":
        weights = _weights(args) if args.weights else None
        attained = spectrum_multiplicity(n, weights)
        return 0, {"n": n, "values": [{"value": v, "partitions": [str(p) for p in parts]} for v, parts in attained.items()]}
    if args.mode == "negative-unit":
        return 0, negative_unit_report(n).todict()
    return 0, alternating_report(n).todict()


class CLICommand:
    """Permanent spectra of the symmetric-position classes.

    Modes: `sym N` (or `symmetric N`) for Λ̂_n³, `weighted N ALPHA BETA
    GAMMA` for Λ̂_n(α,β,γ), `multiplicity N [ALPHA BETA GAMMA]` for the
    partitions attaining every value, `negative-unit N` and
    `alternating N` for the weights (-1,1,1) and (-1,2,1) against their
    closed forms. Weights such as -1/2 must follow a `--`.

    Examples: `permspec spectrum sym 8` and
    `permspec spectrum weighted 11 -1 3 2`, whose values are
    4096, 8224, 8320, 8704, 16384 and 18496.
    """

    @staticmethod
    def add_arguments(parser):
        add_common_arguments(parser)
        parser.add_argument("mode", choices=MODES)
        parser.add_argument("n", type=int)
        parser.add_argument("weights", nargs="*", default=[], help="ALPHA BETA GAMMA")

    @staticmethod
    def run(args, parser):
        emit(args, *execute(args))
