from ..extremal import (
    bolshakov_second,
    boundary_closed_forms,
    boundary_maximizer_count,
    check_cube_conditions,
    max_weighted_symmetric,
    merriell_check,
    voorhoeve_bound,
)
from ..utils import to_fraction
from .common import add_common_arguments, add_weights_argument, emit, parse_weights, split_mode

MODES = ("merriell", "bolshakov", "voorhoeve", "max", "conditions", "boundary")


def _single_n(mode, values):
    if len(values) != 1:
        raise ValueError(f"Mode {mode} takes N, got {values}")
    return int(values[0])


def execute(args):
    mode, values = split_mode(args.values, MODES, "max")
    if mode == "conditions":
        weights = parse_weights(args.weights) or tuple(to_fraction(w) for w in values)
        if len(weights) != 3:
            raise ValueError("Mode conditions takes ALPHA BETA GAMMA")
        return 0, {"weights": list(weights), "conditions": [[name, ok] for name, ok in check_cube_conditions(*weights)]}
    if mode == "max":
        if not values:
            raise ValueError("Mode max takes N")
        weights = parse_weights(args.weights) or tuple(to_fraction(w) for w in values[1:])
        if weights and len(weights) != 3:
            raise ValueError("Mode max takes N optionally followed by ALPHA BETA GAMMA")
        return 0, max_weighted_symmetric(int(values[0]), *weights).todict()
    n = _single_n(mode, values)
    if mode == "merriell":
        return 0, merriell_check(n)
    if mode == "bolshakov":
        return 0, {"n": n, "second_max": bolshakov_second(n)}
    if mode == "voorhoeve":
        return 0, {"n": n, "lower_bound": voorhoeve_bound(n)}
    report = boundary_closed_forms(n, args.ratio)
    report["maximizer_count"] = boundary_maximizer_count(n)
    return 0, report


class CLICommand:
    """Extremal permanent values.

    Without a mode, `N [--weights ALPHA BETA GAMMA]` reports the maximum
    on Λ̂_n(α,β,γ) (Λ̂_n³ without weights) with the closed forms whose
    conditions hold. Modes: `merriell N` (maximum on Λ_n³), `bolshakov N`
    (second maximum, 3 | N), `voorhoeve N` (lower bound), `max N [ALPHA
    BETA GAMMA]`, `conditions ALPHA BETA GAMMA` and `boundary N` (the
    class α = θγ, β = γ - α, 12 | N).

    Examples: `permspec extremal 8`,
    `permspec extremal 8 --weights 4/5 1/5 1` and
    `permspec extremal bolshakov 9`.
    """

    @staticmethod
    def add_arguments(parser):
        add_common_arguments(parser)
        parser.add_argument("values", nargs="+", help="[MODE] N and/or weights")
        add_weights_argument(parser)
        parser.add_argument("--ratio", default=None, help="Rational α/γ for mode boundary (default: θ)")

    @staticmethod
    def run(args, parser):
        emit(args, *execute(args))
