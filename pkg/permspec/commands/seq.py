from ..sequences import SEQUENCES, sequence_values
from .common import JsonLines, add_common_arguments, add_weights_argument, emit, parse_weights


def index_range(start, stop=None):
    """(start, stop) from `START STOP` or a single `START..STOP`"""
    if stop is None:
        first, sep, last = str(start).partition("..")
        if not sep:
            raise ValueError(f"Expected START STOP or START..STOP, got {start!r}")
        return int(first), int(last)
    return int(start), int(stop)


def execute(args):
    start, stop = index_range(args.start, args.stop)
    values = sequence_values(args.name, start, stop, parse_weights(args.weights))
    return 0, JsonLines({"n": n, "value": value} for n, value in values.items())


class CLICommand:
    """Values of an integer or rational sequence, one {"n", "value"}
    JSON object per line.

    Example: `permspec seq a 3 7` gives the permanents of I + P + P²
    for n = 3..7, `permspec seq menage 3..9` the ménage numbers and
    `permspec seq s 2 5` the rational sequence s_n.
    """

    @staticmethod
    def add_arguments(parser):
        add_common_arguments(parser)
        parser.add_argument("name", choices=sorted(SEQUENCES) + ["a-general"], help="Sequence name")
        parser.add_argument("start", help="First index, or the range START..STOP")
        parser.add_argument("stop", nargs="?", default=None, help="Last index")
        add_weights_argument(parser)

    @staticmethod
    def run(args, parser):
        emit(args, *execute(args))
