from ..core import ClassSpec, decompose_components, is_class_member, permanent_expansion, permanent_ryser
from ..io import read_matrices
from .common import add_common_arguments, add_weights_argument, emit, parse_weights, settings_from


def execute(args):
    settings = settings_from(args)
    spec = None
    if args.check_class:
        spec = ClassSpec.parse(args.check_class, parse_weights(args.weights))
    results = []
    status = 0
    for matrix in read_matrices(args.file):
        entry = {"n": matrix.n}
        if args.method in ("ryser", "both"):
            entry["permanent"] = permanent_ryser(matrix, use_numba=settings["use_numba"])
        if args.method in ("expansion", "both"):
            entry["expansion"] = permanent_expansion(matrix, limit=settings["oracle_limit"])
        if args.method == "expansion":
            entry["permanent"] = entry.pop("expansion")
        elif args.method == "both" and entry["expansion"] != entry["permanent"]:
            status = 1
        if args.decompose:
            blocks = decompose_components(matrix)
            entry["components"] = [block.n for block in blocks]
            entry["indecomposable"] = len(blocks) == 1
        if spec is not None:
            entry["member_of"] = str(spec)
            entry["member"] = is_class_member(matrix, spec)
        results.append(entry)
    return status, {"file": str(args.file), "matrices": results}


class CLICommand:
    """Exact permanent of the matrices in a file.

    The file holds one or more matrices: a line with n, then n rows of
    rational literals such as 1, -2 or 3/4.
    """

    @staticmethod
    def add_arguments(parser):
        add_common_arguments(parser)
        parser.add_argument("file", help="Matrix text file")
        parser.add_argument(
            "--method",
            choices=("ryser", "expansion", "both"),
            default="ryser",
            help="Kernel; `both` exits with status 1 if the two disagree",
        )
        parser.add_argument("--decompose", action="store_true", help="Report the direct summands")
        parser.add_argument("--check-class", default=None, help="Class name such as lambda3-diag or abg-sym")
        add_weights_argument(parser)

    @staticmethod
    def run(args, parser):
        emit(args, *execute(args))
