from .. import reproduce
from .common import add_common_arguments, emit


def execute(args):
    checks = reproduce.run_checks(full=args.full, seed=args.seed)
    status = 0 if all(check.result is True for check in checks) else 1
    return status, {"full": args.full, "checks": [check.todict() for check in checks]}


class CLICommand:
    """Recompute the published permanent values.

    Prints a pass/fail table and exits with status 1 if any check fails.
    Enumeration at n = 8 only runs with --full.
    """

    @staticmethod
    def add_arguments(parser):
        add_common_arguments(parser)
        parser.add_argument("--full", action="store_true", help="Include the slow exhaustive runs")

    @staticmethod
    def run(args, parser):
        if args.format == "text":
            checks = reproduce.run_checks(full=args.full, seed=args.seed)
            reproduce.print_summary(checks)
            if any(check.result is not True for check in checks):
                raise SystemExit(1)
            return
        emit(args, *execute(args))
