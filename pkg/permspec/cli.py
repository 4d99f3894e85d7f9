"""Command line entry point `permspec`, built on the ASE sub-command
framework. `run(RunConfig)` is the in-process dispatcher used by tests
and scripts.
"""
import argparse
from dataclasses import dataclass, field
from importlib import import_module
from typing import Dict, Optional, Sequence, Tuple

from . import __version__
from .commands.common import render

COMMANDS = [
    ("permanent", "permspec.commands.permanent"),
    ("seq", "permspec.commands.seq"),
    ("spectrum", "permspec.commands.spectrum"),
    ("extremal", "permspec.commands.extremal"),
    ("upper", "permspec.commands.upper"),
    ("circulant", "permspec.commands.circulant"),
    ("parity", "permspec.commands.parity"),
    ("enumerate", "permspec.commands.enumerate"),
    ("reproduce-paper", "permspec.commands.reproduce"),
]


def main(
    prog="permspec",
    description="Exact permanents and permanent spectra of (0,1)-matrices with three 1's per line",
    hook=None,
    args=None,
):
    from ase.cli.main import main as ase_main

    ase_main(prog=prog, description=description, version=__version__, commands=COMMANDS, hook=hook, args=args)


@dataclass
class RunConfig:
    """One command line invocation, e.g. RunConfig("seq", ["a", "3", "7"])"""

    command: str
    arguments: Sequence[str] = ()
    output_format: str = "json"
    workers: Optional[int] = None
    seed: Optional[int] = None
    limits: Dict[str, int] = field(default_factory=dict)

    def argv(self):
        argv = [self.command, *[str(a) for a in self.arguments], "--format", self.output_format]
        if self.workers is not None:
            argv += ["--workers", str(self.workers)]
        if self.seed is not None:
            argv += ["--seed", str(self.seed)]
        for key, value in sorted(self.limits.items()):
            argv += ["--set", f"{key}={value}"]
        return argv


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _build_parser(prog="permspec"):
    parser = _Parser(prog=prog)
    subparsers = parser.add_subparsers(dest="command", required=True)
    modules = {}
    for name, module_name in COMMANDS:
        module = import_module(module_name)
        subparser = subparsers.add_parser(name)
        module.CLICommand.add_arguments(subparser)
        modules[name] = module
    return parser, modules


def run(config: RunConfig) -> Tuple[int, str]:
    """Dispatch one command and return (exit status, serialized report).

    Status 2 is a usage error (bad arguments or invalid input), status 1 a
    failed check. No output is printed.
    """
    parser, modules = _build_parser()
    try:
        args = parser.parse_args(config.argv())
    except UsageError as e:
        return 2, str(e)
    try:
        status, report = modules[args.command].execute(args)
    except (ValueError, KeyError, IndexError, ArithmeticError, OSError) as e:
        return 2, f"{e.__class__.__name__}: {e}"
    return status, render(report, args.format)


if __name__ == "__main__":
    main()
