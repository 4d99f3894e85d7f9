"""Sub-commands of the `permspec` command line tool.

Every module exposes a `CLICommand` class understood by `ase.cli.main`
and an `execute(args)` function returning (status, report).
"""
