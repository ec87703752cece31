"""CLI subcommands; each module registers its parser and a `run(args) -> int`."""

from . import compare, dividends, explain, shapley, verify

COMMANDS = [shapley, verify, explain, compare, dividends]

__all__ = ["COMMANDS", "compare", "dividends", "explain", "shapley", "verify"]
