import argparse
import logging
import sys
from typing import List

from cnorm import settings
from cnorm.constants import families
from cnorm.runner import Runner

# refs script logger object
logger = logging.getLogger(__name__)


def global_flags() -> argparse.ArgumentParser:
    """
    Flags accepted both before and after the subcommand.

    Defaults are suppressed so that a flag given before the subcommand is not
    overwritten by the subparser's default.
    """
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="print JSON"
    )
    parser.add_argument(
        "--max-order",
        type=int,
        default=argparse.SUPPRESS,
        help=f"order cap for every group (default {settings.order_cap})",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=argparse.SUPPRESS,
        help="worker processes for scan",
    )
    parser.add_argument(
        "--exhaustive-subgroups",
        action="store_true",
        default=argparse.SUPPRESS,
        help=f"check every subgroup of groups of order <= {settings.exhaustive_subgroup_limit}",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=argparse.SUPPRESS,
        help="log progress; repeat for debug output",
    )
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = global_flags()
    parser = argparse.ArgumentParser(
        prog=settings.name,
        description="Centralizer norms, their series, and checks of their properties on finite groups.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=settings.version)
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", parents=[common], help="write a family member as a .cay file")
    gen.add_argument("family", help=", ".join(families.ALL))
    gen.add_argument(
        "params",
        nargs="+",
        help="integers; product factors as family:p1[,p2] (symmetric:3) or n for Z_n",
    )
    gen.add_argument("-o", "--out", help="output path (default <name>.cay)")

    for name, text in (
        ("series", "print the C-series, upper and lower central and derived series"),
        ("verify", "check every claim on a group; exit 1 if any fails"),
        ("info", "summarize a group's structure"),
    ):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument("file", help=".cay or .perm file, or a shipped preset name")

    scan = commands.add_parser("scan", parents=[common], help="compare class with c_length across a family")
    scan.add_argument("family", help=", ".join((*families.ALL, families.CORPUS)))
    scan.add_argument("limit", type=int, metavar="max_order")
    scan.add_argument("--xlsx", help="also write the table to this spreadsheet")
    return parser


def main(argv: List[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    verbosity = getattr(args, "verbose", 0)
    level = settings.log_level
    if verbosity:
        level = logging.INFO if verbosity == 1 else logging.DEBUG
    # set up logging
    logging.basicConfig(level=level, format=settings.log_format, stream=sys.stderr)
    logger.debug("Running %s with %s.", args.command, vars(args))

    return Runner(args).run()


def launch():
    """Main runner for program."""
    sys.exit(main())


if __name__ == "__main__":
    launch()
