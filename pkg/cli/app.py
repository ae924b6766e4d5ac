import argparse

from config import LOG_PATH
from version import RELEASE_DATE, VERSION


def create_parser():
    parser = argparse.ArgumentParser(
        prog="quantum-edges",
        description="State-vector simulation of Hadamard edge detection, GHZ circuits and oracles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION} ({RELEASE_DATE})")
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr.")
    parser.add_argument("--log-file", default=LOG_PATH, help="Rotating log file (default %(default)s).")
    parser.add_argument("--output", help="Write the report here instead of stdout.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    from cli.commands import register_commands
    register_commands(subparsers)

    return parser
