"""
Quantum edges: command-line entrypoint

Usage: python main.py {ghz,oracle,edges,fit} ...
Exit codes: 0 success, 2 usage/parse, 3 degenerate data, 4 internal error.
"""

import os
import sys
import logging
import logging.handlers

BASE_DIR = os.path.dirname(os.path.abspath(__file__))
if BASE_DIR not in sys.path:
    sys.path.insert(0, BASE_DIR)

from config import LOG_BACKUP_COUNT, LOG_MAX_BYTES, LOG_PATH  # noqa: E402
from errors import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, QuantumEdgeError, exit_code_for  # noqa: E402


def setup_logging(log_path=LOG_PATH, verbose=False):
    root = logging.getLogger()
    root.setLevel(logging.INFO)
    if not root.handlers:
        log_dir = os.path.dirname(log_path)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            log_path, maxBytes=LOG_MAX_BYTES, backupCount=LOG_BACKUP_COUNT
        )
        file_handler.setFormatter(logging.Formatter(
            "%(asctime)s %(name)s %(levelname)s %(message)s"
        ))
        root.addHandler(file_handler)
        console = logging.StreamHandler()
        console.setLevel(logging.INFO if verbose else logging.WARNING)
        console.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(console)


def write_report(report, output=None):
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)
        sys.stdout.flush()


def main(argv=None):
    from cli.app import create_parser
    args = create_parser().parse_args(argv)

    setup_logging(args.log_file, args.verbose)
    logger = logging.getLogger(__name__)
    logger.info("Running %s", args.command)

    try:
        report = args.handler(args)
        write_report(report, args.output)
    except QuantumEdgeError as e:
        code = exit_code_for(e)
        if code == EXIT_INTERNAL:
            logger.exception("Invariant violated during %s", args.command)
        else:
            logger.error("%s failed: %s", args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return code
    except OSError as e:
        logger.error("cannot write report: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception("Unexpected error during %s", args.command)
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL

    logger.info("%s finished", args.command)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
