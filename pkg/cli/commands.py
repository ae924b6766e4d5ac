import logging
import math
from dataclasses import dataclass

import config
from classical.regression import cost, fit_linear, load_training_csv
from cli.reports import RENDERERS, render_fit, render_terms
from errors import DomainError
from imaging.aggregation import (
    TimeSeries, aggregate_average, aggregate_extreme, aggregate_mode, process_series,
)
from imaging.volume import read_volume
from quantum.circuits import ghz_state
from quantum.oracle import load_truth_table, parallel_evaluate

logger = logging.getLogger(__name__)

AGGREGATIONS = ("average", "mode-most", "mode-least", "max", "min", "none")
OUTPUT_FORMATS = tuple(RENDERERS)

AVERAGE_HELP = (
    "How to combine per-frame results. 'average' suits frames that are not sharp "
    "individually and span a short time (s_0 close to s_T); 'mode-most'/'mode-least' "
    "vote on boundary masks; 'max'/'min' keep per-position extremes."
)


@dataclass(frozen=True)
class RunConfig:
    epsilon: float = config.DEFAULT_EPSILON
    drop_wraparound: bool = config.DEFAULT_DROP_WRAPAROUND
    aggregation: str = config.DEFAULT_AGGREGATION
    rescale_by_norm: bool = config.DEFAULT_RESCALE_BY_NORM
    output_format: str = config.DEFAULT_OUTPUT_FORMAT

    def __post_init__(self):
        if not math.isfinite(self.epsilon) or self.epsilon < 0:
            raise DomainError(f"--epsilon must be finite and >= 0, got {self.epsilon}")
        if self.aggregation not in AGGREGATIONS:
            raise DomainError(f"unknown aggregation {self.aggregation!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise DomainError(f"unknown output format {self.output_format!r}")


# ── Commands ──────────────────────────────────────────────────────────────────

def cmd_ghz(n):
    if not config.MIN_GHZ_QUBITS <= n <= config.MAX_SIMULATED_QUBITS:
        raise DomainError(
            f"n must be between {config.MIN_GHZ_QUBITS} and {config.MAX_SIMULATED_QUBITS}, got {n}"
        )
    return render_terms(ghz_state(n))


def cmd_oracle(truth_table_file):
    f = load_truth_table(truth_table_file)
    logger.info("Loaded truth table %s (m=%d, k=%d)", truth_table_file, f.input_bits, f.output_bits)
    return render_terms(parallel_evaluate(f))


def aggregate(series, method):
    if method == "none":
        return None
    if method == "average":
        return method, aggregate_average(series)
    if method in ("max", "min"):
        return method, aggregate_extreme(series, method)
    prefer = method.split("-", 1)[1]
    return method, aggregate_mode(series.masks, prefer)


def cmd_edges(volume_files, run_config, binary=False, workers=1):
    if not volume_files:
        raise DomainError("at least one volume file is required")
    frames = sorted((read_volume(path, binary) for path in volume_files),
                    key=lambda v: v.time_stamp)
    series = TimeSeries(frames)
    edge_series = process_series(
        series,
        epsilon=run_config.epsilon,
        drop_wraparound=run_config.drop_wraparound,
        rescale_by_norm=run_config.rescale_by_norm,
        workers=workers,
    )
    combined = aggregate(edge_series, run_config.aggregation)
    return RENDERERS[run_config.output_format](edge_series, run_config, combined)


def cmd_fit(csv_file, learning_rate=config.DEFAULT_LEARNING_RATE,
            iterations=config.DEFAULT_ITERATIONS):
    data = load_training_csv(csv_file)
    logger.info("Fitting %d samples x %d features (rate %g, %d iterations)",
                data.sample_count, data.feature_count, learning_rate, iterations)
    model = fit_linear(data, learning_rate, iterations)
    return render_fit(model, cost(model, data), iterations)


# ── argparse wiring ───────────────────────────────────────────────────────────

def _run_ghz(args):
    return cmd_ghz(args.n)


def _run_oracle(args):
    return cmd_oracle(args.truth_table)


def _run_edges(args):
    run_config = RunConfig(
        epsilon=args.epsilon,
        drop_wraparound=not args.keep_wraparound,
        aggregation=args.aggregate,
        rescale_by_norm=args.rescale_by_norm,
        output_format=args.format,
    )
    return cmd_edges(args.volumes, run_config, binary=args.binary, workers=args.workers)


def _run_fit(args):
    return cmd_fit(args.csv, args.learning_rate, args.iterations)


def register_commands(subparsers):
    ghz = subparsers.add_parser("ghz", help="Print the GHZ state built by the Hadamard/CZ circuit.")
    ghz.add_argument("n", type=int, help="Number of qubits (2..%d)." % config.MAX_SIMULATED_QUBITS)
    ghz.set_defaults(handler=_run_ghz)

    oracle = subparsers.add_parser("oracle", help="Evaluate a boolean function on all inputs in superposition.")
    oracle.add_argument("truth_table", help="Truth-table file: 'm k' then 2^m output integers.")
    oracle.set_defaults(handler=_run_oracle)

    edges = subparsers.add_parser("edges", help="Hadamard edge detection over one or more volume frames.")
    edges.add_argument("volumes", nargs="+", help="Volume files, one per frame.")
    edges.add_argument("--epsilon", type=float, default=config.DEFAULT_EPSILON,
                       help="Boundary threshold on |edge coefficient| (default %(default)g).")
    edges.add_argument("--keep-wraparound", action="store_true",
                       help="Keep seam positions (column/slab ends, padding, c_{P-1}-c_0) in masks.")
    edges.add_argument("--aggregate", choices=AGGREGATIONS, default=config.DEFAULT_AGGREGATION,
                       help=AVERAGE_HELP)
    edges.add_argument("--rescale-by-norm", action="store_true",
                       default=config.DEFAULT_RESCALE_BY_NORM,
                       help="Multiply each frame's edges by its norm factor before masking and aggregation.")
    edges.add_argument("--format", choices=OUTPUT_FORMATS, default=config.DEFAULT_OUTPUT_FORMAT)
    edges.add_argument("--binary", action="store_true", help="Read volumes in the binary format.")
    edges.add_argument("--workers", type=int, default=config.FRAME_WORKERS,
                       help="Frames processed concurrently (default %(default)s).")
    edges.set_defaults(handler=_run_edges)

    fit = subparsers.add_parser("fit", help="Fit the linear hypothesis to CSV data by gradient descent.")
    fit.add_argument("csv", help="CSV file: features then target, one sample per row.")
    fit.add_argument("--learning-rate", type=float, default=config.DEFAULT_LEARNING_RATE)
    fit.add_argument("--iterations", type=int, default=config.DEFAULT_ITERATIONS)
    fit.set_defaults(handler=_run_fit)
