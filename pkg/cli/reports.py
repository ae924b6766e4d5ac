"""
Report rendering. Text and CSV print floats with 17 significant digits;
JSON uses Python's shortest round-trip float repr. Both reproduce the double
exactly, so identical runs give byte-identical reports.
"""

import io
import json

import numpy as np
import pandas as pd

from config import REPORT_FLOAT_FORMAT
from imaging.qhed import boundary_positions
from quantum.state import nonzero_terms


def format_real(value):
    return REPORT_FLOAT_FORMAT % value


def format_amplitude(z):
    z = complex(z)
    if z.imag == 0:
        return format_real(z.real)
    return f"{format_real(z.real)}{'+' if z.imag >= 0 else '-'}{format_real(abs(z.imag))}j"


def render_terms(state):
    lines = [f"{label} {format_amplitude(amp)}" for label, amp in nonzero_terms(state)]
    return "\n".join(lines) + "\n"


def render_fit(model, final_cost, iterations):
    lines = [f"theta_{i} {format_real(t)}" for i, t in enumerate(model.theta)]
    lines.append(f"cost {format_real(final_cost)}")
    lines.append(f"iterations {iterations}")
    return "\n".join(lines) + "\n"


def _floats(values):
    return [float(v) for v in np.asarray(values, dtype=np.float64)]


def _aggregate_payload(aggregate):
    if aggregate is None:
        return {"method": "none"}
    method, result = aggregate
    if hasattr(result, "bits"):
        return {
            "method": method,
            "mask": [bool(b) for b in result.bits],
            "boundaries": boundary_positions(result),
        }
    return {"method": method, "values": _floats(result)}


def render_edges_json(series, config, aggregate=None):
    first = series.entries[0].meta
    frames = []
    for edges, mask in zip(series.entries, series.masks):
        frames.append({
            "time": edges.frame_time,
            "edges": _floats(edges.coefficients),
            "mask": [bool(b) for b in mask.bits],
            "boundaries": boundary_positions(mask),
            "norm_factor": float(edges.meta.norm_factor),
        })
    report = {
        "frames": frames,
        "aggregate": _aggregate_payload(aggregate),
        "meta": {
            "dims": list(first.original_dims),
            "num_qubits": first.num_qubits,
            "padded_length": first.padded_length,
            "epsilon": config.epsilon,
            "drop_wraparound": config.drop_wraparound,
            "rescale_by_norm": config.rescale_by_norm,
            "aggregation": config.aggregation,
        },
    }
    return json.dumps(report, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def render_edges_csv(series, config, aggregate=None):
    """Long format: one row per (frame, position), then the aggregate rows."""
    tables = []
    for edges, mask in zip(series.entries, series.masks):
        p = len(edges)
        tables.append(pd.DataFrame({
            "section": "frame",
            "time": edges.frame_time,
            "position": np.arange(p),
            "edge": edges.coefficients,
            "mask": mask.bits,
        }))
    if aggregate is not None:
        method, result = aggregate
        p = len(result)
        is_mask = hasattr(result, "bits")
        tables.append(pd.DataFrame({
            "section": f"aggregate:{method}",
            "time": pd.NA,
            "position": np.arange(p),
            "edge": np.nan if is_mask else np.asarray(result, dtype=np.float64),
            "mask": result.bits if is_mask else pd.NA,
        }))
    table = pd.concat(tables, ignore_index=True)
    buffer = io.StringIO()
    table.to_csv(buffer, index=False, float_format=REPORT_FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


RENDERERS = {
    "json": render_edges_json,
    "csv": render_edges_csv,
}
