"""
Edge detection over a time series of frames s_0 < ... < s_T, and the
reductions that collapse the per-frame results into one vector or mask.

Frames are independent, so process_series may fan them out over a thread
pool; results are collected in frame order and do not depend on scheduling.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from config import DEFAULT_DROP_WRAPAROUND, DEFAULT_EPSILON
from errors import DomainError
from imaging.encoding import amplitude_encode
from imaging.qhed import BoundaryMask, boundary_mask, denormalize, edge_detect

logger = logging.getLogger(__name__)

MODE_PREFERENCES = ("most", "least")
EXTREMES = ("max", "min")


@dataclass(frozen=True)
class TimeSeries:
    frames: tuple

    def __post_init__(self):
        frames = tuple(self.frames)
        if not frames:
            raise DomainError("time series needs at least one frame")
        dims = frames[0].dims
        for prev, frame in zip(frames, frames[1:]):
            if frame.time_stamp <= prev.time_stamp:
                raise DomainError(
                    f"time stamps must strictly increase: s={prev.time_stamp} then s={frame.time_stamp}"
                )
        for frame in frames:
            if frame.dims != dims:
                raise DomainError(
                    f"frame s={frame.time_stamp} has dims {frame.dims}, series uses {dims}"
                )
        object.__setattr__(self, "frames", frames)

    @property
    def dims(self):
        return self.frames[0].dims

    def __len__(self):
        return len(self.frames)


@dataclass(frozen=True)
class EdgeSeries:
    entries: tuple
    masks: tuple = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        masks = tuple(self.masks)
        if entries:
            length = len(entries[0])
            if any(len(e) != length for e in entries):
                raise DomainError("edge vectors in a series must share one length")
            times = [e.frame_time for e in entries]
            if times != sorted(times):
                raise DomainError("edge vectors must be ordered by frame time")
        if masks and len(masks) != len(entries):
            raise DomainError(f"{len(masks)} masks for {len(entries)} edge vectors")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "masks", masks)

    def __len__(self):
        return len(self.entries)

    def matrix(self):
        """Frames x positions array of edge coefficients."""
        if not self.entries:
            raise DomainError("edge series is empty")
        return np.vstack([e.coefficients for e in self.entries])


def _process_frame(frame, epsilon, drop_wraparound, rescale_by_norm):
    state, meta = amplitude_encode(frame)
    edges = edge_detect(state, meta, frame.time_stamp)
    if rescale_by_norm:
        edges = denormalize(edges)
    return edges, boundary_mask(edges, epsilon, drop_wraparound)


def process_series(series, epsilon=DEFAULT_EPSILON, drop_wraparound=DEFAULT_DROP_WRAPAROUND,
                   rescale_by_norm=False, workers=1):
    work = partial(_process_frame, epsilon=epsilon, drop_wraparound=drop_wraparound,
                   rescale_by_norm=rescale_by_norm)
    logger.info("Processing %d frame(s) of dims %s with %d worker(s)",
                len(series), series.dims, max(1, workers or 1))
    if workers and workers > 1 and len(series) > 1:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="FrameWorker") as pool:
            results = list(pool.map(work, series.frames))
    else:
        results = [work(frame) for frame in series.frames]
    entries, masks = zip(*results)
    return EdgeSeries(entries, masks)


def aggregate_average(series):
    """Component-wise mean over frames; identical frames come back bit-for-bit."""
    stack = series.matrix()
    first = stack[0]
    return first + (stack - first).mean(axis=0)


def aggregate_extreme(series, which="max"):
    if which not in EXTREMES:
        raise DomainError(f"extreme must be one of {EXTREMES}, got {which!r}")
    stack = series.matrix()
    return stack.max(axis=0) if which == "max" else stack.min(axis=0)


def aggregate_mode(masks, prefer="most"):
    """
    Per position, keep the bit seen most (or least) often across frames.

    A value that never occurs is not a candidate, so unanimous positions keep
    their bit under either preference. Ties resolve to False.
    """
    if prefer not in MODE_PREFERENCES:
        raise DomainError(f"prefer must be one of {MODE_PREFERENCES}, got {prefer!r}")
    masks = list(masks)
    if not masks:
        raise DomainError("mode aggregation needs at least one mask")
    length = len(masks[0])
    if any(len(m) != length for m in masks):
        raise DomainError("masks must share one length")
    epsilon = masks[0].epsilon
    if any(m.epsilon != epsilon for m in masks):
        raise DomainError("masks were thresholded with different epsilons")

    votes = np.vstack([m.bits for m in masks])
    trues = votes.sum(axis=0)
    falses = votes.shape[0] - trues
    if prefer == "most":
        bits = trues > falses
    else:
        bits = np.where(falses == 0, True, (trues > 0) & (trues < falses))
    return BoundaryMask(bits, epsilon, all(m.wraparound_removed for m in masks))
