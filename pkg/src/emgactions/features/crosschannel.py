"""Inter-channel statistics: peak cross-correlation between channel pairs."""

from __future__ import annotations

import numpy as np

from emgactions.dataset import Pattern, segment_channel

# Default channel pairs: six among the upper-limb electrodes (1-4), six among
# the lower-limb electrodes (5-8), in this fixed order.
DEFAULT_PAIRS = (
    (3, 4),
    (2, 4),
    (2, 3),
    (1, 4),
    (1, 3),
    (1, 2),
    (7, 8),
    (6, 8),
    (6, 7),
    (5, 8),
    (4, 7),
    (5, 6),
)


class LengthMismatchError(ValueError):
    """Cross-correlated segments must have equal length."""


class BadPairError(ValueError):
    """A channel pair references a channel outside 1..M."""


def ics_max_xcorr(seg_a, seg_b) -> float:
    """Maximum of the biased cross-correlation over all integer lags.

    The estimator is (1/L) * sum_l a(l) b(l+d) with out-of-range terms zero,
    maximized over d in [-(L-1), L-1]. No normalization beyond the 1/L
    factor, so the value scales with signal power.
    """
    a = np.asarray(seg_a, dtype=float).ravel()
    b = np.asarray(seg_b, dtype=float).ravel()
    if a.size != b.size:
        raise LengthMismatchError(f"segment lengths differ: {a.size} vs {b.size}")
    if a.size < 1:
        raise ValueError("segments must be nonempty")
    return float(np.correlate(a, b, mode="full").max() / a.size)


def compute_ics(pattern: Pattern, pairs=DEFAULT_PAIRS, window: int | None = None) -> np.ndarray:
    """Peak cross-correlation for each channel pair of a pattern.

    Args:
        pattern: multi-channel trial.
        pairs: 1-based (i, j) channel pairs, evaluated in order.
        window: segment length; None uses the whole trial. With several
            segments per trial the per-segment values are averaged.

    Returns:
        Array of len(pairs) values.

    Raises:
        BadPairError: a pair references a channel outside 1..M.
    """
    m = pattern.n_channels
    for i, j in pairs:
        if not (1 <= i <= m and 1 <= j <= m):
            raise BadPairError(f"pair ({i}, {j}) outside channels 1..{m}")
    length = window if window is not None else pattern.n_samples
    out = np.empty(len(pairs))
    for q, (i, j) in enumerate(pairs):
        segs_i = segment_channel(pattern.channels[i - 1], length, channel=i)
        segs_j = segment_channel(pattern.channels[j - 1], length, channel=j)
        vals = [
            ics_max_xcorr(si.values, sj.values)
            for si, sj in zip(segs_i, segs_j)
        ]
        out[q] = np.mean(vals)
    return out
