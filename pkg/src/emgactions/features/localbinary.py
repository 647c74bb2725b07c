"""One-dimensional local binary pattern counts."""

from __future__ import annotations

import numpy as np

LBP_WINDOW = 8
LBP_THRESHOLD = 127


class WindowTooLongError(ValueError):
    """LBP window exceeds the segment length."""


def lbp_features(segment, window: int = LBP_WINDOW, threshold: int = LBP_THRESHOLD) -> np.ndarray:
    """Count LBP codes at or below / above a threshold.

    A window of `window` consecutive samples slides one sample at a time.
    Each position is coded against the window mean: bit j is 1 when sample j
    is >= the mean (ties count as 1), and the code is sum(b_j 2^j). Returns
    (codes <= threshold, codes > threshold); the two counts always sum to
    L - window + 1.

    Raises:
        WindowTooLongError: window > segment length.
    """
    x = np.asarray(segment, dtype=float).ravel()
    if window < 1:
        raise ValueError("window must be >= 1")
    if window > x.size:
        raise WindowTooLongError(f"window {window} exceeds segment length {x.size}")
    views = np.lib.stride_tricks.sliding_window_view(x, window)
    centers = views.mean(axis=1, keepdims=True)
    bits = views - centers >= 0.0
    codes = bits @ (1 << np.arange(window))
    below = int(np.count_nonzero(codes <= threshold))
    return np.array([below, codes.size - below])
