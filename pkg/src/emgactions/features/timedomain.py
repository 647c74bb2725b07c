"""Time-domain statistics of a segment."""

from __future__ import annotations

import numpy as np

TDS_NAMES = ("mean", "variance", "skewness", "kurtosis")


def tds(segment) -> np.ndarray:
    """Mean, variance, skewness and kurtosis of one segment.

    Plain population moments (1/L averages, no bias correction). A constant
    segment has zero variance; skewness and kurtosis are defined as 0 there.
    """
    s = np.asarray(segment, dtype=float).ravel()
    if s.size < 1:
        raise ValueError("segment must have at least one sample")
    mu = s.mean()
    d = s - mu
    var = np.mean(d * d)
    if var == 0.0:
        return np.array([mu, 0.0, 0.0, 0.0])
    m3 = np.mean(d * d * d)
    m4 = np.mean(d * d * d * d)
    sd = np.sqrt(var)
    sd3 = sd**3
    var2 = var**2
    if sd3 == 0.0 or var2 == 0.0:  # denominator underflow: treat as constant
        return np.array([mu, var, 0.0, 0.0])
    return np.array([mu, var, m3 / sd3, m4 / var2])
