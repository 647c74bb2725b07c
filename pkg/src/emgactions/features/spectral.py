"""Fourier power spectra, spectral moments, and log-moment features."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Floor for every logarithm argument; keeps silent channels finite.
LOG_EPS = 1e-12

# Ordered index pairs (i, j) over moments 1..5 for the pairwise product
# features: i < j in lexicographic order, 10 pairs.
MOMENT_PAIRS = (
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
)

LMF_COUNT = 17


@dataclass
class SpectralMoments:
    """Moments g(0..6) of a power spectrum: g(i) = sqrt(sum_k k^i psi(k)).

    Nonnegative and nondecreasing in i, because the spectrum index k starts
    at 1 so k^(i+1) psi >= k^i psi termwise.
    """

    g: np.ndarray

    def __post_init__(self):
        self.g = np.asarray(self.g, dtype=float)


def power_spectrum(segment) -> np.ndarray:
    """Squared-magnitude spectrum psi(k) = |sum_l s(l) e^(-i 2 pi l k / L)|^2.

    Both the sample index l and the frequency index k run 1..L, so the DC
    term lands in the last bin psi(L) rather than the first.
    """
    s = np.asarray(segment, dtype=float).ravel()
    if s.size < 1:
        raise ValueError("segment must have at least one sample")
    # l starting at 1 multiplies the standard DFT by a unit phase and
    # rotates bin 0 to bin L; magnitudes are otherwise unchanged.
    return np.abs(np.roll(np.fft.fft(s), -1)) ** 2


def spectral_moments(psi) -> SpectralMoments:
    """Moments g(i) = sqrt(sum_{k=1..L} k^i psi(k)) for i = 0..6."""
    psi = np.asarray(psi, dtype=float).ravel()
    k = np.arange(1, psi.size + 1, dtype=float)
    g = np.empty(7)
    weights = np.ones_like(k)
    for i in range(7):
        g[i] = math.sqrt(float(np.dot(weights, psi)))
        weights *= k
    return SpectralMoments(g)


def _ln(x: float) -> float:
    return math.log(max(x, LOG_EPS))


def lmf_features(moments) -> np.ndarray:
    """17 log-moment features from spectral moments g(0..6).

    f1..f3: ln g(0), ln g(2), ln g(4).
    f4: ln g(0) - ln|g(0)-g(2)|/2 - ln|g(0)-g(4)|/2. The differences are
        nonpositive by moment monotonicity, so their absolute value is used.
    f5: ln g(2) - ln(g(0) g(4))/2.
    f6: ln g(0) - ln(g(1) g(3))/4.
    f7: ln g(0) - ln(g(2) g(6))/4.
    f8..f17: ln(g(i) g(j))/2 over MOMENT_PAIRS in order.

    Every log argument is floored at LOG_EPS, so the result is always finite.
    """
    g = moments.g if isinstance(moments, SpectralMoments) else np.asarray(moments, dtype=float)
    f = np.empty(LMF_COUNT)
    f[0] = _ln(g[0])
    f[1] = _ln(g[2])
    f[2] = _ln(g[4])
    f[3] = _ln(g[0]) - 0.5 * _ln(abs(g[0] - g[2])) - 0.5 * _ln(abs(g[0] - g[4]))
    f[4] = _ln(g[2]) - 0.5 * _ln(g[0] * g[4])
    f[5] = _ln(g[0]) - 0.25 * _ln(g[1] * g[3])
    f[6] = _ln(g[0]) - 0.25 * _ln(g[2] * g[6])
    for q, (i, j) in enumerate(MOMENT_PAIRS):
        f[7 + q] = 0.5 * _ln(g[i] * g[j])
    return f
