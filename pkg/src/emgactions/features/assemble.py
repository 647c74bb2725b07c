"""Assembly of per-pattern feature vectors from the five modalities."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from emgactions.dataset import Pattern, segment_channel
from emgactions.features.autoregressive import ar_psd, band_powers, burg_ar
from emgactions.features.crosschannel import DEFAULT_PAIRS, compute_ics
from emgactions.features.localbinary import LBP_THRESHOLD, LBP_WINDOW, lbp_features
from emgactions.features.registry import FeatureRegistry, build_registry
from emgactions.features.spectral import LMF_COUNT, lmf_features, power_spectrum, spectral_moments
from emgactions.features.timedomain import TDS_NAMES, tds


@dataclass(frozen=True)
class FeatureConfig:
    """Extraction parameters.

    Attributes:
        window: segment length L; None means one segment spanning the trial.
        ar_order: autoregressive model order.
        psd_grid: AR spectrum grid size K (a multiple of n_bands).
        n_bands: number of spectral bands.
        lbp_window: LBP window length.
        lbp_threshold: LBP code threshold.
        pairs: ICS channel pairs (1-based).
    """

    window: int | None = None
    ar_order: int = 4
    psd_grid: int = 100
    n_bands: int = 10
    lbp_window: int = LBP_WINDOW
    lbp_threshold: int = LBP_THRESHOLD
    pairs: tuple = DEFAULT_PAIRS


@dataclass
class FeatureVector:
    """Assembled features for one pattern, plus its identifying metadata."""

    values: np.ndarray
    label: int
    subject_id: int = 0
    trial_index: int = 0

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)


def registry_for(config: FeatureConfig, channels: int = 8) -> FeatureRegistry:
    """Registry matching the layout produced by assemble_features."""
    return build_registry(
        channels=channels,
        pairs=config.pairs,
        n_bands=config.n_bands,
        lbp_threshold=config.lbp_threshold,
    )


def _channel_features(extract, segments, width):
    out = np.zeros(width)
    for seg in segments:
        out += extract(seg.values)
    return out / len(segments)


def assemble_features(pattern: Pattern, config: FeatureConfig = FeatureConfig()) -> FeatureVector:
    """Compute the full feature vector of one pattern.

    Blocks are concatenated as [TDS | ICS | LMF | SBP | LBP], channel-major
    within each single-channel block. When the window splits a trial into
    several segments, per-segment features are averaged per channel so the
    vector length is independent of the segment count. With 8 channels and
    the default configuration the vector has 32+12+136+80+16 = 276 entries.

    Raises:
        Extractor errors, annotated with the channel and modality.
    """
    window = config.window if config.window is not None else pattern.n_samples
    m = pattern.n_channels
    blocks = []

    def per_channel(modality, extract, width):
        cols = np.empty((m, width))
        for ch in range(m):
            segments = segment_channel(pattern.channels[ch], window, channel=ch + 1)
            try:
                cols[ch] = _channel_features(extract, segments, width)
            except Exception as exc:
                raise type(exc)(f"channel {ch + 1} {modality}: {exc}") from None
        return cols.ravel()

    blocks.append(per_channel("tds", tds, len(TDS_NAMES)))
    blocks.append(compute_ics(pattern, config.pairs, window=config.window))
    blocks.append(
        per_channel(
            "lmf",
            lambda s: lmf_features(spectral_moments(power_spectrum(s))),
            LMF_COUNT,
        )
    )
    blocks.append(
        per_channel(
            "sbp",
            lambda s: band_powers(ar_psd(burg_ar(s, config.ar_order), config.psd_grid), config.n_bands),
            config.n_bands,
        )
    )
    blocks.append(
        per_channel(
            "lbp",
            lambda s: lbp_features(s, config.lbp_window, config.lbp_threshold),
            2,
        )
    )
    return FeatureVector(
        values=np.concatenate(blocks),
        label=pattern.label,
        subject_id=pattern.subject_id,
        trial_index=pattern.trial_index,
    )


def extract_feature_matrix(patterns, config: FeatureConfig = FeatureConfig()):
    """Assemble features for a pattern sequence.

    Returns:
        (X, y, subjects, trials): X is (P, D) float, the rest are (P,) int
        arrays aligned with the pattern order.
    """
    vectors = [assemble_features(p, config) for p in patterns]
    X = np.vstack([v.values for v in vectors])
    y = np.array([v.label for v in vectors], dtype=int)
    subjects = np.array([v.subject_id for v in vectors], dtype=int)
    trials = np.array([v.trial_index for v in vectors], dtype=int)
    return X, y, subjects, trials
