"""CSV import/export for feature matrices and the feature registry.

Floats are written with repr so a read-back matrix is bit-identical, and
rows use '\\n' line endings so repeated runs produce byte-identical files.
"""

from __future__ import annotations

import csv

import numpy as np

from emgactions.features.registry import FeatureRegistry

META_COLUMNS = ("subject_id", "trial_index", "label")


def write_feature_csv(path: str, X, y, subjects, trials, registry: FeatureRegistry) -> None:
    """Write one row per pattern: registry-named feature columns, then
    subject_id, trial_index, label."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != len(registry):
        raise ValueError(f"matrix shape {X.shape} does not match registry size {len(registry)}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(list(registry.names()) + list(META_COLUMNS))
        for row, label, subject, trial in zip(X, y, subjects, trials):
            writer.writerow([repr(float(v)) for v in row] + [int(subject), int(trial), int(label)])


def read_feature_csv(path: str):
    """Read a matrix written by write_feature_csv.

    Returns:
        (X, y, subjects, trials, names) with names covering the feature
        columns only.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or len(header) < len(META_COLUMNS) + 1:
            raise ValueError(f"{path}: missing or too-short header")
        if tuple(header[-3:]) != META_COLUMNS:
            raise ValueError(f"{path}: expected trailing columns {META_COLUMNS}")
        names = header[:-3]
        rows, labels, subjects, trials = [], [], [], []
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(f"{path}:{line_no}: expected {len(header)} fields, got {len(row)}")
            rows.append([float(v) for v in row[:-3]])
            subjects.append(int(row[-3]))
            trials.append(int(row[-2]))
            labels.append(int(row[-1]))
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return (
        np.array(rows, dtype=float),
        np.array(labels, dtype=int),
        np.array(subjects, dtype=int),
        np.array(trials, dtype=int),
        names,
    )


def write_registry_csv(path: str, registry: FeatureRegistry) -> None:
    """Write the registry as (index, modality, channel, name) rows.

    The channel column holds 'i-j' for pair features.
    """
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["index", "modality", "channel", "name"])
        for d in registry:
            channel = f"{d.pair[0]}-{d.pair[1]}" if d.pair is not None else str(d.channel)
            writer.writerow([d.index, d.modality, channel, d.name])
