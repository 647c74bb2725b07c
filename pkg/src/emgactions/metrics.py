"""Multiclass evaluation metrics on confusion matrices."""

from __future__ import annotations

import numpy as np


class EmptyMatrixError(ValueError):
    """Metrics need at least one counted prediction."""


def confusion_matrix(y_true, y_pred, n_classes: int | None = None) -> np.ndarray:
    """Count (true, predicted) label pairs into a C x C integer matrix.

    Rows are true labels, columns predictions, both 1-based ids mapped to
    0-based positions.
    """
    y_true = np.asarray(y_true, dtype=int)
    y_pred = np.asarray(y_pred, dtype=int)
    if y_true.shape != y_pred.shape:
        raise ValueError("label arrays must have equal length")
    if y_true.size and (y_true.min() < 1 or y_pred.min() < 1):
        raise ValueError("labels must be >= 1")
    C = int(n_classes) if n_classes is not None else int(max(y_true.max(), y_pred.max()))
    if y_true.size and max(y_true.max(), y_pred.max()) > C:
        raise ValueError(f"labels exceed n_classes={C}")
    cm = np.zeros((C, C), dtype=int)
    np.add.at(cm, (y_true - 1, y_pred - 1), 1)
    return cm


def accuracy(cm) -> float:
    """Overall accuracy: trace / total.

    Raises:
        EmptyMatrixError: total count is zero.
    """
    cm = np.asarray(cm)
    total = cm.sum()
    if total <= 0:
        raise EmptyMatrixError("confusion matrix has no counts")
    return float(np.trace(cm) / total)


def kappa(cm) -> float:
    """Cohen's kappa: (p_o - p_e) / (1 - p_e).

    p_o is the observed agreement (trace / total) and p_e the chance
    agreement from the row/column marginals. p_e = 1 forces all mass into a
    single diagonal cell, so 1.0 is returned in that degenerate case.

    Raises:
        EmptyMatrixError: total count is zero.
    """
    cm = np.asarray(cm, dtype=float)
    total = cm.sum()
    if total <= 0:
        raise EmptyMatrixError("confusion matrix has no counts")
    p_o = np.trace(cm) / total
    p_e = float(np.dot(cm.sum(axis=1), cm.sum(axis=0))) / (total * total)
    if p_e >= 1.0:
        return 1.0
    return float((p_o - p_e) / (1.0 - p_e))
