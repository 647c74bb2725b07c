"""Probabilistic neural network: Parzen-window kernel density classifier.

The model memorizes every (z-scored) training vector. A class score is the
prior times the average Gaussian kernel response of that class's exemplars;
the predicted label is the arg max, with ties broken toward the smallest
class id. There is no iterative training, so model size grows linearly with
the training set.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

import numpy as np

DEFAULT_SIGMA_GRID = (0.05, 0.1, 0.2, 0.3, 0.5, 0.8, 1.0, 1.5)

MODEL_FORMAT = "pnn-model-v1"


class NonPositiveSigmaError(ValueError):
    """Kernel width must be strictly positive."""


class DimensionMismatchError(ValueError):
    """Input dimension differs from the model's feature dimension."""


class EmptyGridError(ValueError):
    """Sigma selection needs a nonempty candidate grid."""


class EmptyClassWarning(UserWarning):
    """A label in 1..C has no training exemplar; it can never be predicted."""


@dataclass
class Normalizer:
    """Per-feature z-scoring with statistics from the training data only.

    Zero-variance features keep scale 1, so they map to exactly 0.
    """

    mean: np.ndarray
    scale: np.ndarray

    def __post_init__(self):
        self.mean = np.asarray(self.mean, dtype=float)
        self.scale = np.asarray(self.scale, dtype=float)

    @classmethod
    def fit(cls, X) -> "Normalizer":
        X = np.asarray(X, dtype=float)
        mean = X.mean(axis=0)
        scale = X.std(axis=0)
        scale = np.where(scale == 0.0, 1.0, scale)
        return cls(mean, scale)

    def transform(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        return (X - self.mean) / self.scale


@dataclass(frozen=True)
class PnnConfig:
    """How to train the classifier inside an evaluation fold.

    sigma fixes the kernel width; when it is None the width is chosen from
    sigma_grid by internal cross-validation on the training split.
    """

    sigma: float | None = None
    sigma_grid: tuple = DEFAULT_SIGMA_GRID
    selection_folds: int = 5
    selection_seed: int = 0


@dataclass
class PnnModel:
    """Fitted classifier state.

    Attributes:
        normalizer: training-split z-scoring statistics.
        class_ids: ascending class ids that have exemplars.
        exemplars: normalized training vectors, one array per class id.
        sigma: Gaussian kernel width (> 0).
        priors: prior probability per class id in 1..n_classes, summing to 1.
        n_classes: label range size C.
    """

    normalizer: Normalizer
    class_ids: np.ndarray
    exemplars: list = field(default_factory=list)
    sigma: float = 1.0
    priors: np.ndarray = None
    n_classes: int = 0

    def __post_init__(self):
        self.class_ids = np.asarray(self.class_ids, dtype=int)
        self.priors = np.asarray(self.priors, dtype=float)

    @property
    def n_features(self) -> int:
        return self.normalizer.mean.size

    def predict(self, x):
        """Classify one vector; returns (label, posterior over 1..n_classes)."""
        labels, posteriors = self.predict_batch(np.asarray(x, dtype=float).reshape(1, -1))
        return int(labels[0]), posteriors[0]

    def predict_batch(self, X):
        """Classify rows of X; returns (labels (n,), posteriors (n, C)).

        Scores are prior_c * mean_i exp(-||x - x_i||^2 / (2 sigma^2)) on
        normalized coordinates. Exponents are shifted by their per-row
        maximum before exponentiation; the common factor cancels in the
        normalization, so posteriors are unchanged while tiny sigmas stay
        clear of underflow. If every score still underflows to 0 the
        posterior falls back to uniform (label = smallest id).
        """
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.n_features:
            raise DimensionMismatchError(
                f"expected {self.n_features} features, got shape {X.shape}"
            )
        Xn = self.normalizer.transform(X)
        n = Xn.shape[0]
        inv = -1.0 / (2.0 * self.sigma * self.sigma)
        exponents = []
        for E in self.exemplars:
            d2 = (
                np.sum(Xn * Xn, axis=1, keepdims=True)
                + np.sum(E * E, axis=1)[np.newaxis, :]
                - 2.0 * Xn @ E.T
            )
            np.maximum(d2, 0.0, out=d2)
            exponents.append(d2 * inv)
        shift = np.max(
            [e.max(axis=1) for e in exponents],
            axis=0,
        )
        scores = np.zeros((n, self.n_classes))
        for cid, expo in zip(self.class_ids, exponents):
            kernel_mean = np.exp(expo - shift[:, np.newaxis]).mean(axis=1)
            scores[:, cid - 1] = self.priors[cid - 1] * kernel_mean
        totals = scores.sum(axis=1)
        posteriors = np.full((n, self.n_classes), 1.0 / self.n_classes)
        ok = totals > 0.0
        posteriors[ok] = scores[ok] / totals[ok, np.newaxis]
        labels = np.where(ok, np.argmax(scores, axis=1) + 1, 1)
        return labels.astype(int), posteriors


def fit_pnn(X, y, sigma: float, priors=None, n_classes: int | None = None) -> PnnModel:
    """Store normalized exemplars grouped by class.

    Args:
        X: (P, D) training matrix, nonempty.
        y: labels in 1..C.
        sigma: kernel width > 0.
        priors: per-class priors over 1..C; default uniform.
        n_classes: C; default max(y).

    Raises:
        NonPositiveSigmaError: sigma <= 0.

    Warns:
        EmptyClassWarning: a label in 1..C has no exemplar.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if X.ndim != 2 or X.shape[0] < 1:
        raise ValueError("training matrix must be 2-d and nonempty")
    if X.shape[0] != y.shape[0]:
        raise ValueError("X and y lengths differ")
    if sigma <= 0.0:
        raise NonPositiveSigmaError(f"sigma must be > 0, got {sigma}")
    if np.any(y < 1):
        raise ValueError("labels must be >= 1")
    C = int(n_classes) if n_classes is not None else int(y.max())
    if y.max() > C:
        raise ValueError(f"label {y.max()} exceeds n_classes={C}")
    missing = sorted(set(range(1, C + 1)) - set(int(v) for v in y))
    if missing:
        warnings.warn(
            f"classes without exemplars can never be predicted: {missing}",
            EmptyClassWarning,
            stacklevel=2,
        )
    if priors is None:
        priors = np.full(C, 1.0 / C)
    else:
        priors = np.asarray(priors, dtype=float)
        if priors.size != C:
            raise ValueError(f"priors length {priors.size} != n_classes {C}")
    normalizer = Normalizer.fit(X)
    Xn = normalizer.transform(X)
    class_ids = np.unique(y)
    exemplars = [Xn[y == cid] for cid in class_ids]
    return PnnModel(
        normalizer=normalizer,
        class_ids=class_ids,
        exemplars=exemplars,
        sigma=float(sigma),
        priors=priors,
        n_classes=C,
    )


def _round_robin_folds(y: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    """Stratified fold assignment: shuffle, then deal each class round-robin."""
    order = rng.permutation(y.size)
    assignment = np.empty(y.size, dtype=int)
    for cid in np.unique(y[order]):
        members = order[y[order] == cid]
        assignment[members] = np.arange(members.size) % k
    return assignment


def select_sigma(X, y, grid=DEFAULT_SIGMA_GRID, folds: int = 5, seed: int = 0) -> float:
    """Pick the kernel width maximizing internal cross-validated accuracy.

    Candidates are tried in ascending order and only strict improvements are
    kept, so ties resolve toward the smallest sigma. Runs entirely on the
    given data; callers pass their training split only.

    Raises:
        EmptyGridError: no candidates.
    """
    grid = sorted(float(s) for s in grid)
    if not grid:
        raise EmptyGridError("sigma grid is empty")
    if folds < 2:
        raise ValueError("folds must be >= 2")
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    rng = np.random.default_rng(seed)
    assignment = _round_robin_folds(y, folds, rng)
    best_sigma = grid[0]
    best_score = -1.0
    for sigma in grid:
        correct = 0
        total = 0
        for f in range(folds):
            test = assignment == f
            if not np.any(test) or np.all(test):
                continue
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", EmptyClassWarning)
                model = fit_pnn(X[~test], y[~test], sigma, n_classes=int(y.max()))
            labels, _ = model.predict_batch(X[test])
            correct += int(np.sum(labels == y[test]))
            total += int(np.sum(test))
        score = correct / total if total else 0.0
        if score > best_score:
            best_score = score
            best_sigma = sigma
    return best_sigma


def save_model(model: PnnModel, path: str) -> None:
    """Serialize a model to a versioned JSON file.

    All floats are emitted with repr, so load_model(save_model(m)) restores
    bit-identical values.
    """
    payload = {
        "format": MODEL_FORMAT,
        "sigma": model.sigma,
        "n_classes": model.n_classes,
        "priors": model.priors.tolist(),
        "normalizer": {
            "mean": model.normalizer.mean.tolist(),
            "scale": model.normalizer.scale.tolist(),
        },
        "classes": [
            {"id": int(cid), "exemplars": E.tolist()}
            for cid, E in zip(model.class_ids, model.exemplars)
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True)
        fh.write("\n")


def load_model(path: str) -> PnnModel:
    """Restore a model written by save_model."""
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("format") != MODEL_FORMAT:
        raise ValueError(f"unsupported model format: {payload.get('format')!r}")
    normalizer = Normalizer(
        mean=np.array(payload["normalizer"]["mean"], dtype=float),
        scale=np.array(payload["normalizer"]["scale"], dtype=float),
    )
    classes = payload["classes"]
    return PnnModel(
        normalizer=normalizer,
        class_ids=np.array([c["id"] for c in classes], dtype=int),
        exemplars=[np.array(c["exemplars"], dtype=float) for c in classes],
        sigma=float(payload["sigma"]),
        priors=np.array(payload["priors"], dtype=float),
        n_classes=int(payload["n_classes"]),
    )
