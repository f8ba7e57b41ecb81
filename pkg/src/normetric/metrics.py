"""Base performance metrics: accuracy, 1 - MAPE, NMI, and the confusion matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import DomainError, ShapeError

__all__ = ["ConfusionMatrix", "accuracy", "mape_score", "confusion_matrix", "nmi"]


@dataclass(frozen=True)
class ConfusionMatrix:
    """Count grid with rows = true class, columns = predicted class."""

    counts: np.ndarray

    @property
    def n_classes(self) -> int:
        return self.counts.shape[0]

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def true_positives(self) -> np.ndarray:
        """Per-class correct counts (the diagonal)."""
        return np.diagonal(self.counts)


def _as_equal_length(y_true: Sequence, y_pred: Sequence) -> tuple[np.ndarray, np.ndarray]:
    yt = np.asarray(y_true)
    yp = np.asarray(y_pred)
    if yt.shape != yp.shape or yt.ndim != 1:
        raise ShapeError(f"sequences must be 1-D and equal length, got {yt.shape} vs {yp.shape}")
    if yt.size == 0:
        raise DomainError("metric undefined on empty sequences")
    return yt, yp


def accuracy(y_true: Sequence, y_pred: Sequence) -> float:
    """Fraction of predictions that match the true labels."""
    yt, yp = _as_equal_length(y_true, y_pred)
    return float(np.mean(yt == yp))


def mape_score(y_true: Sequence[float], y_pred: Sequence[float]) -> float:
    """1 - MAPE, floored at 0 so the score stays in [0, 1].

    MAPE is mean(|y_pred - y_true| / |y_true|); it can exceed 1 on bad
    predictions, hence the floor.  Zero true values are rejected.
    """
    yt, yp = _as_equal_length(y_true, y_pred)
    yt = yt.astype(float)
    yp = yp.astype(float)
    if np.any(yt == 0.0):
        raise DomainError("MAPE is undefined when y_true contains zeros")
    mape = float(np.mean(np.abs(yp - yt) / np.abs(yt)))
    return max(0.0, 1.0 - mape)


def confusion_matrix(y_true: Sequence[int], y_pred: Sequence[int], n_classes: int) -> ConfusionMatrix:
    """Count matrix counts[i][j] = number of samples with true i predicted j."""
    yt, yp = _as_equal_length(y_true, y_pred)
    yt = yt.astype(int)
    yp = yp.astype(int)
    if n_classes < 2:
        raise DomainError(f"confusion matrix needs at least 2 classes, got {n_classes}")
    for name, labels in (("y_true", yt), ("y_pred", yp)):
        if labels.min() < 0 or labels.max() >= n_classes:
            raise DomainError(f"{name} labels must lie in [0, {n_classes})")
    counts = np.zeros((n_classes, n_classes), dtype=int)
    np.add.at(counts, (yt, yp), 1)
    return ConfusionMatrix(counts=counts)


def _entropy(counts: np.ndarray, n: int) -> float:
    p = counts[counts > 0] / n
    return float(-np.sum(p * np.log(p)))


def nmi(labels_a: Sequence[int], labels_b: Sequence[int]) -> float:
    """Normalized mutual information between two labelings, in [0, 1].

    Mutual information divided by the arithmetic mean of the two marginal
    entropies; symmetric and invariant under relabeling either side.  Two
    single-cluster partitions align perfectly (1.0); a single-cluster
    partition against a split one carries no information (0.0).
    """
    la, lb = _as_equal_length(labels_a, labels_b)
    n = la.size
    _, a_idx = np.unique(la, return_inverse=True)
    _, b_idx = np.unique(lb, return_inverse=True)
    n_a = a_idx.max() + 1
    n_b = b_idx.max() + 1

    joint = np.zeros((n_a, n_b), dtype=int)
    np.add.at(joint, (a_idx, b_idx), 1)
    row = joint.sum(axis=1)
    col = joint.sum(axis=0)

    h_a = _entropy(row, n)
    h_b = _entropy(col, n)
    if h_a == 0.0 and h_b == 0.0:
        return 1.0
    if h_a == 0.0 or h_b == 0.0:
        return 0.0

    nz = joint > 0
    p_joint = joint[nz] / n
    outer = np.outer(row, col)[nz] / (n * n)
    mutual_info = float(np.sum(p_joint * np.log(p_joint / outer)))
    if mutual_info < 0.0:  # floating-point dust on independent labelings
        mutual_info = 0.0
    value = mutual_info / ((h_a + h_b) / 2.0)
    return min(1.0, max(0.0, value))
