"""Factors of the dataset-adaptive normalized metric and their composition.

The normalized metric rescales a base performance score (accuracy, 1 - MAPE,
or NMI) by three dataset-condition factors:

    normalized = min(1, base * f(d, n) * g(SNR) / h(imbalance))

where f boosts models trained with too few samples per feature, g rewards a
clean signal-to-noise ratio, and h penalizes class or cluster imbalance.
Everything here is a pure function; `evaluate` composes them per task kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .exceptions import (
    ConfigurationError,
    DegenerateDistributionError,
    DomainError,
    ShapeError,
)

__all__ = [
    "TaskKind",
    "EvaluationBundle",
    "MetricBreakdown",
    "dimensionality_factor",
    "class_imbalance_ratio",
    "imbalance_adjustment_binary",
    "average_class_imbalance_ratio",
    "imbalance_adjustment_multiclass",
    "cluster_imbalance_adjustment",
    "snr_regression",
    "snr_binary",
    "snr_multiclass",
    "normalize_snr",
    "snr_adjustment",
    "compose_normalized_metric",
    "evaluate",
]

# Samples-per-feature ratio below which data counts as scarce; n* = RATIO * d
# is the neutral point of the dimensionality factor.
SAMPLES_PER_FEATURE = 20


class TaskKind(Enum):
    """Task family; selects the SNR formula and the imbalance formula."""

    BINARY_CLASSIFICATION = "binary"
    MULTICLASS_CLASSIFICATION = "multiclass"
    REGRESSION = "regression"
    CLUSTERING = "clustering"

    @property
    def is_classification(self) -> bool:
        return self in (TaskKind.BINARY_CLASSIFICATION, TaskKind.MULTICLASS_CLASSIFICATION)

    @property
    def has_class_targets(self) -> bool:
        """True when targets are class indices rather than real values."""
        return self is not TaskKind.REGRESSION


@dataclass
class EvaluationBundle:
    """Everything one metric evaluation needs.

    y_true / y_pred hold class indices for classification and clustering
    (clustering y_pred holds cluster ids) and real values for regression.
    y_prob is the per-sample probability of the predicted class (binary) or
    the per-sample probability vector over all classes (multiclass).
    class_sizes are the per-class (or per-cluster) training-split counts the
    imbalance factor is computed from; d excludes the target column.
    """

    task: TaskKind
    y_true: Sequence
    y_pred: Sequence
    d: int
    n_train: int
    base_metric: float
    y_prob: Optional[Sequence] = None
    class_sizes: Optional[Sequence[int]] = None


@dataclass(frozen=True)
class MetricBreakdown:
    """Base metric, every factor, and the final capped normalized metric.

    snr_db may be +/-inf (zero noise / zero signal); imbalance_ratio is the
    majority/minority ratio (>= 1) for binary, the mean class-to-majority
    ratio (in (0, 1]) for multiclass and clustering, and 1.0 for regression.
    """

    base: float
    dim_factor_f: float
    snr_db: float
    snr_normalized: float
    snr_factor_g: float
    imbalance_ratio: float
    imbalance_factor_h: float
    normalized: float


def dimensionality_factor(d: int, n: int) -> float:
    """Boost factor for feature dimensionality relative to sample count.

    Computes 1 + max(0, sigmoid(d / (0.05 * n) - 1) - 0.5).  The ratio
    d / (0.05 * n) equals 1 when there are exactly 20 samples per feature;
    at or below that point the factor is exactly 1 (no boost, no penalty),
    above it the factor grows toward, but never reaches, 1.5.
    """
    if d <= 0 or n <= 0:
        raise DomainError(f"d and n must be positive, got d={d}, n={n}")
    ratio = d / (0.05 * n)
    centered = 1.0 / (1.0 + math.exp(-(ratio - 1.0))) - 0.5
    return 1.0 + max(0.0, centered)


def class_imbalance_ratio(class_sizes: Sequence[int]) -> float:
    """Majority-class count over minority-class count for two classes."""
    sizes = list(class_sizes)
    if len(sizes) != 2:
        raise DomainError(f"binary imbalance ratio needs exactly 2 class sizes, got {len(sizes)}")
    if min(sizes) < 1:
        raise DegenerateDistributionError(f"every class needs at least one sample, got {sizes}")
    return max(sizes) / min(sizes)


def imbalance_adjustment_binary(ci: float) -> float:
    """Binary imbalance penalty 1 + log10(CI); 1 at perfect balance."""
    if ci < 1.0:
        raise DomainError(f"CI must be >= 1 (majority/minority), got {ci}")
    return 1.0 + math.log10(ci)


def average_class_imbalance_ratio(class_sizes: Sequence[int]) -> float:
    """Mean over classes of (class size / majority size); 1 iff balanced."""
    sizes = np.asarray(list(class_sizes), dtype=float)
    if sizes.size < 2:
        raise DomainError(f"ACIR needs at least 2 classes, got {sizes.size}")
    if sizes.min() <= 0:
        raise DegenerateDistributionError(f"every class needs at least one sample, got {class_sizes}")
    return float(np.mean(sizes / sizes.max()))


def imbalance_adjustment_multiclass(acir: float) -> float:
    """Multiclass imbalance penalty 1 + log10(1 / ACIR); 1 at perfect balance."""
    if not 0.0 < acir <= 1.0:
        raise DomainError(f"ACIR must be in (0, 1], got {acir}")
    return 1.0 + math.log10(1.0 / acir)


def cluster_imbalance_adjustment(cluster_sizes: Sequence[int]) -> float:
    """Imbalance penalty over cluster sizes.

    Computes the mean cluster-to-majority ratio and applies the same
    1 + log10(1/ratio) form as the multiclass penalty, so clusterings with
    very unequal cluster sizes are penalized (h > 1) and balanced ones are
    left alone (h = 1).  Raises if any cluster is empty; drop empty clusters
    beforehand if that is the intended policy.
    """
    return imbalance_adjustment_multiclass(average_class_imbalance_ratio(cluster_sizes))


def snr_regression(y_true: Sequence[float], y_pred: Sequence[float]) -> float:
    """Regression signal-to-noise ratio in dB.

    10 * log10(sum(y_true^2) / sum((y_pred - y_true)^2)); +inf when the
    residual sum is zero (perfect prediction).
    """
    yt = np.asarray(y_true, dtype=float)
    yp = np.asarray(y_pred, dtype=float)
    if yt.shape != yp.shape:
        raise ShapeError(f"y_true and y_pred lengths differ: {yt.shape} vs {yp.shape}")
    if yt.size == 0:
        raise DomainError("cannot compute SNR of empty sequences")
    signal = float(np.sum(yt * yt))
    noise = float(np.sum((yp - yt) ** 2))
    if signal <= 0.0:
        raise DomainError("all-zero y_true leaves the signal term undefined")
    if noise == 0.0:
        return math.inf
    return 10.0 * math.log10(signal / noise)


def snr_binary(y_true: Sequence, y_pred: Sequence, y_prob: Sequence[float]) -> float:
    """Binary classification signal-to-noise ratio in dB.

    Signal is the count of correct predictions; noise is sum((1 - p)^2) over
    every sample, where p is the predicted probability of the predicted
    class.  Returns +inf for zero noise with nonzero signal and -inf for
    zero signal with nonzero noise.
    """
    yt = np.asarray(y_true)
    yp = np.asarray(y_pred)
    prob = np.asarray(y_prob, dtype=float)
    if not (yt.shape == yp.shape == prob.shape):
        raise ShapeError(
            f"y_true, y_pred, y_prob lengths differ: {yt.shape}, {yp.shape}, {prob.shape}"
        )
    if yt.size == 0:
        raise DomainError("cannot compute SNR of empty sequences")
    if prob.min() < 0.0 or prob.max() > 1.0:
        raise DomainError("probabilities must lie in [0, 1]")
    signal = float(np.sum(yt == yp))
    noise = float(np.sum((1.0 - prob) ** 2))
    if signal == 0.0 and noise == 0.0:
        raise DomainError("signal and noise are both zero; SNR undefined")
    if noise == 0.0:
        return math.inf
    if signal == 0.0:
        return -math.inf
    return 10.0 * math.log10(signal / noise)


def snr_multiclass(y_true: Sequence[int], prob_matrix: Sequence[Sequence[float]]) -> float:
    """Multiclass signal-to-noise ratio in dB from probability vectors.

    Predictions are the argmax of each probability vector (ties go to the
    lowest class index).  Signal is the sum of squared diagonal entries of
    the resulting confusion matrix (squared true-positive counts); noise is
    the total squared distance between each probability vector and the
    one-hot vector of its true class.  Returns +inf when noise is zero.
    """
    yt = np.asarray(y_true, dtype=int)
    probs = np.asarray(prob_matrix, dtype=float)
    if probs.ndim != 2:
        raise ShapeError(f"prob_matrix must be 2-D (samples x classes), got ndim={probs.ndim}")
    if yt.shape[0] != probs.shape[0]:
        raise ShapeError(f"y_true has {yt.shape[0]} samples but prob_matrix has {probs.shape[0]}")
    if yt.size == 0:
        raise DomainError("cannot compute SNR of empty sequences")
    n_classes = probs.shape[1]
    if probs.min() < 0.0:
        raise DomainError("probabilities must be nonnegative")
    if not np.allclose(probs.sum(axis=1), 1.0, atol=1e-6, rtol=0.0):
        raise DomainError("every probability vector must sum to 1 within 1e-6")
    if yt.min() < 0 or yt.max() >= n_classes:
        raise DomainError(f"labels must lie in [0, {n_classes}), got range [{yt.min()}, {yt.max()}]")

    predictions = np.argmax(probs, axis=1)
    diagonal_counts = np.bincount(yt[predictions == yt], minlength=n_classes)
    signal = float(np.sum(diagonal_counts.astype(float) ** 2))

    one_hot = np.zeros_like(probs)
    one_hot[np.arange(yt.shape[0]), yt] = 1.0
    noise = float(np.sum((probs - one_hot) ** 2))

    if signal == 0.0 and noise == 0.0:
        raise DomainError("signal and noise are both zero; SNR undefined")
    if noise == 0.0:
        return math.inf
    if signal == 0.0:
        return -math.inf
    return 10.0 * math.log10(signal / noise)


def normalize_snr(x: float) -> float:
    """Map an SNR in dB onto the [0, 0.5] quality scale.

    Piecewise-linear over the quality bands (<10 dB no signal, 10-15 very
    low, 15-25 low, 25-40 very good, >40 excellent):

        0.125 + 0.125 * (x - 0) / 10   for  0 <= x < 10
        0.25  + 0.125 * (x - 10) / 5   for 10 <= x < 15
        0.375 + 0.125 * (x - 15) / 10  for 15 <= x < 25
        0.5   + 0.125 * (x - 25) / 15  for 25 <= x < 40
        0.5                            for x >= 40

    Negative inputs (and -inf) map to 0; the result is clamped to [0, 0.5]
    because the fourth band as written would exceed 0.5.
    """
    if math.isnan(x):
        raise DomainError("SNR is NaN")
    if x < 0.0:
        return 0.0
    if x == math.inf:
        return 0.5
    if x < 10.0:
        value = 0.125 + 0.125 * (x - 0.0) / 10.0
    elif x < 15.0:
        value = 0.25 + 0.125 * (x - 10.0) / 5.0
    elif x < 25.0:
        value = 0.375 + 0.125 * (x - 15.0) / 10.0
    elif x < 40.0:
        value = 0.5 + 0.125 * (x - 25.0) / 15.0
    else:
        value = 0.5
    return min(0.5, max(0.0, value))


def snr_adjustment(snr_normalized: float) -> float:
    """SNR factor g = 1 + normalized SNR, on [1, 1.5]."""
    if not 0.0 <= snr_normalized <= 0.5:
        raise DomainError(f"normalized SNR must be in [0, 0.5], got {snr_normalized}")
    return 1.0 + snr_normalized


def compose_normalized_metric(base: float, f: float, g: float, h: float) -> float:
    """Final composition min(1, base * f * g / h)."""
    if h < 1.0:
        raise DomainError(f"imbalance factor h must be >= 1, got {h}")
    return min(1.0, base * f * g / h)


def _clusters_to_majority_labels(
    y_true: np.ndarray, assignments: np.ndarray, n_classes: int
) -> np.ndarray:
    """Relabel each cluster as the majority true class among its members."""
    mapped = np.empty_like(assignments)
    for cluster in np.unique(assignments):
        members = assignments == cluster
        counts = np.bincount(y_true[members], minlength=n_classes)
        mapped[members] = int(np.argmax(counts))
    return mapped


def evaluate(bundle: EvaluationBundle) -> MetricBreakdown:
    """Compute the full normalized-metric breakdown for one evaluation.

    Dispatches on the task kind: binary uses the correct-count SNR and the
    majority/minority penalty; multiclass uses the confusion-based SNR and
    the mean class-to-majority penalty; regression uses the residual SNR
    with no imbalance penalty; clustering maps each cluster to its majority
    true label, scores the mapping with the multiclass SNR on one-hot
    vectors, and penalizes uneven cluster sizes.
    """
    y_true = np.asarray(bundle.y_true)
    y_pred = np.asarray(bundle.y_pred)
    if y_true.shape != y_pred.shape or y_true.ndim != 1:
        raise ShapeError(f"y_true and y_pred must be 1-D and equal length, got {y_true.shape} vs {y_pred.shape}")
    if y_true.size == 0:
        raise DomainError("cannot evaluate an empty prediction set")
    if bundle.d < 1 or bundle.n_train < 1:
        raise DomainError(f"d and n_train must be >= 1, got d={bundle.d}, n_train={bundle.n_train}")
    if not 0.0 <= bundle.base_metric <= 1.0:
        raise DomainError(f"base_metric must be in [0, 1], got {bundle.base_metric}")

    task = bundle.task
    f = dimensionality_factor(bundle.d, bundle.n_train)

    if task is TaskKind.BINARY_CLASSIFICATION:
        if bundle.y_prob is None:
            raise ConfigurationError("binary evaluation needs per-sample predicted-class probabilities")
        if bundle.class_sizes is None:
            raise ConfigurationError("binary evaluation needs training class sizes for the imbalance ratio")
        snr_db = snr_binary(y_true, y_pred, bundle.y_prob)
        ratio = class_imbalance_ratio(bundle.class_sizes)
        h = imbalance_adjustment_binary(ratio)
    elif task is TaskKind.MULTICLASS_CLASSIFICATION:
        if bundle.y_prob is None:
            raise ConfigurationError("multiclass evaluation needs per-sample probability vectors")
        if bundle.class_sizes is None:
            raise ConfigurationError("multiclass evaluation needs training class sizes for the imbalance ratio")
        snr_db = snr_multiclass(y_true, bundle.y_prob)
        ratio = average_class_imbalance_ratio(bundle.class_sizes)
        h = imbalance_adjustment_multiclass(ratio)
    elif task is TaskKind.REGRESSION:
        snr_db = snr_regression(y_true, y_pred)
        ratio = 1.0
        h = 1.0
    elif task is TaskKind.CLUSTERING:
        if bundle.class_sizes is None:
            raise ConfigurationError("clustering evaluation needs training cluster sizes for the imbalance ratio")
        y_true_int = y_true.astype(int)
        n_classes = int(y_true_int.max()) + 1
        if n_classes < 2:
            raise DegenerateDistributionError("clustering evaluation needs at least 2 true classes")
        mapped = _clusters_to_majority_labels(y_true_int, y_pred.astype(int), n_classes)
        one_hot = np.zeros((y_true_int.size, n_classes))
        one_hot[np.arange(y_true_int.size), mapped] = 1.0
        snr_db = snr_multiclass(y_true_int, one_hot)
        ratio = average_class_imbalance_ratio(bundle.class_sizes)
        h = imbalance_adjustment_multiclass(ratio)
    else:  # pragma: no cover - enum is exhaustive
        raise ConfigurationError(f"unknown task kind {task!r}")

    snr_norm = normalize_snr(snr_db)
    g = snr_adjustment(snr_norm)
    normalized = compose_normalized_metric(bundle.base_metric, f, g, h)
    return MetricBreakdown(
        base=bundle.base_metric,
        dim_factor_f=f,
        snr_db=snr_db,
        snr_normalized=snr_norm,
        snr_factor_g=g,
        imbalance_ratio=ratio,
        imbalance_factor_h=h,
        normalized=normalized,
    )
