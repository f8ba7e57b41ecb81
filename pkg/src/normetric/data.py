"""Dataset ingestion, deterministic splitting, size schedules, and synthetic expansion."""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .exceptions import DataError, DomainError
from .factors import TaskKind

__all__ = [
    "Dataset",
    "SampleSchedule",
    "load_csv",
    "save_csv",
    "split",
    "schedule",
    "synthetic_expand",
]


@dataclass
class Dataset:
    """Column-labeled tabular data with a designated target.

    Features are a dense float matrix with no missing values; class targets
    (classification and clustering ground truth) are contiguous integers
    starting at 0, regression targets are floats.
    """

    feature_names: list[str]
    features: np.ndarray  # (n, d)
    target: np.ndarray  # (n,)
    task: TaskKind
    target_name: str = "target"
    n_dropped: int = 0  # rows discarded during ingestion

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def d(self) -> int:
        return self.features.shape[1]

    def take(self, indices: np.ndarray) -> "Dataset":
        """Row subset preserving all metadata."""
        return replace(
            self, features=self.features[indices], target=self.target[indices], n_dropped=0
        )


@dataclass(frozen=True)
class SampleSchedule:
    """Increasing training sizes start, start+step, ..., capped at stop."""

    start: int
    stop: int
    step: int
    sizes: tuple[int, ...] = field(default=())

    @property
    def max_size(self) -> int:
        return self.sizes[-1]


def schedule(start: int, stop: int, step: int) -> SampleSchedule:
    """Arithmetic size sequence inclusive of start and capped at stop."""
    if start < 1 or stop < start or step < 1:
        raise DomainError(f"need 1 <= start <= stop and step >= 1, got ({start}, {stop}, {step})")
    return SampleSchedule(start=start, stop=stop, step=step, sizes=tuple(range(start, stop + 1, step)))


def _parse_finite(cell: str) -> Optional[float]:
    try:
        value = float(cell)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


def load_csv(path: str, target_column: str, task: TaskKind) -> Dataset:
    """Ingest a CSV with a header row into a Dataset.

    A column counts as numeric when more than half of its cells parse as
    finite floats; other columns are categorical and label-encoded in first-
    appearance order.  Rows with the wrong field count, an empty cell, or an
    unparseable cell in a numeric column are dropped and counted in
    n_dropped.  Classification and clustering targets are re-indexed to
    0..C-1 in first-appearance order; regression targets must be numeric.
    """
    if not os.path.isfile(path):
        raise DataError(f"no such file: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path} is empty (no header row)") from None
        raw_rows = list(reader)

    if target_column not in header:
        raise DataError(f"target column {target_column!r} not in header {header}")
    target_idx = len(header) - 1 - header[::-1].index(target_column)
    n_columns = len(header)

    rows = [r for r in raw_rows if len(r) == n_columns]
    dropped = len(raw_rows) - len(rows)

    parsed = [[_parse_finite(cell) for cell in row] for row in rows]
    numeric = []
    for col in range(n_columns):
        ok = sum(1 for row in parsed if row[col] is not None)
        numeric.append(2 * ok > len(rows))

    keep: list[int] = []
    for i, row in enumerate(rows):
        usable = True
        for col in range(n_columns):
            cell = row[col]
            if col == target_idx and task.has_class_targets:
                if cell == "":
                    usable = False
            elif numeric[col] or (col == target_idx and task is TaskKind.REGRESSION):
                if parsed[i][col] is None:
                    usable = False
            elif cell == "":
                usable = False
            if not usable:
                break
        if usable:
            keep.append(i)
    dropped += len(rows) - len(keep)
    if not keep:
        raise DataError(f"{path} has no usable data rows ({dropped} dropped)")

    feature_cols = [c for c in range(n_columns) if c != target_idx]
    encodings: dict[int, dict[str, int]] = {c: {} for c in range(n_columns) if not numeric[c]}

    def encode(col: int, cell: str) -> float:
        codes = encodings[col]
        if cell not in codes:
            codes[cell] = len(codes)
        return float(codes[cell])

    features = np.empty((len(keep), len(feature_cols)))
    for out_row, i in enumerate(keep):
        for out_col, col in enumerate(feature_cols):
            value = parsed[i][col]
            features[out_row, out_col] = value if numeric[col] else encode(col, rows[i][col])

    if task.has_class_targets:
        labels: dict[str, int] = {}
        target = np.empty(len(keep), dtype=int)
        for out_row, i in enumerate(keep):
            cell = rows[i][target_idx]
            if cell not in labels:
                labels[cell] = len(labels)
            target[out_row] = labels[cell]
    else:
        target = np.array([parsed[i][target_idx] for i in keep], dtype=float)

    return Dataset(
        feature_names=[header[c] for c in feature_cols],
        features=features,
        target=target,
        task=task,
        target_name=header[target_idx],
        n_dropped=dropped,
    )


def save_csv(ds: Dataset, path: str) -> None:
    """Write a Dataset back out in the ingestion dialect (header + rows)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(ds.feature_names + [ds.target_name])
        class_targets = ds.task.has_class_targets
        for row, label in zip(ds.features, ds.target):
            values = [str(v) for v in row]
            values.append(str(int(label)) if class_targets else str(float(label)))
            writer.writerow(values)


def split(ds: Dataset, test_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Seeded train/test partition.

    Classification and clustering datasets are stratified by class whenever
    every class has at least two members (per-class test counts allocated
    by largest remainder); otherwise the split is a plain shuffle.  The two
    sides are disjoint, exhaustive, and deterministic given the seed.
    """
    if not 0.0 < test_fraction < 1.0:
        raise DomainError(f"test_fraction must be in (0, 1), got {test_fraction}")
    n_test = int(ds.n * test_fraction)
    if n_test < 1 or ds.n - n_test < 1:
        raise DomainError(f"split of {ds.n} rows at {test_fraction} leaves an empty side")

    rng = np.random.default_rng(seed)
    test_indices: np.ndarray
    if ds.task.has_class_targets:
        counts = np.bincount(ds.target.astype(int))
    else:
        counts = np.array([])
    if ds.task.has_class_targets and counts.min() >= 2:
        exact = counts * test_fraction
        base = np.floor(exact).astype(int)
        leftover = n_test - base.sum()
        order = np.argsort(-(exact - base), kind="stable")
        base[order[:leftover]] += 1
        picks = []
        for cls, take in enumerate(base):
            members = np.flatnonzero(ds.target == cls)
            picks.append(rng.permutation(members)[:take])
        test_indices = np.concatenate(picks)
    else:
        test_indices = rng.permutation(ds.n)[:n_test]

    mask = np.zeros(ds.n, dtype=bool)
    mask[test_indices] = True
    return ds.take(np.flatnonzero(~mask)), ds.take(np.flatnonzero(mask))


def synthetic_expand(ds: Dataset, target_n: int, k_neighbors: int, seed: int) -> Dataset:
    """Grow a dataset by interpolating between nearest-neighbor pairs.

    Each synthetic row is anchor + lambda * (neighbor - anchor) with a
    seeded lambda in (0, 1), where the neighbor is one of the anchor's
    k nearest originals under Euclidean distance.  With class targets the
    neighbor pool is restricted to the anchor's class and the synthetic row
    inherits that class (a singleton class replicates its one member).  The
    original rows are preserved, bitwise, ahead of the synthetic ones.
    """
    if target_n <= ds.n:
        raise DomainError(f"target_n must exceed the current {ds.n} rows, got {target_n}")
    if not 1 <= k_neighbors < ds.n:
        raise DomainError(f"k_neighbors must be in [1, {ds.n - 1}], got {k_neighbors}")

    class_targets = ds.task.has_class_targets
    neighbor_lists: list[np.ndarray] = []
    for i in range(ds.n):
        if class_targets:
            pool = np.flatnonzero(ds.target == ds.target[i])
        else:
            pool = np.arange(ds.n)
        pool = pool[pool != i]
        if pool.size == 0:
            neighbor_lists.append(np.array([i]))  # singleton class: self-replicate
            continue
        distances = np.linalg.norm(ds.features[pool] - ds.features[i], axis=1)
        nearest = pool[np.argsort(distances, kind="stable")[:k_neighbors]]
        neighbor_lists.append(nearest)

    rng = np.random.default_rng(seed)
    new_features = np.empty((target_n - ds.n, ds.d))
    new_targets = np.empty(target_n - ds.n, dtype=ds.target.dtype)
    for row in range(target_n - ds.n):
        anchor = int(rng.integers(ds.n))
        options = neighbor_lists[anchor]
        neighbor = int(options[rng.integers(options.size)])
        lam = rng.random()
        new_features[row] = ds.features[anchor] + lam * (ds.features[neighbor] - ds.features[anchor])
        new_targets[row] = ds.target[anchor]

    return replace(
        ds,
        features=np.concatenate([ds.features, new_features]),
        target=np.concatenate([ds.target, new_targets]),
        n_dropped=0,
    )
