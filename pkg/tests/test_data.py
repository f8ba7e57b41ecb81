"""Unit tests for dataset ingestion, splitting, schedules, and expansion."""

import numpy as np
import pytest

from normetric import (
    DataError,
    DomainError,
    TaskKind,
    load_csv,
    make_blobs,
    save_csv,
    schedule,
    split,
    synthetic_expand,
)


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestLoadCsv:
    def test_minimal_numeric_file(self, tmp_path):
        p = write(tmp_path / "t.csv", "a,b,y\n1,2,3.5\n4,5,6.5\n")
        ds = load_csv(p, "y", TaskKind.REGRESSION)
        assert ds.n == 2 and ds.d == 2
        assert ds.feature_names == ["a", "b"]
        np.testing.assert_allclose(ds.features, [[1, 2], [4, 5]])
        np.testing.assert_allclose(ds.target, [3.5, 6.5])
        assert ds.n_dropped == 0

    def test_unparseable_rows_are_dropped_and_counted(self, tmp_path):
        rows = "\n".join(f"{i},{i * 2},0" for i in range(9))
        p = write(tmp_path / "t.csv", f"a,b,y\n{rows}\nbad,?,0\n")
        ds = load_csv(p, "y", TaskKind.REGRESSION)
        assert ds.n == 9
        assert ds.n_dropped == 1

    def test_categorical_encoded_in_first_appearance_order(self, tmp_path):
        p = write(tmp_path / "t.csv", "color,y\nb,0\na,1\nb,0\n")
        ds = load_csv(p, "y", TaskKind.BINARY_CLASSIFICATION)
        np.testing.assert_allclose(ds.features.ravel(), [0.0, 1.0, 0.0])

    def test_class_targets_reindexed_from_zero(self, tmp_path):
        p = write(tmp_path / "t.csv", "a,y\n1,5\n2,9\n3,5\n")
        ds = load_csv(p, "y", TaskKind.MULTICLASS_CLASSIFICATION)
        np.testing.assert_array_equal(ds.target, [0, 1, 0])

    def test_missing_file(self, tmp_path):
        with pytest.raises(DataError):
            load_csv(str(tmp_path / "nope.csv"), "y", TaskKind.REGRESSION)

    def test_missing_target_column(self, tmp_path):
        p = write(tmp_path / "t.csv", "a,b\n1,2\n")
        with pytest.raises(DataError):
            load_csv(p, "y", TaskKind.REGRESSION)

    def test_zero_usable_rows(self, tmp_path):
        p = write(tmp_path / "t.csv", "a,y\nx,?\n")
        with pytest.raises(DataError):
            load_csv(p, "y", TaskKind.REGRESSION)


def test_save_load_round_trip(tmp_path):
    ds = make_blobs(30, d=3, n_classes=3, seed=5)
    # loading re-indexes class labels by first appearance, so a bitwise
    # round trip needs the labels in first-appearance order to begin with
    _, first_seen = np.unique(ds.target, return_index=True)
    relabel = np.empty(3, dtype=int)
    relabel[ds.target[np.sort(first_seen)]] = np.arange(3)
    ds.target[:] = relabel[ds.target]
    out = str(tmp_path / "round.csv")
    save_csv(ds, out)
    back = load_csv(out, ds.target_name, ds.task)
    assert back.feature_names == ds.feature_names
    np.testing.assert_allclose(back.features, ds.features)
    np.testing.assert_array_equal(back.target, ds.target)


class TestSplit:
    def test_sizes(self):
        ds = make_blobs(10, d=2, n_classes=2, seed=0)
        train, test = split(ds, 0.2, seed=0)
        assert train.n == 8 and test.n == 2

    def test_deterministic(self):
        ds = make_blobs(50, d=2, n_classes=3, seed=1)
        a_train, a_test = split(ds, 0.3, seed=9)
        b_train, b_test = split(ds, 0.3, seed=9)
        np.testing.assert_array_equal(a_train.features, b_train.features)
        np.testing.assert_array_equal(a_test.target, b_test.target)

    def test_stratified_keeps_class_proportions(self):
        ds = make_blobs(100, d=2, n_classes=2, seed=3, weights=[0.5, 0.5])
        # force exact 50/50 labels for the counting check
        ds.target[:] = np.repeat([0, 1], 50)
        _, test = split(ds, 0.2, seed=4)
        counts = np.bincount(test.target, minlength=2)
        np.testing.assert_array_equal(counts, [10, 10])

    def test_partition_is_disjoint_and_complete(self):
        ds = make_blobs(40, d=2, n_classes=3, seed=8)
        train, test = split(ds, 0.25, seed=2)
        joined = np.vstack([train.features, test.features])
        assert joined.shape[0] == ds.n
        # every original row appears exactly once across the two sides
        original = {tuple(row) for row in ds.features}
        assert {tuple(row) for row in joined} == original

    def test_rejects_degenerate_fractions(self):
        ds = make_blobs(10, d=2, n_classes=2, seed=0)
        for bad in (0.0, 1.0, -0.5, 2.0):
            with pytest.raises(DomainError):
                split(ds, bad, seed=0)
        with pytest.raises(DomainError):
            split(ds, 0.01, seed=0)  # empty test side


class TestSchedule:
    def test_curve_range(self):
        s = schedule(80, 1000, 20)
        assert len(s.sizes) == 47
        assert s.sizes[0] == 80 and s.sizes[-1] == 1000

    def test_single_point(self):
        assert schedule(30, 30, 5).sizes == (30,)

    def test_empty_range_rejected(self):
        with pytest.raises(DomainError):
            schedule(10, 9, 1)

    def test_step_never_overshoots(self):
        s = schedule(10, 25, 10)
        assert s.sizes == (10, 20)


class TestSyntheticExpand:
    def test_prefix_preserved_bitwise(self):
        ds = make_blobs(20, d=3, n_classes=2, seed=6)
        bigger = synthetic_expand(ds, target_n=50, k_neighbors=4, seed=1)
        assert bigger.n == 50
        assert np.array_equal(bigger.features[:20], ds.features)
        assert np.array_equal(bigger.target[:20], ds.target)

    def test_rows_are_convex_combinations_of_same_class_parents(self):
        ds = make_blobs(20, d=2, n_classes=2, seed=7)
        bigger = synthetic_expand(ds, target_n=60, k_neighbors=3, seed=2)
        originals = ds.features
        for row, label in zip(bigger.features[20:], bigger.target[20:]):
            same = originals[ds.target == label]
            # the synthetic point must sit on a segment between two parents:
            # check the best pair reconstructs it coordinate-for-coordinate
            found = False
            for i in range(same.shape[0]):
                for j in range(same.shape[0]):
                    if i == j:
                        continue
                    a, b = same[i], same[j]
                    span = b - a
                    denom = np.dot(span, span)
                    if denom == 0.0:
                        continue
                    lam = np.dot(row - a, span) / denom
                    if -1e-9 <= lam <= 1 + 1e-9 and np.allclose(a + lam * span, row, atol=1e-9):
                        found = True
                        break
                if found:
                    break
            assert found, "synthetic row is not on a segment between same-class parents"

    def test_deterministic(self):
        ds = make_blobs(15, d=2, n_classes=3, seed=9)
        a = synthetic_expand(ds, target_n=40, k_neighbors=2, seed=5)
        b = synthetic_expand(ds, target_n=40, k_neighbors=2, seed=5)
        np.testing.assert_array_equal(a.features, b.features)

    def test_rejects_bad_arguments(self):
        ds = make_blobs(10, d=2, n_classes=2, seed=0)
        with pytest.raises(DomainError):
            synthetic_expand(ds, target_n=10, k_neighbors=2, seed=0)
        with pytest.raises(DomainError):
            synthetic_expand(ds, target_n=20, k_neighbors=0, seed=0)
        with pytest.raises(DomainError):
            synthetic_expand(ds, target_n=20, k_neighbors=10, seed=0)
