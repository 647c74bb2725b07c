import numpy as np
import pytest

from emgactions.metrics import EmptyMatrixError, accuracy, confusion_matrix, kappa


class TestConfusionMatrix:
    def test_counts_pairs(self):
        cm = confusion_matrix([1, 1, 2, 3], [1, 2, 2, 3])
        assert cm.tolist() == [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
        assert cm.dtype == int

    def test_explicit_size_pads_unseen_classes(self):
        cm = confusion_matrix([1, 1], [1, 1], n_classes=4)
        assert cm.shape == (4, 4)
        assert cm.sum() == 2

    def test_rows_are_true_labels(self):
        cm = confusion_matrix([2], [1], n_classes=2)
        assert cm[1, 0] == 1
        assert cm[0, 1] == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            confusion_matrix([1, 2], [1])

    def test_labels_below_one(self):
        with pytest.raises(ValueError):
            confusion_matrix([0, 1], [1, 1])

    def test_labels_above_requested_size(self):
        with pytest.raises(ValueError):
            confusion_matrix([1, 3], [1, 1], n_classes=2)


class TestAccuracy:
    def test_trace_over_total(self):
        assert accuracy([[3, 1], [2, 4]]) == pytest.approx(0.7)

    def test_perfect_and_zero(self):
        assert accuracy(np.diag([5, 5, 5])) == 1.0
        assert accuracy([[0, 5], [5, 0]]) == 0.0

    def test_empty_matrix(self):
        with pytest.raises(EmptyMatrixError):
            accuracy(np.zeros((3, 3)))


class TestKappa:
    def test_hand_computed_value(self):
        # p_o = 0.7, p_e = 0.4*0.5 + 0.6*0.5 = 0.5 -> kappa = 0.4
        assert kappa([[3, 1], [2, 4]]) == pytest.approx(0.4)

    def test_perfect_agreement(self):
        assert kappa(np.diag([7, 2, 9])) == 1.0

    def test_chance_level_is_zero(self):
        assert kappa([[25, 25], [25, 25]]) == pytest.approx(0.0)

    def test_constant_prediction_is_zero(self):
        # every sample predicted class 1 regardless of truth
        assert kappa([[5, 0], [5, 0]]) == pytest.approx(0.0)

    def test_systematic_disagreement_negative(self):
        assert kappa([[0, 5], [5, 0]]) == pytest.approx(-1.0)

    def test_single_diagonal_cell_degenerate(self):
        assert kappa([[8]]) == 1.0
        assert kappa([[8, 0], [0, 0]]) == 1.0

    def test_one_iff_diagonal(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            C = int(rng.integers(2, 6))
            cm = rng.integers(0, 10, (C, C))
            if cm.sum() == 0:
                continue
            off = cm.sum() - np.trace(cm)
            if kappa(cm) == 1.0:
                assert off == 0
            if off == 0 and np.trace(cm) > 0:
                assert kappa(cm) == 1.0

    def test_relabeling_invariance(self):
        rng = np.random.default_rng(1)
        for _ in range(25):
            cm = rng.integers(0, 12, (4, 4))
            cm += np.diag(rng.integers(1, 5, 4))  # keep totals positive
            perm = rng.permutation(4)
            permuted = cm[np.ix_(perm, perm)]
            assert kappa(permuted) == pytest.approx(kappa(cm))
            assert accuracy(permuted) == pytest.approx(accuracy(cm))

    def test_empty_matrix(self):
        with pytest.raises(EmptyMatrixError):
            kappa(np.zeros((2, 2)))

    def test_bounded_above_by_one(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            cm = rng.integers(0, 20, (3, 3))
            if cm.sum() == 0:
                continue
            assert kappa(cm) <= 1.0 + 1e-12
