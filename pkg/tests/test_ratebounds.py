"""Rate-bound evaluators: closed forms, dominance order, determinism."""

import math

import pytest

from davenport.errors import ParameterError
from davenport.ratebounds import (
    EVAL_TOLERANCE,
    RateBoundKind,
    entropy,
    evaluate,
    mrrw1_objective,
    root_entropy,
)

ALL_KINDS = list(RateBoundKind)


class TestEntropy:
    def test_half_is_one(self):
        assert entropy(0.5) == 1.0

    def test_endpoints_are_zero(self):
        assert entropy(0.0) == 0.0
        assert entropy(1.0) == 0.0

    def test_small_argument(self):
        assert 0.49 < entropy(0.11) < 0.51

    def test_symmetry(self):
        for u in (0.1, 0.23, 0.4):
            assert entropy(u) == pytest.approx(entropy(1 - u), abs=1e-12)

    def test_domain(self):
        with pytest.raises(ParameterError):
            entropy(-0.01)
        with pytest.raises(ParameterError):
            entropy(1.5)


class TestRootEntropy:
    def test_endpoints(self):
        assert root_entropy(0.0) == 0.0
        assert root_entropy(1.0) == 1.0

    def test_quarter(self):
        expected = entropy((1 - math.sqrt(0.75)) / 2)
        assert root_entropy(0.25) == pytest.approx(expected, abs=1e-15)

    def test_tolerates_float_drift_past_one(self):
        assert root_entropy(1 + 1e-10) == 1.0

    def test_rejects_genuinely_out_of_range(self):
        with pytest.raises(ParameterError):
            root_entropy(1.1)
        with pytest.raises(ParameterError):
            root_entropy(-0.1)


class TestEvaluate:
    def test_hamming_at_zero(self):
        assert evaluate(RateBoundKind.HAMMING, 0.0) == 1.0

    def test_elias_bassalygo_at_half(self):
        assert evaluate(RateBoundKind.ELIAS_BASSALYGO, 0.5) == 0.0

    def test_all_kinds_at_zero_rate_one(self):
        for kind in ALL_KINDS:
            assert evaluate(kind, 0.0) == 1.0, kind

    def test_all_kinds_vanish_from_half_onward(self):
        for kind in ALL_KINDS:
            for delta in (0.5, 0.6, 0.75, 1.0):
                assert evaluate(kind, delta) == 0.0, (kind, delta)

    def test_mrrw_variants_close_at_point_three(self):
        a = evaluate(RateBoundKind.MRRW1, 0.3)
        b = evaluate(RateBoundKind.MRRW2, 0.3)
        assert abs(a - b) <= 1e-6

    def test_gv_is_complement_of_entropy(self):
        for delta in (0.1, 0.25, 0.4):
            assert evaluate(RateBoundKind.GV_HEURISTIC, delta) == pytest.approx(
                1.0 - entropy(delta), abs=1e-15
            )

    def test_elias_bassalygo_is_mrrw1_objective_at_zero(self):
        for i in range(1, 50):
            delta = i / 100
            eb = evaluate(RateBoundKind.ELIAS_BASSALYGO, delta)
            assert eb == pytest.approx(mrrw1_objective(0.0, delta), abs=1e-12)

    def test_dominance_order(self):
        # GV <= MRRW1 <= EB <= Hamming and MRRW1 <= MRRW2, sampled coarsely here;
        # the acceptance suite runs the full 1000-point grid
        for i in range(101):
            delta = i / 100
            gv = evaluate(RateBoundKind.GV_HEURISTIC, delta)
            m1 = evaluate(RateBoundKind.MRRW1, delta)
            m2 = evaluate(RateBoundKind.MRRW2, delta)
            eb = evaluate(RateBoundKind.ELIAS_BASSALYGO, delta)
            ham = evaluate(RateBoundKind.HAMMING, delta)
            assert gv <= m1 + EVAL_TOLERANCE, delta
            assert m1 <= eb + EVAL_TOLERANCE, delta
            assert eb <= ham + EVAL_TOLERANCE, delta
            assert m1 <= m2 + 1e-9, delta

    def test_monotone_non_increasing(self):
        for kind in ALL_KINDS:
            previous = None
            for i in range(101):
                value = evaluate(kind, i / 100)
                if previous is not None:
                    assert value <= previous + EVAL_TOLERANCE, (kind, i)
                previous = value

    def test_values_stay_in_unit_interval(self):
        for kind in ALL_KINDS:
            for i in range(0, 101, 7):
                value = evaluate(kind, i / 100)
                assert 0.0 <= value <= 1.0

    def test_bit_identical_determinism(self):
        for kind in ALL_KINDS:
            for delta in (0.05, 0.17, 0.3, 0.45):
                assert evaluate(kind, delta) == evaluate(kind, delta)

    def test_delta_domain(self):
        with pytest.raises(ParameterError):
            evaluate(RateBoundKind.HAMMING, -0.1)
        with pytest.raises(ParameterError):
            evaluate(RateBoundKind.HAMMING, 1.01)

    def test_kind_type_checked(self):
        with pytest.raises(ParameterError):
            evaluate("hamming", 0.1)


class TestParse:
    def test_full_names(self):
        for kind in ALL_KINDS:
            assert RateBoundKind.parse(kind.value) is kind

    def test_aliases(self):
        assert RateBoundKind.parse("eb") is RateBoundKind.ELIAS_BASSALYGO
        assert RateBoundKind.parse("gv") is RateBoundKind.GV_HEURISTIC

    def test_unknown_name_lists_choices(self):
        with pytest.raises(ParameterError, match="mrrw1"):
            RateBoundKind.parse("nosuch")
