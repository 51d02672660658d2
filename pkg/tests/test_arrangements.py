"""Tests for composition enumeration and arrangement minimization."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from soig.arrangements import (
    Composition,
    PointClass,
    adjacency_counts,
    certify_impossible,
    composition_word,
    enumerate_compositions,
    evaluate_witness,
    min_sum_general,
    min_sum_two_class,
    minimize,
)
from soig.bounds import Annulus, Params
from soig.errors import DomainError, ResourceLimitError

P = Params(1.409)
TOP = 1 + P.p


def ones(count, lo=1.409, hi=TOP, label="one"):
    return PointClass(1.0, Annulus(lo, hi), count, label)


def halves(count, lo=1.0, hi=TOP, label="half"):
    return PointClass(0.5, Annulus(lo, hi), count, label)


class TestEnumerateCompositions:
    def test_six_triples_for_6_and_8(self):
        got = {tuple(c) for c in enumerate_compositions(6, 8)}
        assert got == {(0, 2, 12), (1, 3, 10), (2, 4, 8), (3, 5, 6), (4, 6, 4), (5, 7, 2)}

    def test_two_triples_for_10_and_2(self):
        got = {tuple(c) for c in enumerate_compositions(10, 2)}
        assert got == {(8, 0, 4), (9, 1, 2)}

    def test_single_class(self):
        assert [tuple(c) for c in enumerate_compositions(12, 0)] == [(12, 0, 0)]
        assert [tuple(c) for c in enumerate_compositions(0, 5)] == [(0, 5, 0)]

    def test_too_few_points(self):
        with pytest.raises(DomainError):
            enumerate_compositions(1, 0)
        with pytest.raises(DomainError):
            enumerate_compositions(0, 0)

    @given(m=st.integers(0, 8), h=st.integers(0, 8))
    def test_words_realize_every_composition(self, m, h):
        if m + h < 2:
            return
        for comp in enumerate_compositions(m, h):
            word = composition_word(m, h, comp)
            assert len(word) == m + h
            assert word.count("1") == m and word.count("h") == h
            assert adjacency_counts(word) == comp

    def test_unrealizable_composition_rejected(self):
        # n11 = 0 forces four weight-1 blocks, which contradicts nhh = 2.
        with pytest.raises(DomainError):
            composition_word(4, 4, Composition(0, 2, 6))


class TestMinSumTwoClass:
    def test_four_ones_eleven_halves(self):
        cert = min_sum_two_class(ones(4), halves(11, lo=1.25), P)
        assert cert.min_sum == pytest.approx(360.302874635964, abs=1e-9)
        assert tuple(cert.composition) == (3, 10, 2)
        assert cert.margin == cert.min_sum - 360.0

    def test_ten_ones_two_halves(self):
        cert = min_sum_two_class(ones(10), halves(2, lo=1.2931), P)
        assert cert.min_sum == pytest.approx(360.0020021444129, abs=1e-9)
        assert tuple(cert.composition) == (9, 1, 2)

    def test_twelve_ones_alone(self):
        cert = min_sum_two_class(ones(12), halves(0), P)
        assert cert.min_sum == pytest.approx(375.06661499359535, abs=1e-9)
        assert cert.min_sum > 375.0

    def test_witness_matches_min(self):
        cert = min_sum_two_class(ones(6), halves(8, lo=1.259), P)
        assert evaluate_witness([ones(6), halves(8, lo=1.259)], cert.witness, P) == pytest.approx(
            cert.min_sum, abs=1e-9
        )

    def test_rejects_single_point(self):
        with pytest.raises(DomainError):
            min_sum_two_class(ones(1), halves(0), P)

    def test_rejects_wrong_weights(self):
        with pytest.raises(DomainError):
            min_sum_two_class(halves(3), halves(3), P)


class TestMinSumGeneral:
    def test_staggered_blues_settle_apart(self):
        classes = [halves(9, hi=1.19, label="red"), halves(1, hi=1.24, label="blue"),
                   halves(1, hi=1.45, label="green")]
        cert = min_sum_general(classes, P)
        assert cert.min_sum == pytest.approx(362.10382905838253, abs=1e-9)
        # The two larger-annulus points never end up adjacent at the minimum.
        n = len(cert.witness)
        for i in range(n):
            a, b = cert.witness[i], cert.witness[(i + 1) % n]
            assert {a, b} != {"blue", "green"}

    def test_five_class_delicate_configuration(self):
        classes = [
            halves(6, hi=1.1072, label="red"),
            halves(1, hi=1.1138, label="blue1"),
            halves(1, hi=1.1254, label="blue2"),
            halves(1, hi=1.1513, label="blue3"),
            halves(1, hi=1.2571, label="blue4"),
        ]
        cert = min_sum_general(classes, P)
        assert cert.min_sum == pytest.approx(360.00471201843396, abs=1e-9)

    def test_matches_closed_form_on_random_two_class_instances(self):
        rng = random.Random(7)
        for _ in range(40):
            m = rng.randint(0, 6)
            h = rng.randint(0, 8)
            if m + h < 2:
                continue
            one_lo = rng.uniform(1.409, 2.2)
            half_lo = rng.uniform(1.0, 1.5)
            cls_ones = ones(m, lo=one_lo)
            cls_halves = halves(h, lo=half_lo)
            closed = min_sum_two_class(cls_ones, cls_halves, P)
            exhaustive = min_sum_general([c for c in (cls_ones, cls_halves) if c.count], P)
            assert exhaustive.min_sum == pytest.approx(closed.min_sum, abs=1e-9)

    def test_invariant_under_class_order_and_labels(self):
        a = [halves(9, hi=1.21, label="red"), halves(2, hi=1.29, label="blue")]
        b = [halves(2, hi=1.29, label="x"), halves(9, hi=1.21, label="y")]
        assert min_sum_general(a, P).min_sum == pytest.approx(
            min_sum_general(b, P).min_sum, abs=1e-12
        )

    def test_witness_reevaluates(self):
        classes = [halves(9, hi=1.2, label="red"), halves(2, hi=1.33, label="blue")]
        cert = min_sum_general(classes, P)
        assert evaluate_witness(classes, cert.witness, P) == pytest.approx(
            cert.min_sum, abs=1e-9
        )

    def test_zero_count_classes_drop_out(self):
        classes = [halves(9, hi=1.2, label="red"), halves(0, hi=1.33, label="blue"),
                   halves(2, hi=1.33, label="green")]
        just_two = [halves(9, hi=1.2, label="red"), halves(2, hi=1.33, label="green")]
        assert min_sum_general(classes, P).min_sum == pytest.approx(
            min_sum_general(just_two, P).min_sum, abs=1e-12
        )

    def test_point_count_guard(self):
        with pytest.raises(ResourceLimitError):
            min_sum_general([halves(20, label="a"), halves(20, hi=1.2, label="b")], P)

    def test_duplicate_labels_rejected(self):
        with pytest.raises(DomainError):
            min_sum_general([halves(2, label="x"), halves(2, hi=1.2, label="x")], P)


class TestCertifyImpossible:
    def test_eleven_halves_in_tight_annulus(self):
        outcome = certify_impossible([halves(11, hi=1.259)], P)
        assert outcome.verified
        assert outcome.certificate.margin == pytest.approx(0.16729, abs=1e-4)

    def test_two_ones_always_feasible(self):
        outcome = certify_impossible([ones(2)], P)
        assert not outcome.verified
        assert outcome.certificate.min_sum == pytest.approx(2 * 31.2555, abs=1e-3)
        assert len(outcome.certificate.witness) == 2

    def test_paranoid_mode_keeps_the_tightest_margin(self):
        classes = [ones(10), halves(2, lo=1.2931)]
        assert certify_impossible(classes, P, paranoid=True).verified

    def test_method_dispatch(self):
        two_class = certify_impossible([ones(4), halves(11, lo=1.25)], P)
        assert two_class.certificate.method == "two-class-closed-form"
        multi = certify_impossible(
            [halves(9, hi=1.2, label="red"), halves(2, hi=1.33, label="blue")], P
        )
        assert multi.certificate.method == "exhaustive"


class TestMinimizeDispatch:
    def test_single_class_goes_closed_form(self):
        cert = minimize([halves(11, hi=1.259)], P)
        assert cert.method == "two-class-closed-form"
        assert cert.min_sum == pytest.approx(360.16728621927894, abs=1e-9)
