"""Mean values and the complete elliptic integral."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcfun import (
    DivergenceError,
    DomainError,
    MeanKind,
    agm,
    ellint_K,
    ellint_Kprime,
    mean,
    mean_mod,
)

# frozen oracle values (two-term AGM iteration run by hand / high precision)
AGM_1_HALF = 0.72839551552345343
K_HALF = 1.6857503548125960
K_INV_SQRT2 = 1.8540746773013719
L32_1_2 = 1.4569364997441582

positive = st.floats(min_value=1e-3, max_value=1e3)


class TestMeans:
    def test_ag_fixed_point(self):
        assert mean(MeanKind.ArithmeticGeometric, 1.0, 1.0) == 1.0

    def test_log_mean_of_e(self):
        assert mean(MeanKind.Logarithmic, math.e, 1.0) == pytest.approx(math.e - 1.0, rel=1e-14)

    def test_log_mean_equal_args(self):
        assert mean(MeanKind.Logarithmic, 2.7, 2.7) == 2.7

    def test_agm_recorded_value(self):
        assert mean(MeanKind.ArithmeticGeometric, 1.0, 0.5) == pytest.approx(AGM_1_HALF, rel=1e-15)

    def test_arithmetic_geometric_basics(self):
        assert mean(MeanKind.Arithmetic, 2.0, 4.0) == 3.0
        assert mean(MeanKind.Geometric, 2.0, 8.0) == pytest.approx(4.0, rel=1e-15)

    def test_domain(self):
        for kind in MeanKind:
            with pytest.raises(DomainError):
                mean(kind, 0.0, 1.0)
            with pytest.raises(DomainError):
                mean(kind, 1.0, -2.0)

    @given(positive, positive)
    @settings(max_examples=60, deadline=None)
    def test_symmetry_and_betweenness(self, x, y):
        for kind in MeanKind:
            m = mean(kind, x, y)
            assert m == pytest.approx(mean(kind, y, x), rel=1e-12)
            assert min(x, y) * (1 - 1e-12) <= m <= max(x, y) * (1 + 1e-12)

    @given(positive, positive)
    @settings(max_examples=60, deadline=None)
    def test_ordering_chain(self, x, y):
        g = mean(MeanKind.Geometric, x, y)
        l = mean(MeanKind.Logarithmic, x, y)
        ag = mean(MeanKind.ArithmeticGeometric, x, y)
        l32 = mean_mod(MeanKind.Logarithmic, 1.5, x, y)
        a = mean(MeanKind.Arithmetic, x, y)
        eps = 1e-12 * a
        assert g <= l + eps and l <= ag + eps and ag <= l32 + eps and l32 <= a + eps
        if abs(x - y) > 1e-6 * a:
            assert g < l < ag < l32 < a


class TestMeanMod:
    def test_identity_exponent(self):
        assert mean_mod(MeanKind.Arithmetic, 1.0, 2.0, 4.0) == pytest.approx(3.0, rel=1e-15)

    def test_geometric_invariant_under_t(self):
        g = mean(MeanKind.Geometric, 0.7, 3.1)
        for t in (0.5, 1.0, 2.0, 3.5):
            assert mean_mod(MeanKind.Geometric, t, 0.7, 3.1) == pytest.approx(g, rel=1e-13)

    def test_recorded_value(self):
        assert mean_mod(MeanKind.Logarithmic, 1.5, 1.0, 2.0) == pytest.approx(L32_1_2, rel=1e-13)

    @pytest.mark.parametrize("kind", [MeanKind.Arithmetic, MeanKind.Logarithmic,
                                      MeanKind.ArithmeticGeometric])
    def test_monotone_in_t(self, kind):
        for x, y in ((1.0, 2.0), (0.5, 5.0), (2.0, 2.5)):
            values = [mean_mod(kind, t, x, y) for t in (0.5, 1.0, 1.5, 2.0, 3.0)]
            assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            mean_mod(MeanKind.Arithmetic, 0.0, 1.0, 2.0)
        with pytest.raises(DomainError):
            mean_mod(MeanKind.Arithmetic, -1.0, 1.0, 2.0)


class TestAgm:
    @given(positive, st.floats(min_value=1e-2, max_value=1e2))
    @settings(max_examples=40, deadline=None)
    def test_scaling(self, x, s):
        assert agm(s * x, s * 2.0) == pytest.approx(s * agm(x, 2.0), rel=1e-13)

    def test_known_value(self):
        assert agm(1.0, 0.5) == pytest.approx(AGM_1_HALF, rel=1e-15)

    def test_tiny_argument(self):
        assert agm(1.0, 1e-280) > 0.0


class TestEllintK:
    def test_at_zero(self):
        assert ellint_K(0.0) == pytest.approx(math.pi / 2.0, rel=1e-15)

    def test_lemniscatic_point(self):
        assert ellint_K(1.0 / math.sqrt(2.0)) == pytest.approx(K_INV_SQRT2, rel=1e-14)

    def test_half(self):
        assert ellint_K(0.5) == pytest.approx(K_HALF, rel=1e-14)

    def test_divergence(self):
        with pytest.raises(DivergenceError):
            ellint_K(1.0)

    @pytest.mark.parametrize("r", [-0.1, 1.0000001, 2.0])
    def test_domain(self, r):
        with pytest.raises(DomainError):
            ellint_K(r)

    def test_near_one_branch_inside_bracket(self):
        r = 1.0 - 1e-9
        comp = math.sqrt((1.0 - r) * (1.0 + r))
        log_term = math.log(4.0 / comp)
        k = ellint_K(r)
        assert 9.0 / (8.0 + r * r) * log_term < k * (1 + 1e-9)
        assert k < 4.0 / (3.0 + r * r) * log_term * (1 + 1e-9)

    def test_kuhnau_carlson_bracket_strict(self):
        for i in range(1, 20):
            r = i / 20.0
            comp = math.sqrt((1.0 - r) * (1.0 + r))
            log_term = math.log(4.0 / comp)
            k = ellint_K(r)
            assert 9.0 / (8.0 + r * r) * log_term < k < 4.0 / (3.0 + r * r) * log_term

    def test_landen_identity(self):
        for i in range(1, 20):
            r = i / 20.0
            k = ellint_K(r)
            assert ellint_K(2.0 * math.sqrt(r) / (1.0 + r)) == pytest.approx(
                (1.0 + r) * k, rel=1e-12)

    def test_quotient_decreasing(self):
        def quotient(r):
            comp = math.sqrt((1.0 - r) * (1.0 + r))
            return ellint_K(r) / math.log(4.0 / comp)

        values = [quotient(i / 40.0) for i in range(1, 40)]
        assert all(b < a for a, b in zip(values, values[1:]))


class TestEllintKprime:
    def test_at_one(self):
        assert ellint_Kprime(1.0) == pytest.approx(math.pi / 2.0, rel=1e-15)

    def test_symmetric_point(self):
        s = 1.0 / math.sqrt(2.0)
        assert ellint_Kprime(s) == pytest.approx(ellint_K(s), rel=1e-13)

    def test_complement_identity(self):
        assert ellint_Kprime(0.8) == pytest.approx(ellint_K(0.6), rel=1e-13)

    def test_divergence(self):
        with pytest.raises(DivergenceError):
            ellint_Kprime(0.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            ellint_Kprime(1.2)
