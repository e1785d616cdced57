from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from cumulattice.rings import LAMBDA, LambdaPoly
from cumulattice.series import (
    FormalPowerSeries,
    egf_of,
    free_moment_series,
    moments_from_egf,
    moments_from_ogf,
    ogf_of,
    solve_free,
)

F = Fraction


def series(*cs):
    return FormalPowerSeries(tuple(F(c) for c in cs))


small_coeffs = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=6), min_size=1, max_size=7
)


class TestArithmetic:
    def test_construction_and_order(self):
        f = series(1, 2, 3)
        assert f.order == 2
        assert f[0] == 1 and f[2] == 3
        with pytest.raises(IndexError):
            f[3]
        with pytest.raises(ValueError):
            FormalPowerSeries(())

    def test_truncation_is_explicit(self):
        f = series(1, 2, 3, 4)
        assert f.truncate(1) == series(1, 2)
        with pytest.raises(ValueError):
            f.truncate(5)

    def test_binary_ops_truncate_to_shorter(self):
        f = series(1, 1, 1, 1)
        g = series(2, 3)
        assert (f + g).order == 1
        assert (f * g).order == 1
        assert f + g == series(3, 4)
        assert f * g == series(2, 5)

    def test_scalar_mixing(self):
        f = series(1, 2)
        assert f + 1 == series(2, 2)
        assert 1 + f == series(2, 2)
        assert f - F(1, 2) == series(F(1, 2), 2)
        assert 3 - f == series(2, -2)
        assert f * 2 == series(2, 4)
        assert F(1, 2) * f == series(F(1, 2), 1)

    def test_geometric_inverse(self):
        f = series(1, -1, 0, 0, 0)
        assert f.inverse() == series(1, 1, 1, 1, 1)
        g = series(2, 1)
        assert g * g.inverse() == series(1, 0)

    def test_inverse_needs_unit(self):
        with pytest.raises(ValueError):
            series(0, 1).inverse()
        with pytest.raises(ValueError):
            FormalPowerSeries((LAMBDA,)).inverse()

    def test_difference_of_squares(self):
        assert series(1, 1, 0) * series(1, -1, 0) == series(1, 0, -1)

    def test_compose(self):
        f = series(1, 1, 1)  # 1 + z + z^2
        g = series(0, 2, 0)  # 2z
        assert f.compose(g) == series(1, 2, 4)
        with pytest.raises(ValueError):
            f.compose(series(1, 1, 0))

    def test_compose_with_identity_keeps_series(self):
        f = series(1, F(1, 2), -2, 3)
        z = series(0, 1, 0, 0)
        assert f.compose(z) == f

    def test_geometric_composed_with_quadratic(self):
        # 1/(1-z) at z+z^2 is 1/(1-z-z^2), the Fibonacci generating series,
        # and must agree with inverting 1-z-z^2 directly
        fib = series(1, 1, 2, 3, 5, 8, 13)
        geom = series(*([1] * 7))
        inner = series(0, 1, 1, 0, 0, 0, 0)
        assert geom.compose(inner) == fib
        assert (1 - inner).inverse() == fib

    def test_exp_composed_with_log_is_one_plus_z(self):
        e = series(0, 1, 0, 0, 0, 0).exp()
        g = series(1, 1, 0, 0, 0, 0)
        assert e.compose(g.log()) == g

    def test_compose_is_associative_to_order_eight(self):
        f = series(2, F(1, 2), -1, 3, 0, F(2, 3), 1, -2, F(1, 5))
        g = series(0, 1, F(-1, 2), 2, 1, 0, F(1, 3), -1, 1)
        h = series(0, F(3, 2), 1, F(-1, 3), 0, 2, -1, 1, F(1, 7))
        assert f.compose(g.compose(h)) == f.compose(g).compose(h)

    def test_exp_log_known_series(self):
        z = series(0, 1, 0, 0, 0)
        e = z.exp()
        assert e.coeffs == tuple(F(1, factorial(k)) for k in range(5))
        geom = series(1, 1, 1, 1, 1)
        # log(1/(1-z)) = sum z^k / k
        assert geom.log().coeffs == (F(0), F(1), F(1, 2), F(1, 3), F(1, 4))

    def test_exp_log_preconditions(self):
        with pytest.raises(ValueError):
            series(1, 1).exp()
        with pytest.raises(ValueError):
            series(2, 1).log()

    @settings(max_examples=30, deadline=None)
    @given(small_coeffs)
    def test_log_undoes_exp(self, tail):
        f = FormalPowerSeries((F(0),) + tuple(tail))
        assert f.exp().log() == f

    @settings(max_examples=30, deadline=None)
    @given(small_coeffs)
    def test_inverse_involution(self, cs):
        f = FormalPowerSeries((F(1),) + tuple(cs))
        assert f.inverse().inverse() == f

    @settings(max_examples=25, deadline=None)
    @given(small_coeffs, small_coeffs)
    def test_mul_commutes_and_distributes(self, a, b):
        n = min(len(a), len(b)) - 1
        f, g = FormalPowerSeries(a), FormalPowerSeries(b)
        assert f * g == g * f
        assert (f + g) * f == (f * f + g * f).truncate(n)

    def test_polynomial_coefficients_work(self):
        f = FormalPowerSeries((F(1), LAMBDA))
        g = f * f
        assert g.coeffs == (F(1), LambdaPoly((0, 2)))
        # exp of lambda*z keeps exact polynomial coefficients
        e = FormalPowerSeries((F(0), LAMBDA, F(0))).exp()
        assert e.coeffs == (F(1), LAMBDA, LambdaPoly((0, 0, F(1, 2))))


class TestGeneratingSeries:
    def test_egf_round_trip(self):
        moments = (F(1), F(3), F(15))
        f = egf_of(moments)
        assert f.coeffs == (F(1), F(1), F(3, 2), F(15, 6))
        assert moments_from_egf(f) == moments

    def test_ogf_round_trip(self):
        moments = (F(2), F(5))
        f = ogf_of(moments)
        assert f.coeffs == (F(1), F(2), F(5))
        assert moments_from_ogf(f) == moments

    def test_flavor_guard(self):
        from cumulattice.cumulants import Sequence

        ms = Sequence("moments", (F(1), F(2)))
        ks = Sequence("free", (F(1), F(1)))
        assert egf_of(ms).coeffs == (F(1), F(1), F(1))
        with pytest.raises(ValueError):
            egf_of(ks)
        with pytest.raises(ValueError):
            ogf_of(ks)

    def test_egf_product_is_binomial_convolution(self):
        from math import comb

        a = (F(1), F(2), F(1, 2), F(3), F(1))
        b = (F(2), F(1, 3), F(1), F(0), F(4))
        au, bu = (F(1),) + a, (F(1),) + b
        expected = tuple(
            sum(comb(n, k) * au[k] * bu[n - k] for k in range(n + 1)) for n in range(1, 6)
        )
        assert moments_from_egf(egf_of(a) * egf_of(b)) == expected

    def test_rejects_empty_and_bad_heads(self):
        with pytest.raises(ValueError):
            egf_of(())
        with pytest.raises(ValueError):
            moments_from_egf(series(2, 1))
        with pytest.raises(ValueError):
            moments_from_ogf(series(0, 1))


class TestFreeEquation:
    def test_catalan_moments_have_unit_cumulants(self):
        # the series with every cumulant 1 has Catalan moments
        cats = helpers.catalan_numbers(6)
        m = ogf_of(tuple(F(c) for c in cats))
        c = solve_free(m)
        assert c.coeffs == (F(1),) * 7

    def test_gaussian_and_bell_head_solutions(self):
        gauss = solve_free(ogf_of((F(0), F(1), F(0), F(3), F(0), F(15))))
        assert gauss.coeffs == (F(1), F(0), F(1), F(0), F(1), F(0), F(4))
        bell = solve_free(ogf_of((F(1), F(2), F(5), F(15))))
        assert bell.coeffs == (F(1), F(1), F(1), F(1), F(2))

    def test_round_trip_both_ways(self):
        m = ogf_of((F(1), F(2), F(6), F(22), F(92)))
        c = solve_free(m)
        assert free_moment_series(c) == m

    @settings(max_examples=25, deadline=None)
    @given(small_coeffs)
    def test_solve_then_rebuild(self, tail):
        m = FormalPowerSeries((F(1),) + tuple(tail))
        assert free_moment_series(solve_free(m)) == m

    @settings(max_examples=25, deadline=None)
    @given(small_coeffs)
    def test_rebuild_then_solve(self, tail):
        c = FormalPowerSeries((F(1),) + tuple(tail))
        assert solve_free(free_moment_series(c)) == c

    def test_defining_equation_holds(self):
        m = ogf_of((F(1), F(3), F(10), F(36), F(137)))
        c = solve_free(m)
        zm = FormalPowerSeries((F(0),) + m.coeffs[:-1])
        assert c.compose(zm) == m

    def test_head_guards(self):
        with pytest.raises(ValueError):
            solve_free(series(0, 1))
        with pytest.raises(ValueError):
            free_moment_series(series(2, 1))
        assert solve_free(series(1)) == series(1)
