import cmath
import math

import mpmath as mp
import numpy as np
import pytest

from wsdist.distributions import TestFunction, pair
from wsdist.errors import DomainError, OrderError
from wsdist.quadrature import integrate_semiinfinite_damped
from wsdist.specfun import bessel_j, bessel_k_complex
from wsdist.weber_schafheitlin import (
    OrderPair,
    RegularizedPoint,
    _gamma_prefactor,
    _regularized_watson,
    k_transform,
    prop1_distribution,
    prop2_distribution,
    reflection_check,
    regularized_I,
)

VALID_PAIRS = [(0.0, 1.0), (1.0, 2.0), (0.5, 1.5), (2.0, 1.0), (1.0, 1.0), (0.3, 0.8)]

mp.mp.dps = 30


class TestOrderValidation:
    def test_hankel_bessel_boundary_is_rejected(self):
        with pytest.raises(OrderError):
            OrderPair(3.0, 1.0).require_hankel_bessel()  # nu + 2 == |mu|
        OrderPair(2.99, 1.0).require_hankel_bessel()

    def test_bessel_bessel_needs_both(self):
        with pytest.raises(OrderError):
            OrderPair(0.0, 2.0).require_bessel_bessel()  # mu + 2 == |nu|
        OrderPair(0.1, 2.0).require_bessel_bessel()

    def test_regularized_point_validation(self):
        with pytest.raises(DomainError):
            RegularizedPoint(0.0, 0.1)
        with pytest.raises(DomainError):
            RegularizedPoint(1.0, 0.0)


class TestKTransform:
    def test_real_argument_real_value(self):
        v = k_transform(OrderPair(0.5, 1.5), 2.3)
        assert abs(v.imag) <= 1e-14 * abs(v.real)

    def test_equal_orders_euler_reduction(self):
        # for mu = nu the Euler-reduced right side is just the prefactor power
        for nu in (0.5, 1.0, 2.0):
            orders = OrderPair(nu, nu)
            for z in (1.7 + 0.0j, 0.8 + 0.9j):
                lhs = k_transform(orders, z) * (1.0 + z**-2.0)
                rhs = _gamma_prefactor(nu, nu) * z ** (-2.0 - nu)
                assert abs(lhs - rhs) <= 1e-12 * abs(rhs)

    def test_against_direct_quadrature(self):
        z = 2.0

        def f(k):
            k = np.asarray(k, dtype=float)
            return k * bessel_k_complex(0.0, z * k) * bessel_j(0.0, k)

        r = integrate_semiinfinite_damped(f, z, math.pi, 1e-10)
        assert r.converged
        assert abs(k_transform(OrderPair(0.0, 0.0), z) - r.value) <= 1e-8

    def test_domain_and_order_errors(self):
        with pytest.raises(DomainError):
            k_transform(OrderPair(0.0, 0.0), -1.0 + 0.5j)
        with pytest.raises(OrderError):
            k_transform(OrderPair(4.0, 1.0), 2.0)


class TestRegularizedI:
    def test_route_equality_spot(self):
        orders = OrderPair(0.0, 1.0)
        pt = RegularizedPoint(0.7, 0.2)
        v1 = regularized_I(orders, pt)
        v2 = _regularized_watson(orders, 0.7, 0.2)
        assert abs(v1 - v2) <= 1e-10 * max(1.0, abs(v1))

    def test_route_equality_grid(self):
        worst = 0.0
        for mu, nu in VALID_PAIRS:
            orders = OrderPair(mu, nu)
            for s in (0.3, 0.7, 1.0, 1.5, 3.0):
                for eps in (0.05, 0.2, 1.0):
                    v1 = regularized_I(orders, RegularizedPoint(s, eps))
                    v2 = _regularized_watson(orders, s, eps)
                    worst = max(worst, abs(v1 - v2) / max(1.0, abs(v1)))
        assert worst <= 1e-10


class TestProp1:
    def test_F_at_one_is_one(self):
        for mu, nu in VALID_PAIRS:
            dist = prop1_distribution(OrderPair(mu, nu))
            assert dist.F(1.0) == 1.0 + 0.0j
            assert abs(dist.F(1.0 + 1e-9) - 1.0) <= 1e-7
            assert abs(dist.F(1.0 - 1e-9) - 1.0) <= 1e-7

    def test_equal_orders_density_is_power(self):
        nu = 1.5
        dist = prop1_distribution(OrderPair(nu, nu))
        for s in (0.3, 0.9, 1.0, 1.2, 4.0):
            assert abs(dist.F(s) - s ** (-nu - 1.0)) <= 1e-12

    def test_coefficients(self):
        mu, nu = 0.5, 1.5
        dist = prop1_distribution(OrderPair(mu, nu))
        phase = cmath.exp(0.5j * math.pi * (nu - mu))
        assert abs(dist.delta_coeff - phase) <= 1e-15
        assert abs(dist.pv_coeff - 2.0 / (1j * math.pi) * phase) <= 1e-15

    def test_density_against_mpmath(self):
        for mu, nu in [(0.0, 1.0), (0.5, 1.5), (1.0, 2.0)]:
            dist = prop1_distribution(OrderPair(mu, nu))
            a, b, c = (nu + mu) / 2, (nu - mu) / 2, nu + 1.0
            pre = float(mp.gamma(a + 1) * mp.gamma(b + 1) / mp.gamma(c))
            for s in (0.4, 0.85, 0.97, 1.03, 1.3, 2.7):
                ref = complex(s ** (-nu - 1) * pre * mp.hyp2f1(a, b, c, 1.0 / (s * s)))
                got = complex(dist.F(s))
                assert abs(got - ref) <= 1e-11 * max(1.0, abs(ref)), f"s={s}"

    def test_h_is_consistent_with_F(self):
        dist = prop1_distribution(OrderPair(0.0, 1.0))
        for s in (0.5, 0.93, 1.08, 1.9):
            lhs = complex(dist.F(s))
            rhs = 1.0 + (s - 1.0) * complex(dist.h(s))
            assert abs(lhs - rhs) <= 1e-11

    def test_alpha_is_stored(self):
        dist = prop1_distribution(OrderPair(0.0, 1.0), alpha=1.5)
        assert dist.alpha == 1.5


class TestProp2:
    def test_closure_is_pure_delta(self):
        dist = prop2_distribution(OrderPair(1.0, 1.0))
        assert dist.delta_coeff == 1.0
        assert abs(dist.pv_coeff) <= 1e-16
        g = TestFunction(1.0, 0.5, 1.0)
        assert abs(pair(dist, g) - g(1.0)) <= 1e-14

    def test_adjacent_orders_pure_pv(self):
        dist = prop2_distribution(OrderPair(0.0, 1.0))
        assert abs(dist.delta_coeff) <= 1e-16
        assert abs(dist.pv_coeff - 2.0 / math.pi) <= 1e-15

    def test_m0_value_and_continuity_trend(self):
        for mu, nu in VALID_PAIRS:
            dist = prop2_distribution(OrderPair(mu, nu))
            assert abs(dist.F(1.0) - 1.0) <= 1e-12
            jumps = [
                abs(dist.F(1.0 - d) - dist.F(1.0 + d)) for d in (1e-2, 1e-4, 1e-6)
            ]
            assert jumps[0] > jumps[1] > jumps[2]
            assert jumps[2] <= 1e-4

    def test_m0_against_mpmath_both_branches(self):
        for mu, nu in [(0.0, 1.0), (0.5, 1.5), (1.0, 2.0), (0.3, 0.8)]:
            dist = prop2_distribution(OrderPair(mu, nu))
            for s in (0.35, 0.9, 0.999, 1.001, 1.2, 3.1):
                if s <= 1.0:
                    pre = mp.gamma((mu + nu) / 2 + 1) * mp.gamma((mu - nu) / 2 + 1) / mp.gamma(mu + 1)
                    ref = float(s ** (mu - 1) * pre * mp.hyp2f1((mu + nu) / 2, (mu - nu) / 2, mu + 1, s * s))
                else:
                    pre = mp.gamma((nu + mu) / 2 + 1) * mp.gamma((nu - mu) / 2 + 1) / mp.gamma(nu + 1)
                    ref = float(s ** (-nu - 1) * pre * mp.hyp2f1((nu + mu) / 2, (nu - mu) / 2, nu + 1, s**-2.0))
                assert abs(dist.F(s) - ref) <= 1e-11 * max(1.0, abs(ref)), f"s={s}"

    def test_realpart_consistency_pairing(self):
        g = TestFunction(1.0, 0.5)
        for mu, nu in VALID_PAIRS:
            p1 = pair(prop1_distribution(OrderPair(mu, nu)), g, tol=1e-10)
            p2 = pair(prop2_distribution(OrderPair(mu, nu)), g, tol=1e-10)
            assert abs(p1.real - p2.real) <= 1e-8
            assert abs(p2.imag) <= 1e-12


class TestReflection:
    def test_identity_at_roundoff(self):
        for mu, nu in [(0.0, 1.0), (0.5, 1.5), (1.0, 2.0)]:
            for s in (0.25, 0.5, 2.0, 4.0):
                assert reflection_check(OrderPair(mu, nu), s) <= 1e-12

    def test_s_equal_one_rejected(self):
        with pytest.raises(DomainError):
            reflection_check(OrderPair(0.0, 1.0), 1.0)
