#!/usr/bin/env python3
"""
Test exact scalar arithmetic
Covers the cyclotomic field, the theta extension and canonical text
"""

import unittest
import sys
import os
import random
from fractions import Fraction
from math import gcd

import sympy

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from scalar import context_init, cyclotomic_poly, parse, render, scalar_arith, order_of_unity
from utils.errors import DivisionByZero, DivisionByZeroDivisor, UnsupportedP
import config


def random_scalar(ctx, rng, with_theta=True):
    d = ctx.field.degree
    re = ctx.field.element([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(d)])
    th = ctx.field.element([rng.randint(-3, 3) for _ in range(d)]) if with_theta else ctx.field.zero()
    return ctx.from_cyclotomic(re, th)


class TestContext(unittest.TestCase):
    """Test that contexts carry the right constants"""

    def test_phi_for_p2(self):
        """Test Phi_4 = x^2 + 1"""
        ctx = context_init(2)
        self.assertEqual([int(c) for c in ctx.phi], [1, 0, 1])

    def test_lambda_and_theta_square_p2(self):
        """Test lambda = xi and theta^2 = 2 xi when p = 2"""
        ctx = context_init(2)
        self.assertEqual(ctx.lam, ctx.xi)
        self.assertEqual(ctx.theta_sq, ctx.xi * 2)
        self.assertEqual(ctx.theta * ctx.theta, ctx.theta_sq)

    def test_phi_matches_sympy(self):
        """Test the exact division construction against sympy"""
        x = sympy.Symbol('x')
        for n in (4, 6, 8, 10, 12, 14, 18, 24):
            expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
            self.assertEqual([int(c) for c in cyclotomic_poly(n)], [int(c) for c in expected], n)

    def test_xi_is_primitive(self):
        """Test xi^(2p) = 1 and no smaller power is 1"""
        for p in (2, 3, 4, 5, 7):
            ctx = context_init(p)
            self.assertEqual(ctx.xi ** (2 * p), ctx.one)
            for k in range(1, 2 * p):
                self.assertNotEqual(ctx.xi ** k, ctx.one)

    def test_rejects_small_p(self):
        """Test that p < 2 is rejected"""
        with self.assertRaises(UnsupportedP):
            context_init(1)


class TestArithmetic(unittest.TestCase):
    """Test ring and field operations"""

    def setUp(self):
        self.rng = random.Random(config.RANDOM_SEED)

    def test_inverse_of_xi(self):
        """Test xi^-1 = xi^(2p-1)"""
        for p in (2, 3, 5):
            ctx = context_init(p)
            self.assertEqual(ctx.xi.inverse(), ctx.xi_power(2 * p - 1))

    def test_inverse_of_theta(self):
        """Test theta^-1 = theta / c"""
        ctx = context_init(3)
        self.assertEqual(ctx.theta.inverse(), ctx.theta / ctx.theta_sq)
        self.assertEqual(ctx.theta * ctx.theta.inverse(), ctx.one)

    def test_difference_of_squares_p2(self):
        """Test (1 + theta)(1 - theta) = 1 - 2 xi when p = 2"""
        ctx = context_init(2)
        self.assertEqual(scalar_arith(ctx.one + ctx.theta, ctx.one - ctx.theta, 'mul'), ctx.one - ctx.xi * 2)

    def test_division_errors(self):
        """Test zero and zero-divisor denominators"""
        ctx = context_init(2)
        with self.assertRaises(DivisionByZero):
            ctx.one / ctx.zero
        # (1 + xi)^2 = 2 xi = theta^2 in Q(i)
        with self.assertRaises(DivisionByZeroDivisor):
            ctx.one / (ctx.one + ctx.xi + ctx.theta)

    def test_pow_and_scalar_arith(self):
        """Test the pow operation including negative exponents"""
        ctx = context_init(3)
        self.assertEqual(scalar_arith(ctx.xi, ctx.from_int(7), 'pow'), ctx.xi)
        self.assertEqual(ctx.xi ** -1, ctx.xi_power(5))
        with self.assertRaises(ValueError):
            scalar_arith(ctx.xi, ctx.xi, 'pow')

    def test_ring_axioms_randomized(self):
        """Test associativity and distributivity on random triples"""
        for case in range(config.PROPERTY_CASES):
            ctx = context_init(self.rng.choice((2, 3, 4, 5)))
            a, b, c = (random_scalar(ctx, self.rng) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c), case)
            self.assertEqual(a * (b + c), a * b + a * c, case)
            self.assertEqual((a + b) - b, a, case)

    def test_inverse_randomized(self):
        """Test a * a^-1 = 1 for invertible random scalars"""
        for case in range(config.PROPERTY_CASES):
            ctx = context_init(self.rng.choice((2, 3, 5, 7)))
            a = random_scalar(ctx, self.rng)
            if not a.is_invertible():
                continue
            self.assertEqual(a * a.inverse(), ctx.one, case)

    def test_theta_conjugation_is_automorphism(self):
        """Test that theta -> -theta commutes with multiplication"""
        for case in range(config.PROPERTY_CASES):
            ctx = context_init(self.rng.choice((2, 3, 4)))
            a, b = random_scalar(ctx, self.rng), random_scalar(ctx, self.rng)
            self.assertEqual((a * b).conjugate(), a.conjugate() * b.conjugate(), case)

    def test_hash_agrees_with_numbers(self):
        """Test rational scalars hash like the int or Fraction they equal"""
        ctx = context_init(3)
        for value in (0, 1, -2, 7, Fraction(1, 2), Fraction(-5, 3)):
            s = ctx.from_int(value)
            self.assertEqual(s, value)
            self.assertEqual(hash(s), hash(value))
            self.assertEqual(hash(s.re), hash(value))
        lookup = {1: 'one', Fraction(1, 2): 'half'}
        self.assertEqual(lookup[ctx.one], 'one')
        self.assertEqual(lookup[ctx.from_int(Fraction(1, 2))], 'half')
        self.assertEqual(len({0, ctx.zero, ctx.from_int(2) - ctx.from_int(2)}), 1)
        self.assertNotIn(ctx.xi, {1, -1, 0})

    def test_hash_agrees_with_equality_randomized(self):
        """Test equal scalars built in different ways share a hash"""
        for case in range(config.PROPERTY_CASES):
            ctx = context_init(self.rng.choice((2, 3, 5)))
            a = random_scalar(ctx, self.rng, with_theta=self.rng.random() < 0.5)
            b = random_scalar(ctx, self.rng)
            same = (a + b) - b
            self.assertEqual(same, a, case)
            self.assertEqual(hash(same), hash(a), case)


class TestOrders(unittest.TestCase):
    """Test root-of-unity orders"""

    def test_order_of_xi_powers(self):
        """Test ord(xi^k) = 2p / gcd(k, 2p)"""
        for p in (2, 3, 4, 5, 7):
            ctx = context_init(p)
            for k in range(2 * p):
                self.assertEqual(order_of_unity(ctx.xi_power(k)), 2 * p // gcd(k, 2 * p))

    def test_order_of_minus_one(self):
        """Test ord(-1) = 2"""
        self.assertEqual(order_of_unity(-context_init(3).one), 2)

    def test_order_p2_example(self):
        """Test ord(-xi^-1) = 4 when p = 2"""
        ctx = context_init(2)
        self.assertEqual(order_of_unity(-(ctx.xi ** -1)), 4)

    def test_non_root_of_unity(self):
        """Test that 2 and theta have no finite order"""
        # at p = 3 theta^2 = xi^2 is itself a root of unity
        ctx = context_init(5)
        self.assertIsNone(order_of_unity(ctx.from_int(2)))
        self.assertIsNone(order_of_unity(ctx.theta))
        self.assertIsNone(order_of_unity(ctx.zero))


class TestText(unittest.TestCase):
    """Test canonical rendering and parsing"""

    def test_render_examples(self):
        """Test a few fixed renderings"""
        ctx = context_init(3)
        self.assertEqual(render(ctx.zero), '0')
        self.assertEqual(render(ctx.xi), 'x')
        self.assertEqual(render(-ctx.xi + Fraction(1, 2)), '-x + 1/2')
        self.assertEqual(render(ctx.theta), '(1)*t')

    def test_parse_inverts_render(self):
        """Test parse(render(s)) = s on random scalars"""
        rng = random.Random(config.RANDOM_SEED)
        ctx = context_init(5)
        for _ in range(50):
            s = random_scalar(ctx, rng)
            self.assertEqual(parse(ctx, render(s)), s)

    def test_parse_reduces(self):
        """Test that parse applies xi^(2p) = 1 and t^2 = c"""
        ctx = context_init(2)
        self.assertEqual(parse(ctx, 'x**4'), ctx.one)
        self.assertEqual(parse(ctx, 't**2'), ctx.theta_sq)


if __name__ == '__main__':
    unittest.main()
