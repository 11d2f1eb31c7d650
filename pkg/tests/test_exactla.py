#!/usr/bin/env python3
"""
Test exact sparse linear algebra
"""

import unittest
import sys
import os
import random

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from scalar import context_init
from exactla import (
    SparseMatrix, compose_on_tensor_slot, invert_matrix, kernel_basis, kron, rank, solve,
    index_word, word_index,
)
from utils.errors import CapExceeded, NonInvertiblePivot
import config


def random_matrix(ctx, rng, rows, cols, density=0.5, theta=False):
    m = SparseMatrix(ctx, rows, cols)
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                s = ctx.xi_power(rng.randrange(ctx.n)) * rng.randint(-2, 2)
                if theta and rng.random() < 0.3:
                    s = s * ctx.theta
                m.set(r, c, s)
    return m


class TestRankAndKernel(unittest.TestCase):
    """Test rank and kernel on fixed and random matrices"""

    def setUp(self):
        self.ctx = context_init(2)
        self.rng = random.Random(config.RANDOM_SEED)

    def test_identity_and_zero(self):
        """Test rank of identity and zero matrices"""
        self.assertEqual(rank(SparseMatrix.identity(self.ctx, 5)), 5)
        self.assertEqual(rank(SparseMatrix(self.ctx, 4, 3)), 0)
        self.assertEqual(len(kernel_basis(SparseMatrix.identity(self.ctx, 5))), 0)
        self.assertEqual(len(kernel_basis(SparseMatrix(self.ctx, 4, 3))), 3)

    def test_exterior_symmetrizer_is_zero(self):
        """Test that id + c vanishes when c = -1 on a line"""
        m = SparseMatrix.from_triplets(self.ctx, 1, 1, [(0, 0, self.ctx.one), (0, 0, -self.ctx.one)])
        self.assertEqual(rank(m), 0)

    def test_rank_one_outer_product(self):
        """Test an outer product of size 3 has a two-dimensional kernel"""
        u = [self.ctx.one, self.ctx.xi, self.ctx.from_int(3)]
        v = [self.ctx.from_int(2), self.ctx.zero, -self.ctx.xi]
        m = SparseMatrix.from_triplets(self.ctx, 3, 3, [(r, c, u[r] * v[c]) for r in range(3) for c in range(3)])
        self.assertEqual(rank(m), 1)
        kernel = kernel_basis(m)
        self.assertEqual(len(kernel), 2)
        for vec in kernel:
            self.assertEqual(m.apply(vec), {})

    def test_rank_nullity_randomized(self):
        """Test rank + dim ker = cols and m k = 0 on random matrices"""
        for case in range(config.PROPERTY_CASES):
            ctx = context_init(self.rng.choice((2, 3)))
            m = random_matrix(ctx, self.rng, self.rng.randint(1, 5), self.rng.randint(1, 5))
            kernel = kernel_basis(m)
            self.assertEqual(rank(m) + len(kernel), m.cols, case)
            for vec in kernel:
                self.assertEqual(m.apply(vec), {}, case)

    def test_rank_of_transpose_randomized(self):
        """Test row rank equals column rank"""
        for case in range(config.PROPERTY_CASES):
            m = random_matrix(self.ctx, self.rng, self.rng.randint(1, 5), self.rng.randint(1, 5), theta=True)
            try:
                self.assertEqual(rank(m), rank(m.transpose()), case)
            except NonInvertiblePivot:
                continue

    def test_zero_divisor_pivot(self):
        """Test that a row of zero divisors stops elimination"""
        ctx = self.ctx
        # theta^2 = (1 - xi^-1)^2, so (1 - xi^-1) + theta has zero norm
        s = (ctx.one - ctx.xi ** -1) + ctx.theta
        m = SparseMatrix.from_triplets(ctx, 1, 1, [(0, 0, s)])
        with self.assertRaises(NonInvertiblePivot):
            rank(m)

    def test_theta_pivot(self):
        """Test an invertible theta entry works as a pivot"""
        m = SparseMatrix.from_triplets(self.ctx, 2, 2, [(0, 0, self.ctx.theta), (1, 0, self.ctx.one), (1, 1, self.ctx.theta)])
        self.assertEqual(rank(m), 2)


class TestSolveAndInvert(unittest.TestCase):
    """Test linear solving and inversion"""

    def setUp(self):
        self.ctx = context_init(3)
        self.rng = random.Random(config.RANDOM_SEED)

    def test_solve_consistent(self):
        """Test that a returned solution satisfies the system"""
        for case in range(config.PROPERTY_CASES):
            m = random_matrix(self.ctx, self.rng, 4, 3)
            x = {c: self.ctx.xi_power(c) for c in range(3)}
            rhs = m.apply(x)
            sol = solve(m, rhs)
            self.assertIsNotNone(sol, case)
            self.assertEqual(m.apply(sol), rhs, case)

    def test_solve_inconsistent(self):
        """Test that an inconsistent system returns None"""
        m = SparseMatrix.from_triplets(self.ctx, 2, 1, [(0, 0, self.ctx.one), (1, 0, self.ctx.one)])
        self.assertIsNone(solve(m, {0: self.ctx.one}))

    def test_invert(self):
        """Test m m^-1 = id on random invertible matrices"""
        for case in range(config.PROPERTY_CASES):
            m = random_matrix(self.ctx, self.rng, 4, 4, density=0.7)
            if rank(m) < 4:
                continue
            self.assertEqual(m @ invert_matrix(m), SparseMatrix.identity(self.ctx, 4), case)

    def test_invert_singular(self):
        """Test that a singular matrix is rejected"""
        with self.assertRaises(NonInvertiblePivot):
            invert_matrix(SparseMatrix(self.ctx, 2, 2))


class TestTensorSlots(unittest.TestCase):
    """Test operators placed on tensor slots"""

    def setUp(self):
        self.ctx = context_init(2)
        self.rng = random.Random(config.RANDOM_SEED)

    def test_word_index(self):
        """Test that the first factor is the most significant digit"""
        self.assertEqual(word_index((1, 0, 1), 2), 5)
        self.assertEqual(index_word(5, 2, 3), (1, 0, 1))

    def test_slot_one_of_two(self):
        """Test n = 2, j = 1 returns c itself"""
        c = random_matrix(self.ctx, self.rng, 4, 4)
        self.assertEqual(compose_on_tensor_slot(c, 2, 2, 1), c)

    def test_identity_extends(self):
        """Test an identity c gives the identity on V^3"""
        out = compose_on_tensor_slot(SparseMatrix.identity(self.ctx, 4), 2, 3, 2)
        self.assertEqual(out, SparseMatrix.identity(self.ctx, 8))

    def test_matches_kronecker(self):
        """Test id (x) c equals the Kronecker product"""
        c = random_matrix(self.ctx, self.rng, 4, 4)
        self.assertEqual(compose_on_tensor_slot(c, 2, 3, 2), kron(SparseMatrix.identity(self.ctx, 2), c))
        self.assertEqual(compose_on_tensor_slot(c, 2, 3, 1), kron(c, SparseMatrix.identity(self.ctx, 2)))

    def test_far_slots_commute(self):
        """Test c_1 c_3 = c_3 c_1 on V^4"""
        c = random_matrix(self.ctx, self.rng, 4, 4)
        c1 = compose_on_tensor_slot(c, 2, 4, 1)
        c3 = compose_on_tensor_slot(c, 2, 4, 3)
        self.assertEqual(c1 @ c3, c3 @ c1)

    def test_slot_out_of_range(self):
        """Test slot validation"""
        with self.assertRaises(IndexError):
            compose_on_tensor_slot(SparseMatrix.identity(self.ctx, 4), 2, 3, 3)

    def test_cap(self):
        """Test that d^n above the cap raises CapExceeded"""
        with self.assertRaises(CapExceeded):
            compose_on_tensor_slot(SparseMatrix.identity(self.ctx, 16), 4, 7, 1)


if __name__ == '__main__':
    unittest.main()
