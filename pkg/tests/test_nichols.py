#!/usr/bin/env python3
"""
Test braid lifts, quantum symmetrizers, skew-derivations, graded dimensions
and the Nichols presentation catalogue
"""

import unittest
import sys
import os
import random

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from scalar import context_init
from exactla import SparseMatrix, rank
from hopf import verify_hopf
from nichols import (
    NicholsQuotient, all_permutations, braid_operator, compose_word, graded_dims, in_nichols_ideal,
    inversion_count, joint_kernel, kernel_elements, linear_combination, literal_symmetrizer, matsumoto_lift,
    nichols_bosonization, quad_criterion, quadratic_presentation, quadratic_relations, quantum_symmetrizer,
    reduced_words, skew_derivation, symmetrizer_ranks, verify_presentation, g3_presentation,
)
from nichols.presentations import NicholsPresentation
from utils.errors import DimMismatch
from ydmod import Chi, Vij, braiding, dual, in_lambda, make_module, make_one_dim, make_two_dim
import config


def lambda_pairs(p):
    n = 2 * p
    return [(i, j) for i in range(n) for j in range(n) if in_lambda(p, i, j)]


def random_reduced_word(perm, rng):
    """A reduced word of perm, peeling off a random right descent at each step"""
    perm = list(perm)
    word = []
    while True:
        descents = [j for j in range(1, len(perm)) if perm[j - 1] > perm[j]]
        if not descents:
            return list(reversed(word))
        j = rng.choice(descents)
        perm[j - 1], perm[j] = perm[j], perm[j - 1]
        word.append(j)


class TestMatsumoto(unittest.TestCase):
    """Test reduced words of permutations"""

    def test_small_cases(self):
        """Test the identity and a single transposition"""
        self.assertEqual(matsumoto_lift((0, 1, 2)), [])
        self.assertEqual(matsumoto_lift((1, 0)), [1])

    def test_reduced_and_correct(self):
        """Test the lift multiplies back to the permutation with inversion-count length"""
        for perm in all_permutations(4):
            word = matsumoto_lift(perm)
            self.assertEqual(len(word), inversion_count(perm))
            self.assertEqual(compose_word(4, word), perm)

    def test_longest_element(self):
        """Test both reduced words of the longest element of S_3 give one operator"""
        c = braiding(make_two_dim(context_init(2), 1, 1), check=False)
        words = list(reduced_words((2, 1, 0)))
        self.assertEqual(sorted(words), [[1, 2, 1], [2, 1, 2]])
        self.assertEqual(len(matsumoto_lift((2, 1, 0))), 3)
        self.assertEqual(braid_operator(c, 3, words[0]), braid_operator(c, 3, words[1]))

    def test_reduced_word_independence(self):
        """Test every reduced word of every permutation of S_4 lifts to the same operator"""
        c = braiding(make_two_dim(context_init(2), 2, 1), check=False)
        for perm in all_permutations(4):
            words = list(reduced_words(perm))
            ref = braid_operator(c, 4, words[0])
            for word in words[1:]:
                self.assertEqual(braid_operator(c, 4, word), ref, (perm, word))

    def test_reduced_word_independence_randomized(self):
        """Test random reduced words of random permutations of S_5 lift to one operator"""
        rng = random.Random(config.RANDOM_SEED)
        braidings = {}
        for case in range(config.PROPERTY_CASES):
            p = rng.choice((2, 3))
            i, j = rng.choice(lambda_pairs(p))
            if (p, i, j) not in braidings:
                braidings[(p, i, j)] = braiding(make_two_dim(context_init(p), i, j), check=False)
            c = braidings[(p, i, j)]
            perm = tuple(rng.sample(range(5), 5))
            word = random_reduced_word(perm, rng)
            self.assertEqual(len(word), inversion_count(perm), case)
            ref = braid_operator(c, 5, next(reduced_words(perm)))
            self.assertEqual(braid_operator(c, 5, word), ref, (case, perm, word))


class TestSymmetrizer(unittest.TestCase):
    """Test the recursive symmetrizer against the sum over S_n"""

    def test_recursion_matches_literal_sum(self):
        """Test Omega_n for n <= 4 on V_{1,1} and n <= 3 on V_{1,1} + K_chi"""
        ctx = context_init(2)
        c = braiding(make_two_dim(ctx, 1, 1), check=False)
        for n in (1, 2, 3, 4):
            self.assertEqual(quantum_symmetrizer(c, n), literal_symmetrizer(c, n), n)
        c3 = braiding(make_module(ctx, [Vij(1, 1), Chi(1)]), check=False)
        for n in (2, 3):
            self.assertEqual(quantum_symmetrizer(c3, n), literal_symmetrizer(c3, n), n)

    def test_degree_two(self):
        """Test Omega_2 = id + c"""
        ctx = context_init(3)
        c = braiding(make_two_dim(ctx, 1, 2), check=False)
        self.assertEqual(quantum_symmetrizer(c, 2), SparseMatrix.identity(ctx, 4) + c.matrix)

    def test_odd_line_is_exterior(self):
        """Test Omega_2 = 0 on an odd one-dimensional module"""
        c = braiding(make_one_dim(context_init(2), 1), check=False)
        self.assertTrue(quantum_symmetrizer(c, 2).is_zero())

    def test_even_line_is_polynomial(self):
        """Test rank Omega_n = 1 on an even one-dimensional module"""
        c = braiding(make_one_dim(context_init(2), 0), check=False)
        for n in range(1, 6):
            self.assertEqual(rank(quantum_symmetrizer(c, n)), 1)
        dims = graded_dims(c, cutoff=6)
        self.assertEqual(dims.dims, [1] * 7)
        self.assertFalse(dims.complete)

    def test_ranks_match_quotient(self):
        """Test rank Omega_n equals the degreewise quotient dimension"""
        ctx = context_init(2)
        for s in ([Vij(2, 1)], [Vij(1, 1)], [Vij(1, 3)], [Vij(1, 1), Chi(1)]):
            c = braiding(make_module(ctx, s), check=False)
            cutoff = 5 if c.dim == 2 else 4
            ranks = symmetrizer_ranks(c, cutoff)
            dims = graded_dims(c, cutoff=cutoff).dims
            for n, r in ranks.items():
                self.assertEqual(dims[n] if n < len(dims) else 0, r, (s, n))

    def test_rank_invariant_under_rescaling(self):
        """Test a diagonal change of basis keeps every rank"""
        ctx = context_init(2)
        c = braiding(make_two_dim(ctx, 1, 1), check=False)
        scaled = c.conjugated([ctx.from_int(2), ctx.theta])
        for n in (2, 3, 4):
            self.assertEqual(rank(quantum_symmetrizer(c, n)), rank(quantum_symmetrizer(scaled, n)))


class TestSkewDerivations(unittest.TestCase):
    """Test skew-derivations and the ideal they cut out"""

    def test_degree_one(self):
        """Test d_f(v) = f(v)"""
        ctx = context_init(2)
        c = braiding(make_two_dim(ctx, 2, 1), check=False)
        self.assertEqual(skew_derivation(c, 0, {(0,): ctx.one}), {(): ctx.one})
        self.assertEqual(skew_derivation(c, 1, {(0,): ctx.one}), {})

    def test_joint_kernel_is_symmetrizer_kernel(self):
        """Test both characterizations of J^2 agree for V_{1,1} at p = 2"""
        ctx = context_init(2)
        c = braiding(make_two_dim(ctx, 1, 1), check=False)
        joint = joint_kernel(c, 2)
        omega = kernel_elements(c, 2)
        self.assertEqual(len(joint), len(omega))
        self.assertEqual(len(omega), 2)
        for r in joint:
            self.assertTrue(in_nichols_ideal(c, r))

    def test_power_of_v2(self):
        """Test v2^N lies in J and v2^{N-1} does not, for V_{2,1} at p = 2"""
        ctx = context_init(2)
        c = braiding(make_two_dim(ctx, 2, 1), check=False)
        self.assertTrue(in_nichols_ideal(c, {(1, 1, 1, 1): ctx.one}))
        self.assertFalse(in_nichols_ideal(c, {(1, 1, 1): ctx.one}))


class TestQuadratic(unittest.TestCase):
    """Test quadratic relations against the scalar criterion"""

    def test_criterion_matches_kernel(self):
        """Test quad_criterion iff ker Omega_2 is nonzero"""
        for p in (2, 3):
            ctx = context_init(p)
            for i, j in lambda_pairs(p):
                relations = quadratic_relations(make_two_dim(ctx, i, j))
                self.assertEqual(quad_criterion(ctx, i, j), len(relations) > 0, (p, i, j))

    def test_lambda_one_relations(self):
        """Test v1^2 and v1v2 + xi^-1 v2v1 lie in J for V_{2,1} at p = 2"""
        ctx = context_init(2)
        c = braiding(make_two_dim(ctx, 2, 1), check=False)
        self.assertTrue(in_nichols_ideal(c, {(0, 0): ctx.one}))
        self.assertTrue(in_nichols_ideal(c, linear_combination(ctx, [(1, (0, 1)), (ctx.xi_power(-1), (1, 0))])))

    def test_lambda_two_relations(self):
        """Test v1v2 + v2v1 and v2^2 + (theta xi^2)^-2 v1^2 lie in J for V_{1,1} at p = 2"""
        ctx = context_init(2)
        c = braiding(make_two_dim(ctx, 1, 1), check=False)
        scale = ctx.theta * ctx.xi_power(2)
        scale = (scale * scale).inverse()
        self.assertTrue(in_nichols_ideal(c, linear_combination(ctx, [(1, (0, 1)), (1, (1, 0))])))
        self.assertTrue(in_nichols_ideal(c, linear_combination(ctx, [(1, (1, 1)), (scale, (0, 0))])))

    def test_no_quadratic_relations(self):
        """Test J^2 = 0 for V_{1,2} at p = 3"""
        ctx = context_init(3)
        self.assertFalse(quad_criterion(ctx, 1, 2))
        self.assertEqual(quadratic_relations(make_two_dim(ctx, 1, 2)), [])


class TestGradedDims(unittest.TestCase):
    """Test dimensions of finite Nichols algebras"""

    def test_v21_at_p2(self):
        """Test dims [1, 2, 2, 2, 1] for V_{2,1} at p = 2"""
        c = braiding(make_two_dim(context_init(2), 2, 1), check=False)
        dims = graded_dims(c)
        self.assertTrue(dims.complete)
        self.assertEqual(dims.dims, [1, 2, 2, 2, 1])
        self.assertEqual(dims.total, 8)

    def test_exterior(self):
        """Test dim 4 for K_chi + K_chi^3 at p = 2"""
        c = braiding(make_module(context_init(2), [Chi(1), Chi(3)]), check=False)
        dims = graded_dims(c)
        self.assertEqual(dims.dims, [1, 2, 1])
        self.assertEqual(dims.total, 4)

    def test_quadratic_totals(self):
        """Test total 2N for every simple with quadratic relations at p = 2, 3"""
        for p in (2, 3):
            ctx = context_init(p)
            for i, j in lambda_pairs(p):
                if not quad_criterion(ctx, i, j):
                    continue
                pres = quadratic_presentation(ctx, i, j)
                dims = graded_dims(braiding(make_two_dim(ctx, i, j), check=False))
                self.assertEqual(dims.total, pres.profile.claimed_dim, (p, i, j))

    def test_g3_total(self):
        """Test dim 18 for V_{1,2} at p = 3"""
        ctx = context_init(3)
        dims = graded_dims(braiding(make_two_dim(ctx, 1, 2), check=False))
        self.assertEqual(dims.total, 18)
        self.assertEqual(g3_presentation(ctx, 1, 2).profile.claimed_dim, 18)

    def test_pair_total(self):
        """Test dim 128 for V_{1,1} + V_{1,3} at p = 2"""
        c = braiding(make_module(context_init(2), [Vij(1, 1), Vij(1, 3)]), check=False)
        self.assertEqual(graded_dims(c).total, 128)

    def test_dual_symmetry(self):
        """Test B(V) and B(V*) have equal graded dims for every two-dimensional simple at p = 2"""
        ctx = context_init(2)
        for i, j in lambda_pairs(2):
            m = make_two_dim(ctx, i, j)
            left = graded_dims(braiding(m, check=False), cutoff=6)
            right = graded_dims(braiding(dual(m), check=False), cutoff=6)
            self.assertEqual(left.dims, right.dims, (i, j))


class TestPresentations(unittest.TestCase):
    """Test verify_presentation"""

    def test_lambda_one_presentation(self):
        """Test the V_{2,1} presentation at p = 2 passes with total 8"""
        ctx = context_init(2)
        pres = quadratic_presentation(ctx, 2, 1)
        report = verify_presentation(braiding(make_two_dim(ctx, 2, 1), check=False), pres)
        self.assertEqual(report['total'], 8)
        self.assertEqual(pres.profile.n_value, 4)

    def test_lambda_two_presentation(self):
        """Test the V_{1,3} presentation at p = 2 passes"""
        ctx = context_init(2)
        pres = quadratic_presentation(ctx, 1, 3)
        report = verify_presentation(braiding(make_two_dim(ctx, 1, 3), check=False), pres)
        self.assertEqual(report['total'], pres.profile.claimed_dim)

    def test_dropped_power_relation(self):
        """Test removing v2^N gives a dimension mismatch in degree N"""
        ctx = context_init(2)
        full = quadratic_presentation(ctx, 2, 1)
        keep = [k for k, name in enumerate(full.names) if name != 'v2^N']
        pres = NicholsPresentation(full.profile, [full.relations[k] for k in keep], [full.names[k] for k in keep])
        with self.assertRaises(DimMismatch) as caught:
            verify_presentation(braiding(make_two_dim(ctx, 2, 1), check=False), pres)
        self.assertEqual(caught.exception.degree, 4)


class TestBraidedNichols(unittest.TestCase):
    """Test B(V) # H built from the computed quotient"""

    def test_bosonization(self):
        """Test B(V_{2,1}) # H at p = 2 has dim 64 and is a Hopf algebra"""
        ctx = context_init(2)
        boson = nichols_bosonization(make_two_dim(ctx, 2, 1))
        self.assertEqual(boson.dim, 64)
        report = verify_hopf(boson)
        self.assertTrue(report['passed'], report['checks'])

    def test_quotient_products(self):
        """Test v1 v1 = 0 and v2^4 = 0 in the quotient"""
        ctx = context_init(2)
        quotient = NicholsQuotient(braiding(make_two_dim(ctx, 2, 1), check=False)).build()
        self.assertTrue(quotient.is_zero({(0, 0): ctx.one}))
        self.assertTrue(quotient.is_zero({(1, 1, 1, 1): ctx.one}))
        self.assertFalse(quotient.is_zero({(1, 1, 1, 0): ctx.one}))


if __name__ == '__main__':
    unittest.main()
