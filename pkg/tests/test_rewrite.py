#!/usr/bin/env python3
"""
Test the rewriting engine, the PBW enumeration and the lifting families
"""

import unittest
import sys
import os
import random

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from scalar import context_init
from nichols import nichols_bosonization
from rewrite import (
    Letter, Presentation, build_lifting, close_ambiguities, dimension, generator_isomorphism,
    hopf_check_presented, in_lambda_three, irreducible_words, overlaps_resolvable, presentation_from_dict,
    presented_hopf_algebra, radford_presentation, random_normal_form,
)
from utils.errors import BialgebraAxiomFailed, CapExceeded, FamilyConstraintViolated, StepCapExceeded
from ydmod import make_two_dim
import config


def rule_map(pres):
    return {lhs: rule.rhs for lhs, rule in pres.rules.items()}


class TestRadfordPresentation(unittest.TestCase):
    """Test the presentation of H_{p,-1}"""

    def setUp(self):
        self.ctx = context_init(2)
        self.pres = radford_presentation(self.ctx).presentation

    def test_ab_rewrites_to_ba(self):
        """Test ba = xi ab, read as ab -> xi^-1 ba"""
        nf = self.pres.normal_form(self.pres.word('ab'))
        self.assertEqual(nf, {self.pres.word('ba'): self.ctx.xi_power(-1)})

    def test_b_squared(self):
        """Test b^2 reduces to zero"""
        self.assertEqual(self.pres.normal_form(self.pres.word('bb')), {})

    def test_a_order(self):
        """Test a^{2p} = 1"""
        self.assertEqual(self.pres.normal_form(self.pres.word('aaaaa')), {self.pres.word('a'): self.ctx.one})

    def test_basis(self):
        """Test the irreducible words are b^u a^t"""
        for p in (2, 3):
            pres = radford_presentation(context_init(p)).presentation
            self.assertTrue(overlaps_resolvable(pres)['resolvable'])
            basis = irreducible_words(pres)
            self.assertEqual(len(basis), 4 * p)
            for w in basis.words:
                self.assertRegex(pres.order.text(w), r'^(1|b?a*)$')

    def test_hopf(self):
        """Test the presented H_{p,-1} is a Hopf algebra"""
        report = hopf_check_presented(radford_presentation(self.ctx))
        self.assertTrue(report['passed'])
        self.assertEqual(report['dim'], 8)

    def test_step_cap(self):
        """Test a tiny step cap stops the reduction"""
        pres = Presentation(self.ctx, 'capped', [Letter('b', weight=0), Letter('a', weight=0, rank=1)], step_cap=2)
        pres.add_relation('ba', pres.combo([(1, 'ba'), (-self.ctx.xi, 'ab')]))
        with self.assertRaises(StepCapExceeded):
            pres.normal_form(pres.word('aaabbb'))

    def test_non_decreasing_rule_rejected(self):
        """Test a rule whose right side is not smaller is refused"""
        with self.assertRaises(ValueError):
            self.pres.add_rule('bad', self.pres.word('b'), {self.pres.word('ba'): self.ctx.one})


class TestLambdaThree(unittest.TestCase):
    """Test the lifting family over Lambda^3"""

    def setUp(self):
        self.ctx = context_init(2)

    def test_lambda_three_at_two(self):
        """Test Lambda^3 for p = 2 is {(1,1), (1,3)}"""
        found = [(i, j) for i in range(4) for j in range(4) if in_lambda_three(self.ctx, i, j)]
        self.assertEqual(found, [(1, 1), (1, 3)])

    def test_lambda_three_empty_for_odd_p(self):
        """Test Lambda^3 is empty for p = 3"""
        ctx = context_init(3)
        self.assertFalse(any(in_lambda_three(ctx, i, j) for i in range(6) for j in range(6)))

    def test_rejects_outside(self):
        """Test (1,2) is refused with the failing congruence"""
        with self.assertRaises(FamilyConstraintViolated):
            build_lifting(self.ctx, 'A3', 1, 2)

    def test_dimension(self):
        """Test dim = 32p for every sampled mu"""
        for i, j in ((1, 1), (1, 3)):
            for mu in (0, 1, -1, 2):
                lifting = build_lifting(self.ctx, 'A3', i, j, mu=mu)
                self.assertTrue(overlaps_resolvable(lifting.presentation)['resolvable'])
                self.assertEqual(dimension(lifting.presentation), 64)

    def test_basis_shape(self):
        """Test irreducible words are y^r x^s b^u a^t with r, u < 2 and s, t < 4"""
        pres = build_lifting(self.ctx, 'A3', 1, 1, mu=1).presentation
        for w in irreducible_words(pres).words:
            text = pres.order.text(w)
            if text == '1':
                continue
            stripped = text.lstrip('y')
            self.assertLessEqual(len(text) - len(stripped), 1)
            rest = stripped.lstrip('x')
            self.assertLessEqual(len(stripped) - len(rest), 3)
            tail = rest.lstrip('b')
            self.assertLessEqual(len(rest) - len(tail), 1)
            self.assertEqual(tail.strip('a'), '')

    def test_mu_zero_is_bosonization(self):
        """Test the mu = 0 rules coincide with those of B(V_{1,1})#H"""
        a3 = build_lifting(self.ctx, 'A3', 1, 1, mu=0).presentation
        bos = build_lifting(self.ctx, 'Bos', 1, 1).presentation
        self.assertEqual(rule_map(a3), rule_map(bos))

    def test_associativity_sample(self):
        """Test (xy)y and x(y^2) reduce to the same element"""
        pres = build_lifting(self.ctx, 'A3', 1, 1, mu=1).presentation
        one = self.ctx.one
        left = pres.multiply(pres.normal_form(pres.word('xy')), {pres.word('y'): one})
        right = pres.multiply({pres.word('x'): one}, pres.normal_form(pres.word('yy')))
        self.assertEqual(left, right)

    def test_corrupted_relation_unresolved(self):
        """Test xy - yx = mu ba^-1 leaves an unresolved ambiguity"""
        lifting = build_lifting(self.ctx, 'A3', 1, 1, mu=1)
        pres = lifting.presentation
        ctx = self.ctx
        broken = Presentation(ctx, 'broken', pres.order.letters)
        for name, combo in pres.relations:
            if name == 'xy':
                combo = broken.combo([(1, 'xy'), (-1, 'yx'), (-1, 'baaa')])
            broken.add_relation(name, combo)
        report = overlaps_resolvable(broken)
        self.assertFalse(report['resolvable'])
        self.assertTrue(report['failures'])
        self.assertIn('left', report['failures'][0])

    def test_idempotent(self):
        """Test normal_form(normal_form(w)) = normal_form(w)"""
        pres = build_lifting(self.ctx, 'A3', 1, 3, mu=1).presentation
        rng = random.Random(config.RANDOM_SEED)
        for _ in range(config.PROPERTY_CASES):
            w = tuple(rng.randrange(len(pres.order)) for _ in range(rng.randint(0, 6)))
            nf = pres.normal_form(w)
            self.assertEqual(pres.normal_form(nf), nf)

    def test_random_strategy_confluent(self):
        """Test random reduction orders reach the leftmost-first normal form"""
        pres = build_lifting(self.ctx, 'A3', 1, 1, mu=1).presentation
        rng = random.Random(config.RANDOM_SEED + 1)
        for _ in range(config.PROPERTY_CASES):
            w = tuple(rng.randrange(len(pres.order)) for _ in range(rng.randint(1, 6)))
            self.assertEqual(random_normal_form(pres, w, rng), pres.normal_form(w))

    def test_serialization_round_trip(self):
        """Test a presentation rebuilt from its dict has the same rules"""
        pres = build_lifting(self.ctx, 'A3', 1, 1, mu=1).presentation
        copy = presentation_from_dict(pres.to_dict())
        self.assertEqual(rule_map(copy), rule_map(pres))
        self.assertEqual(copy.to_dict(), pres.to_dict())


class TestLiftingHopf(unittest.TestCase):
    """Test the Hopf structure of the presented liftings"""

    def setUp(self):
        self.ctx = context_init(2)

    def test_hopf_axioms(self):
        """Test A_{1,1}(mu) is a Hopf algebra for mu in {0, 1}"""
        for mu in (0, 1):
            report = hopf_check_presented(build_lifting(self.ctx, 'A3', 1, 1, mu=mu))
            self.assertTrue(report['passed'])
            self.assertEqual(report['dim'], 64)
            self.assertIn('x', report['antipode_images'])

    def test_corrupted_coproduct(self):
        """Test dropping the ba^{-1-j} term of Delta(x) breaks the bialgebra axioms"""
        lifting = build_lifting(self.ctx, 'A3', 1, 1, mu=1)
        x = lifting.presentation.word('x')
        y = lifting.presentation.word('y')
        lifting.coproducts[x[0]] = {k: s for k, s in lifting.coproducts[x[0]].items() if k[1] != y}
        with self.assertRaises(BialgebraAxiomFailed):
            hopf_check_presented(lifting)

    def test_iso_with_bosonization(self):
        """Test A_{1,1}(0) maps isomorphically onto B(V_{1,1})#H on generators"""
        lifting = build_lifting(self.ctx, 'A3', 1, 1, mu=0)
        target = nichols_bosonization(make_two_dim(self.ctx, 1, 1))
        one = self.ctx.one
        dim_h = 4 * self.ctx.p
        images = {'x': {dim_h: one}, 'y': {2 * dim_h: one}, 'a': {1: one}, 'b': {2 * self.ctx.p: one}}
        report = generator_isomorphism(lifting, target, images)
        self.assertTrue(report['passed'])
        self.assertTrue(report['bijective'])

    def test_cap(self):
        """Test materializing above the executed cap is refused"""
        with self.assertRaises(CapExceeded):
            presented_hopf_algebra(build_lifting(self.ctx, 'A3', 1, 1), cap=32)


class TestOtherFamilies(unittest.TestCase):
    """Test the bosonization, Lambda^4 and pair families"""

    def test_bosonization_dimension(self):
        """Test B(V_{2,1})#H has dimension 2N * 4p at p = 2"""
        ctx = context_init(2)
        lifting = build_lifting(ctx, 'Bos', 2, 1)
        self.assertTrue(overlaps_resolvable(lifting.presentation)['resolvable'])
        self.assertEqual(dimension(lifting.presentation), 64)
        self.assertEqual(lifting.claimed_dim, 64)

    def test_lambda_four_dimension(self):
        """Test the Lambda^4 lifting at p = 3, (i,j) = (1,2) has dimension 72p"""
        ctx = context_init(3)
        for mu in (0, 1):
            lifting = build_lifting(ctx, 'A4', 1, 2, mu=mu)
            self.assertTrue(lifting.closure.stable)
            self.assertTrue(overlaps_resolvable(lifting.presentation)['resolvable'])
            self.assertEqual(dimension(lifting.presentation), 216)

    def test_lambda_four_rejects(self):
        """Test congruence failures and xi^{-ij} = 1 are refused"""
        ctx = context_init(3)
        with self.assertRaises(FamilyConstraintViolated):
            build_lifting(ctx, 'A4', 2, 1)
        with self.assertRaises(FamilyConstraintViolated):
            build_lifting(ctx, 'A4', 1, 0)

    def test_pair_dimension(self):
        """Test the two-summand lifting at p = 2 has dimension 512p"""
        ctx = context_init(2)
        lifting = build_lifting(ctx, 'A33', mu=1, nu=1)
        self.assertTrue(lifting.closure.stable)
        self.assertEqual(lifting.params['l'], 3)
        self.assertIn('tx', [name for name, _ in lifting.presentation.relations])
        self.assertEqual(dimension(lifting.presentation), 1024)

    def test_pair_needs_p_two_mod_four(self):
        """Test p = 4 has no pair family"""
        with self.assertRaises(FamilyConstraintViolated):
            build_lifting(context_init(4), 'A33')

    def test_excluded_family(self):
        """Test the family with an undetermined lower term is refused"""
        with self.assertRaises(FamilyConstraintViolated):
            build_lifting(context_init(2), 'A21', 1, 1)

    def test_unknown_family(self):
        """Test an unknown family name"""
        with self.assertRaises(ValueError):
            build_lifting(context_init(2), 'B7', 1, 1)

    def test_closure_is_noop_on_confluent_system(self):
        """Test closing an already confluent system adds nothing"""
        pres = build_lifting(context_init(2), 'A3', 1, 1, mu=1).presentation
        before = rule_map(pres)
        report = close_ambiguities(pres)
        self.assertTrue(report.stable)
        self.assertEqual(report.added, [])
        self.assertEqual(rule_map(pres), before)


if __name__ == '__main__':
    unittest.main()
