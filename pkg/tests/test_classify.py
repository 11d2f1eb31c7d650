#!/usr/bin/env python3
"""
Test the index sets, the congruence solver and the classification reports
"""

import unittest
import sys
import os

import ujson

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from classify import (
    EXECUTED, SYSTEMS, TRIVIAL, ReportOptions, accepted_solutions, classification_report, cross_check_verdicts,
    hopf_families, lambda_sets, solve_congruence_systems,
)
from rewrite import in_lambda_four
from scalar import context_init
from utils.errors import UnsupportedP
from ydmod import FINITE, Vij, finiteness_verdict


def as_set(points):
    return {tuple(x) for x in points}


def summand_tuple(s):
    return (s['kind'], s['i'], s['j']) if s['kind'] == 'V' else (s['kind'], s['k'])


def two_summand_objects(report):
    return {tuple(sorted(summand_tuple(s) for s in e['summands']))
            for e in report['nichols'] if len(e['summands']) == 2}


def expected_prime_pairs(p):
    """Finite B(V + W) over H_{p,-1}, p an odd prime above 3, with V two-dimensional and no K_chi^p"""
    odd = [j for j in range(1, 2 * p, 2) if j != p]
    even = list(range(2, 2 * p, 2))
    pairs = [(('V', p, j), ('chi', 2 * p - 1)) for j in odd]
    pairs += [(('V', p - 1, j), ('chi', 1)) for j in even]
    pairs += [(('V', p, j), ('V', p, 2 * p - j)) for j in odd]
    pairs += [(('V', p - 1, j), ('V', p - 1, 2 * p - j)) for j in even]
    return {tuple(sorted(pair)) for pair in pairs}


class TestIndexSets(unittest.TestCase):
    """Test Lambda_p and its subfamilies"""

    def test_lambda_size(self):
        """Test |Lambda_p| = 4p^2 - 2p"""
        for p in range(2, 13):
            with self.subTest(p=p):
                self.assertEqual(len(lambda_sets(context_init(p)).lam), 4 * p * p - 2 * p)

    def test_lambda_three_small(self):
        """Test Lambda^3 at p = 2 and p = 3"""
        self.assertEqual(lambda_sets(context_init(2)).lambda3, {(1, 1), (1, 3)})
        self.assertEqual(lambda_sets(context_init(3)).lambda3, set())

    def test_lambda_three_parity(self):
        """Test Lambda^3 is nonempty exactly when p is even and p/2 is odd"""
        for p in range(2, 11):
            with self.subTest(p=p):
                sets = lambda_sets(context_init(p))
                self.assertEqual(bool(sets.lambda3), p % 2 == 0 and (p // 2) % 2 == 1)
                self.assertTrue(sets.lambda3 <= sets.lambda2)

    def test_lambda_one_two_at_three(self):
        """Test Lambda^1 and Lambda^2 at p = 3"""
        sets = lambda_sets(context_init(3))
        self.assertEqual(sets.lambda1, {(3, 1), (3, 5)})
        self.assertEqual(sets.lambda2, {(2, 2), (2, 4)})

    def test_quadratic_lists_at_four(self):
        """Test the quadratic objects listed for p = 4"""
        sets = lambda_sets(context_init(4))
        self.assertEqual(sets.lambda1, {(2, 2), (2, 6), (6, 2), (6, 6), (4, 1), (4, 3), (4, 5), (4, 7)})
        self.assertEqual(sets.lambda2 - sets.lambda3,
                         {(5, 2), (5, 6), (1, 2), (1, 6), (3, 3), (3, 1), (3, 7), (3, 5)})

    def test_lambda_four_matches_congruences(self):
        """Test the scalar evaluation of Lambda^4 against its congruences"""
        for p in (2, 3, 4, 5):
            ctx = context_init(p)
            sets = lambda_sets(ctx)
            expected = {(i, j) for i in range(2 * p) for j in range(2 * p) if in_lambda_four(ctx, i, j)}
            self.assertEqual(sets.lambda4, expected)
        self.assertEqual(lambda_sets(context_init(3)).lambda4, {(1, 0), (1, 2), (1, 4), (3, 0), (5, 0)})

    def test_to_dict_sizes(self):
        """Test the serialized sizes"""
        data = lambda_sets(context_init(2)).to_dict()
        self.assertEqual(data['sizes']['lambda'], 12)
        self.assertEqual(data['lambda3'], [[1, 1], [1, 3]])


class TestCongruences(unittest.TestCase):
    """Test the congruence systems and their closed forms"""

    @classmethod
    def setUpClass(cls):
        cls.solved = {p: solve_congruence_systems(context_init(p)) for p in (2, 3, 5)}

    def test_simple_family_at_seven(self):
        """Test ij = p at p = 7"""
        record = solve_congruence_systems(context_init(7))['2-1']
        self.assertEqual(as_set(record['solutions']), {(7, j) for j in (1, 3, 5, 9, 11, 13)})
        self.assertTrue(record['agrees'])

    def test_cube_root_family_at_three(self):
        """Test the p = 3 cube-root solutions"""
        record = self.solved[3]['2-4/5']
        self.assertEqual(as_set(record['solutions']), {(1, 2), (1, 4), (4, 1), (4, 5)})

    def test_fifth_root_families_at_five(self):
        """Test the p = 5 solutions"""
        self.assertEqual(as_set(self.solved[5]['2-6']['solutions']), {(8, 2), (8, 4), (8, 6), (8, 8)})
        self.assertEqual(as_set(self.solved[5]['2-7']['solutions']), {(1, 1), (1, 3), (1, 7), (1, 9)})

    def test_closed_forms_agree(self):
        """Test every system, or its derived reading, agrees with the closed form at p = 2 and 3"""
        for p in (2, 3):
            for name, record in self.solved[p].items():
                with self.subTest(p=p, system=name):
                    source = record['reading'] or record
                    self.assertTrue(source['agrees'], source['discrepancy'])

    def test_printed_vertex_condition_reported(self):
        """Test the printed ij = 0 system is reported as a discrepancy"""
        record = self.solved[3]['21-1']
        self.assertFalse(record['agrees'])
        self.assertEqual(as_set(record['discrepancy']['missing']), {(3, 1, 5), (3, 5, 5)})
        self.assertEqual(as_set(record['reading']['solutions']), {(3, 1, 5), (3, 5, 5)})

    def test_printed_edge_condition_reported(self):
        """Test the printed (i+1)l system has extra solutions at p = 3"""
        record = self.solved[3]['22-2']
        self.assertFalse(record['agrees'])
        self.assertIn((2, 1, 2, 2), as_set(record['discrepancy']['extra']))
        self.assertTrue(record['reading']['agrees'])

    def test_no_closed_form_at_four(self):
        """Test closed forms are only compared for prime p"""
        solved = solve_congruence_systems(context_init(4))
        self.assertTrue(all(record['closed_form'] is None for record in solved.values()))
        self.assertTrue(all(record['agrees'] is None for record in solved.values()))

    def test_solutions_are_finite(self):
        """Test every accepted solution has a finite verdict"""
        for p in (2, 3):
            checks = cross_check_verdicts(context_init(p), self.solved[p])
            for name, check in checks.items():
                with self.subTest(p=p, system=name):
                    self.assertEqual(check['not_finite'], [])

    def test_simple_solutions_cover_finite_simples(self):
        """Test the finite V_{i,j} are exactly the solutions of the simple systems"""
        for p in (2, 3, 5):
            ctx = context_init(p)
            solutions = set()
            for system in SYSTEMS:
                if system.shape == 'simple':
                    solutions |= set(accepted_solutions(self.solved[p][system.name]))
            finite = {(i, j) for i, j in lambda_sets(ctx).lam
                      if finiteness_verdict(ctx, [Vij(i, j)]).kind == FINITE}
            with self.subTest(p=p):
                self.assertEqual(finite, solutions)


class TestClassificationReport(unittest.TestCase):
    """Test the assembled classification reports"""

    @classmethod
    def setUpClass(cls):
        cls.report2 = classification_report(context_init(2))

    def test_p2_families(self):
        """Test the three families over H_{2,-1}"""
        self.assertEqual(hopf_families(self.report2), {
            'exterior': ['K_chi^1', 'K_chi^3'],
            'lambda3': ['V_{1,1}', 'V_{1,3}'],
            'quadratic-lambda1': ['V_{2,1}', 'V_{2,3}'],
        })

    def test_p2_dimensions(self):
        """Test the Hopf dimensions 8p, 8pN_1 and 32p"""
        dims = {h['object']: h['dim'] for h in self.report2['hopf_classification']}
        self.assertEqual(dims, {'K_chi^1': 16, 'K_chi^3': 16, 'V_{2,1}': 64, 'V_{2,3}': 64,
                                'V_{1,1}': 64, 'V_{1,3}': 64})

    def test_p2_executed(self):
        """Test every simple entry and every Hopf entry is executed at p = 2"""
        for entry in self.report2['nichols']:
            if len(entry['summands']) == 1:
                self.assertEqual(entry['evidence_level'], EXECUTED, entry['object'])
        for h in self.report2['hopf_classification']:
            self.assertEqual(h['evidence_level'], EXECUTED, h['object'])

    def test_p2_deformation_line(self):
        """Test the deformed family carries a parameter line and its PBW dimensions"""
        deformed = [h for h in self.report2['hopf_classification'] if h['reason'] == 'lambda3']
        for h in deformed:
            self.assertEqual(h['family'], 'A3')
            self.assertEqual(h['basic'], 'mu = 0 only')
            self.assertIn('mu', h['parameters'])
            self.assertEqual(h['certificate']['pbw_dims'], {'0': 64, '1': 64})
        self.assertIn('parameter-isomorphism', self.report2['open_flags'])

    def test_p2_excluded_family(self):
        """Test V + K_chi over Lambda^3 is flagged with the excluded family"""
        flagged = [h for h in self.report2['hopf_semisimple'] if h['reason'] == 'lambda3-chi-one']
        self.assertTrue(flagged)
        for h in flagged:
            self.assertEqual(h['family'], 'A21')
            self.assertIn('excluded', h)

    def test_p2_counts(self):
        """Test the simple-module counts and schema"""
        self.assertEqual(self.report2['schema'], 1)
        self.assertEqual(self.report2['simple_modules'], {'one_dim': 4, 'two_dim': 12})
        self.assertIsNone(self.report2['large_prime'])

    def test_dimensions_divisible(self):
        """Test Hopf dimensions are multiples of 4p"""
        for h in self.report2['hopf_classification'] + self.report2['hopf_semisimple']:
            if h['dim'] is not None:
                self.assertEqual(h['dim'] % 8, 0, h['object'])

    def test_p3_items(self):
        """Test the six items over H_{3,-1}"""
        report = classification_report(context_init(3), ReportOptions(max_summands=1))
        self.assertEqual(hopf_families(report), {
            'b2': ['V_{1,1}', 'V_{1,5}', 'V_{4,2}', 'V_{4,4}'],
            'exterior': ['K_chi^1', 'K_chi^3', 'K_chi^5'],
            'g3': ['V_{4,1}', 'V_{4,5}'],
            'lambda4': ['V_{1,2}', 'V_{1,4}'],
            'quadratic-lambda1': ['V_{3,1}', 'V_{3,5}'],
            'quadratic-lambda2': ['V_{2,2}', 'V_{2,4}'],
        })
        dims = {h['object']: h['dim'] for h in report['hopf_classification']}
        self.assertEqual(dims['V_{1,2}'], 216)
        self.assertEqual(dims['V_{4,1}'], 216)
        self.assertEqual(dims['V_{3,1}'], 72)
        for h in report['hopf_classification']:
            self.assertEqual(h['evidence_level'], EXECUTED, h['object'])

    def test_p4_quadratic_objects(self):
        """Test the quadratic objects over H_{4,-1} lift trivially"""
        report = classification_report(context_init(4), ReportOptions(execute=False, max_summands=1))
        families = hopf_families(report)
        self.assertEqual(len(families['quadratic-lambda1']), 8)
        self.assertEqual(len(families['quadratic-lambda2']), 8)
        self.assertNotIn('lambda3', families)
        quadratic = [h for h in report['hopf_classification'] if h['reason'].startswith('quadratic')]
        self.assertTrue(all(h['lifting'] == TRIVIAL for h in quadratic))

    def test_p5_open_objects(self):
        """Test the fifth-root objects over H_{5,-1} stay open"""
        report = classification_report(context_init(5), ReportOptions(execute=False, max_summands=1))
        families = hopf_families(report)
        self.assertEqual(families['undetermined'],
                         sorted(f'V_{{{i},{j}}}' for i, j in [(1, 1), (1, 3), (1, 7), (1, 9),
                                                              (8, 2), (8, 4), (8, 6), (8, 8)]))
        self.assertEqual(len(families['b2']), 8)
        self.assertEqual(report['scope'], 'certified')

    def test_p7_large_prime_shape(self):
        """Test every lifting over H_{7,-1} is trivial"""
        report = classification_report(context_init(7), ReportOptions(execute=False))
        self.assertEqual(report['scope'], 'congruence')
        self.assertTrue(report['large_prime']['all_trivial'])
        simples = [e for e in report['nichols'] if len(e['summands']) == 1 and e['summands'][0]['kind'] == 'V']
        by_i = {}
        for e in simples:
            by_i.setdefault(e['summands'][0]['i'], []).append(e['summands'][0]['j'])
        self.assertEqual(sorted(by_i), [3, 6, 7, 10])
        self.assertEqual(sorted(by_i[7]), [1, 3, 5, 9, 11, 13])
        self.assertEqual(sorted(by_i[6]), [2, 4, 6, 8, 10, 12])
        self.assertEqual(sorted(by_i[3]), [1, 3, 5, 9, 11, 13])
        self.assertEqual(sorted(by_i[10]), [2, 4, 6, 8, 10, 12])

    def test_prime_pair_lists(self):
        """Test the finite sums of two simples over H_{5,-1} and H_{7,-1}"""
        for p in (5, 7):
            with self.subTest(p=p):
                report = classification_report(context_init(p), ReportOptions(execute=False, liftings=False))
                pairs = two_summand_objects(report)
                simple_v = {summand_tuple(e['summands'][0]) for e in report['nichols']
                            if len(e['summands']) == 1 and e['summands'][0]['kind'] == 'V'}
                padded = {pair for pair in pairs if ('chi', p) in pair}
                with_v = {pair for pair in pairs - padded if any(s[0] == 'V' for s in pair)}
                self.assertEqual(with_v, expected_prime_pairs(p))
                # K_chi^p is not joined to any finite simple
                self.assertEqual({pair for pair in padded if any(s[0] == 'V' for s in pair)},
                                 {tuple(sorted([('chi', p), v])) for v in simple_v})
                characters = pairs - with_v - {pair for pair in padded if any(s[0] == 'V' for s in pair)}
                self.assertEqual(len(characters), p * (p + 1) // 2)
                self.assertTrue(all(s[0] == 'chi' and s[1] % 2 for pair in characters for s in pair))

    def test_p5_sums_with_open_simples(self):
        """Test the fifth-root objects over H_{5,-1} only pair with K_chi^5"""
        report = classification_report(context_init(5), ReportOptions(execute=False, liftings=False))
        open_v = [('V', 1, j) for j in (1, 3, 7, 9)] + [('V', 8, j) for j in (2, 4, 6, 8)]
        for pair in two_summand_objects(report):
            for v in open_v:
                if v in pair:
                    self.assertEqual(pair, tuple(sorted([('chi', 5), v])))

    def test_unsupported_p(self):
        """Test composite p other than 4 is rejected"""
        for p in (6, 9):
            with self.subTest(p=p):
                with self.assertRaises(UnsupportedP):
                    classification_report(context_init(p))

    def test_deterministic(self):
        """Test two runs serialize identically"""
        options = ReportOptions(execute=False)
        first = ujson.dumps(classification_report(context_init(2), options), sort_keys=True)
        second = ujson.dumps(classification_report(context_init(2), options), sort_keys=True)
        self.assertEqual(first, second)


if __name__ == '__main__':
    unittest.main()
