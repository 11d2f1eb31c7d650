#!/usr/bin/env python3
"""
Test the simple Yetter-Drinfeld modules, their braidings, D-modules, Dynkin
diagrams and finiteness verdicts
"""

import unittest
import sys
import os

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from scalar import context_init
from exactla import vec_equal
from hopf import drinfeld_double
from ydmod import (
    Chi, Vij, braiding, direct_sum, dual, dynkin_diagram, enumerate_simples, finiteness_verdict,
    in_lambda, make_D_simple, make_module, make_one_dim, make_one_dim_grA, make_two_dim, make_two_dim_grA,
    match_rank_two, parse_summand, represents_double, two_dim_scalars, yd_from_dmod, yd_to_dmod,
)
from ydmod.verdict import FINITE, INFINITE, UNDETERMINED, dimension_formula
from utils.errors import NotInLambda


def all_simples(p):
    n = 2 * p
    return [Chi(k) for k in range(n)] + [Vij(i, j) for i in range(n) for j in range(n) if in_lambda(p, i, j)]


class TestSummands(unittest.TestCase):
    """Test summand labels and parsing"""

    def test_parse(self):
        """Test the accepted spellings"""
        self.assertEqual(parse_summand('V(1,3)'), Vij(1, 3))
        self.assertEqual(parse_summand('V2,1'), Vij(2, 1))
        self.assertEqual(parse_summand('chi^3'), Chi(3))
        self.assertEqual(parse_summand('chi1'), Chi(1))

    def test_lambda(self):
        """Test |Lambda_p| = 4p^2 - 2p"""
        for p in range(2, 8):
            count = sum(1 for i in range(2 * p) for j in range(2 * p) if in_lambda(p, i, j))
            self.assertEqual(count, 4 * p * p - 2 * p)

    def test_not_in_lambda(self):
        """Test V_{i,j} with pi = j mod 2p is rejected"""
        with self.assertRaises(NotInLambda):
            make_two_dim(context_init(2), 1, 2)


class TestSimples(unittest.TestCase):
    """Test module, comodule and Yetter-Drinfeld axioms of the simples"""

    def test_all_simples_verify(self):
        """Test every simple at p = 2, 3 passes the checks"""
        for p in (2, 3):
            ctx = context_init(p)
            for s in all_simples(p):
                m = make_module(ctx, [s])
                self.assertTrue(m.verify()['passed'], (p, s))

    def test_direct_sum(self):
        """Test a sum keeps its summands and verifies"""
        ctx = context_init(2)
        m = direct_sum([make_two_dim(ctx, 1, 1), make_one_dim(ctx, 1)])
        self.assertEqual(m.dim, 3)
        self.assertEqual(m.summands, [Vij(1, 1), Chi(1)])
        self.assertTrue(m.verify()['passed'])

    def test_dual_partner(self):
        """Test V_{1,1}^* = V_{2,1} at p = 2"""
        ctx = context_init(2)
        md = dual(make_two_dim(ctx, 1, 1))
        self.assertEqual(md.summands, [Vij(2, 1)])

    def test_dual_one_dim(self):
        """Test K_{chi^k}^* = K_{chi^-k}"""
        ctx = context_init(3)
        self.assertEqual(dual(make_one_dim(ctx, 1)).summands, [Chi(5)])


class TestBraiding(unittest.TestCase):
    """Test braiding entries and the braid equation"""

    def test_braid_equation(self):
        """Test c1 c2 c1 = c2 c1 c2 for every simple at p = 2, 3"""
        for p in (2, 3):
            ctx = context_init(p)
            for s in all_simples(p):
                c = braiding(make_module(ctx, [s]), check=False)
                self.assertTrue(c.satisfies_braid_equation(), (p, s))
                self.assertTrue(c.is_invertible(), (p, s))

    def test_braid_equation_on_sum(self):
        """Test the braid equation on V_{1,1} + K_chi at p = 2"""
        ctx = context_init(2)
        c = braiding(make_module(ctx, [Vij(1, 1), Chi(1)]), check=False)
        self.assertTrue(c.satisfies_braid_equation())

    def test_one_dim_entry(self):
        """Test c(v (x) v) = (-1)^k v (x) v"""
        ctx = context_init(3)
        for k in range(6):
            c = braiding(make_one_dim(ctx, k), check=False)
            self.assertEqual(c.entry((0, 0), (0, 0)), ctx.from_int(ctx.sign(k)))

    def test_two_dim_entries(self):
        """Test the diagonal entries of c on V_{i,j}"""
        for p in (2, 3):
            ctx = context_init(p)
            theta_inv = ctx.theta.inverse()
            for s in all_simples(p):
                if not isinstance(s, Vij):
                    continue
                i, j = s.i, s.j
                c = braiding(make_two_dim(ctx, i, j), check=False)
                self.assertEqual(c.entry((0, 0), (0, 0)), ctx.xi_power(-i * j))
                self.assertEqual(c.entry((1, 1), (1, 1)), ctx.xi_power((i + 1) * (p - j)))
                tail = theta_inv * theta_inv * ctx.xi_power(-(i + 1) * (2 + j)) * (ctx.one + ctx.xi_power(p * i + j))
                self.assertEqual(c.entry((0, 0), (1, 1)), tail)


class TestDModules(unittest.TestCase):
    """Test the simple modules over the double"""

    def test_census(self):
        """Test 4 one-dimensional and 12 two-dimensional simples at p = 2"""
        census = enumerate_simples(context_init(2))
        self.assertEqual(census['one_dim'], 4)
        self.assertEqual(census['two_dim'], 12)
        self.assertEqual(census['total'], census['expected_total'])
        self.assertTrue(census['relations_ok'], census['failed'])
        self.assertTrue(census['pairwise_distinct'], census['collisions'])

    def test_census_p3(self):
        """Test 36 pairwise distinct simples at p = 3"""
        census = enumerate_simples(context_init(3), cross_check=False)
        self.assertEqual(census['total'], 36)
        self.assertTrue(census['pairwise_distinct'])

    def test_x_entry(self):
        """Test [x]_21 = theta xi^{p+1+i}((-1)^i - xi^j) after transport from the YD module"""
        ctx = context_init(3)
        p = ctx.p
        for i, j in ((1, 2), (2, 1), (4, 5)):
            dm = yd_to_dmod(make_two_dim(ctx, i, j))
            expected = ctx.theta * ctx.xi_power(p + 1 + i) * (ctx.from_int(ctx.sign(i)) - ctx.xi_power(j))
            self.assertEqual(dm.x.get(1, 0), expected)
            self.assertEqual(dm.x.get(0, 1), two_dim_scalars(ctx, i, j)[0])

    def test_transport_matches_simple(self):
        """Test yd_to_dmod reproduces the D-module matrices"""
        ctx = context_init(2)
        for s in all_simples(2):
            dm = yd_to_dmod(make_module(ctx, [s]))
            ref = make_D_simple(ctx, s)
            self.assertTrue(dm.g == ref.g and dm.x == ref.x, s)

    def test_round_trip(self):
        """Test yd_from_dmod recovers the coaction"""
        ctx = context_init(2)
        for s in (Vij(1, 1), Vij(2, 3), Chi(3)):
            back = yd_from_dmod(make_D_simple(ctx, s))
            ref = make_module(ctx, [s])
            for m in range(ref.dim):
                self.assertTrue(vec_equal(back.coact(m), ref.coact(m)), (s, m))

    def test_represents_double(self):
        """Test the simples are modules over the double at p = 2"""
        ctx = context_init(2)
        d = drinfeld_double(ctx)
        for s in (Vij(1, 1), Vij(3, 0), Chi(1)):
            self.assertTrue(represents_double(make_D_simple(ctx, s), d), s)


class TestGrA(unittest.TestCase):
    """Test the realizations over gr A"""

    def test_verify(self):
        """Test the e-basis structures are YD modules"""
        ctx = context_init(3)
        for s in all_simples(3):
            if isinstance(s, Vij):
                self.assertTrue(make_two_dim_grA(ctx, s.i, s.j).verify()['passed'], s)
            else:
                self.assertTrue(make_one_dim_grA(ctx, s.k).verify()['passed'], s)

    def test_braiding_entries(self):
        """Test c(e_u (x) e_w) on the rescaled basis"""
        ctx = context_init(2)
        p = ctx.p
        for i, j in ((1, 1), (2, 3), (3, 1)):
            c = braiding(make_two_dim_grA(ctx, i, j), check=False)
            sign = ctx.from_int(ctx.sign(i))
            self.assertEqual(c.entry((0, 0), (0, 0)), ctx.xi_power(-i * j))
            self.assertEqual(c.entry((1, 0), (0, 1)), sign * ctx.xi_power(-i * j))
            self.assertEqual(c.entry((1, 1), (1, 1)), ctx.xi_power((i + 1) * (p - j)))
            self.assertEqual(c.entry((0, 1), (1, 0)), ctx.xi_power(-j * (i + 1)))
            self.assertEqual(c.entry((1, 0), (1, 0)), ctx.xi_power(-i * j) + ctx.xi_power((i + 1) * (p - j)))
            self.assertTrue(c.satisfies_braid_equation())


class TestDynkin(unittest.TestCase):
    """Test vertex and edge labels"""

    def setUp(self):
        self.ctx = context_init(3)

    def test_single(self):
        """Test (-1) --xi^{pi-j}-- (xi^{-ij})"""
        diagram = dynkin_diagram(self.ctx, [Vij(1, 2)])
        self.assertEqual(diagram.q(0), 3)
        self.assertEqual(diagram.q(1), (-2) % 6)
        self.assertEqual(diagram.edge(0, 1), (3 - 2) % 6)

    def test_with_chi(self):
        """Test the chi^k vertex is joined to V_{i,j} by xi^{k(pi-j)} and never to X"""
        diagram = dynkin_diagram(self.ctx, [Vij(1, 2), Chi(5)])
        self.assertEqual(diagram.q(2), 3)
        self.assertEqual(diagram.edge(1, 2), (5 * 1) % 6)
        self.assertEqual(diagram.edge(0, 2), 0)

    def test_pair(self):
        """Test the edge between V_{i,j} and V_{k,l} is xi^{-kj-il}"""
        diagram = dynkin_diagram(self.ctx, [Vij(1, 2), Vij(2, 1)])
        self.assertEqual(diagram.edge(1, 2), (-(2 * 2) - (1 * 1)) % 6)

    def test_symmetric_in_order(self):
        """Test swapping the summands permutes the labels"""
        a = dynkin_diagram(self.ctx, [Vij(1, 2), Chi(1)])
        b = dynkin_diagram(self.ctx, [Chi(1), Vij(1, 2)])
        self.assertEqual(a.edge(1, 2), b.edge(1, 2))
        self.assertEqual(a.edge(0, 1), b.edge(0, 2))


class TestVerdict(unittest.TestCase):
    """Test finiteness verdicts against the known lists"""

    def finite_simples(self, p):
        ctx = context_init(p)
        return {(s.i, s.j) for s in all_simples(p)
                if isinstance(s, Vij) and finiteness_verdict(ctx, [s]).finite}

    def test_p2_single(self):
        """Test V_{1,1} is finite of dimension 8 at p = 2"""
        verdict = finiteness_verdict(context_init(2), [Vij(1, 1)])
        self.assertEqual(verdict.kind, FINITE)
        self.assertEqual(verdict.dim, 8)
        self.assertEqual(verdict.row, 'rank2/row2(1)')

    def test_p2_lists(self):
        """Test the finite simples at p = 2 are V_{1,j} and V_{2,j} for odd j"""
        self.assertEqual(self.finite_simples(2), {(1, 1), (1, 3), (2, 1), (2, 3)})

    def test_p2_sums(self):
        """Test the rank-three objects at p = 2"""
        ctx = context_init(2)
        for summands in ([Vij(1, 1), Chi(1)], [Vij(1, 3), Chi(1)], [Vij(2, 1), Chi(3)],
                         [Vij(1, 1), Vij(1, 3)], [Vij(2, 1), Vij(2, 3)]):
            verdict = finiteness_verdict(ctx, summands)
            self.assertEqual(verdict.kind, FINITE, summands)
            self.assertEqual(verdict.row, 'rank3/row8', summands)
        for summands in ([Vij(2, 1), Chi(1)], [Vij(1, 1), Chi(3)], [Vij(1, 1), Vij(1, 1)]):
            self.assertEqual(finiteness_verdict(ctx, summands).kind, INFINITE, summands)

    def test_p2_pair_dimension(self):
        """Test dim B(V_{1,1} + V_{1,3}) = 128"""
        verdict = finiteness_verdict(context_init(2), [Vij(1, 1), Vij(1, 3)])
        self.assertEqual(verdict.dim, 128)

    def test_unit_vertex(self):
        """Test V_{i,0} is infinite for every p, composite or not"""
        for p in (2, 3, 5, 6):
            ctx = context_init(p)
            for i in range(1, 2 * p, 2):
                verdict = finiteness_verdict(ctx, [Vij(i, 0)])
                self.assertEqual(verdict.kind, INFINITE, (p, i))
                self.assertEqual(verdict.row, 'infinite/unit-vertex')

    def test_row_two_at_seven(self):
        """Test V_{7,3} at p = 7 lies in row 2"""
        verdict = finiteness_verdict(context_init(7), [Vij(7, 3)])
        self.assertEqual(verdict.kind, FINITE)
        self.assertEqual(verdict.row, 'rank2/row2(2)')
        self.assertEqual(verdict.dim, 14)

    def test_p3_cube_root_family(self):
        """Test V_{1,2}, V_{1,4}, V_{4,1}, V_{4,5} at p = 3 have dimension 18"""
        ctx = context_init(3)
        for i, j in ((1, 2), (1, 4), (4, 1), (4, 5)):
            verdict = finiteness_verdict(ctx, [Vij(i, j)])
            self.assertEqual(verdict.kind, FINITE, (i, j))
            self.assertEqual(verdict.dim, 18, (i, j))

    def test_p4_list(self):
        """Test the 24 finite simples at p = 4"""
        expected = {(2, 2), (2, 6), (6, 2), (6, 6), (4, 1), (4, 3), (4, 5), (4, 7),
                    (5, 2), (5, 6), (1, 2), (1, 6), (3, 1), (3, 3), (3, 5), (3, 7),
                    (1, 1), (1, 3), (1, 5), (1, 7), (6, 1), (6, 3), (6, 5), (6, 7)}
        self.assertEqual(self.finite_simples(4), expected)

    def test_p5_fifth_roots(self):
        """Test the row-13 simples at p = 5"""
        ctx = context_init(5)
        for j in (1, 3, 7, 9):
            self.assertEqual(finiteness_verdict(ctx, [Vij(1, j)]).row, 'rank2/row13(2)')
        for j in (2, 4, 6, 8):
            self.assertEqual(finiteness_verdict(ctx, [Vij(8, j)]).row, 'rank2/row13(1)')

    def test_exterior(self):
        """Test sums of odd one-dimensional objects are exterior algebras"""
        ctx = context_init(3)
        verdict = finiteness_verdict(ctx, [Chi(1), Chi(3), Chi(5)])
        self.assertEqual(verdict.dim, 8)
        self.assertEqual(finiteness_verdict(ctx, [Chi(2)]).kind, INFINITE)

    def test_isolated_chi_doubles(self):
        """Test an unattached K_{chi^p} doubles the dimension"""
        ctx = context_init(3)
        self.assertEqual(finiteness_verdict(ctx, [Vij(1, 1), Chi(3)]).dim, 72)

    def test_three_two_dim(self):
        """Test three two-dimensional summands give an infinite algebra"""
        verdict = finiteness_verdict(context_init(2), [Vij(1, 1)] * 3)
        self.assertEqual(verdict.row, 'infinite/three-two-dim')

    def test_undetermined_composite(self):
        """Test an unmatched diagram for composite p is left open with evidence"""
        ctx = context_init(6)
        opened = 0
        for s in all_simples(6):
            if not isinstance(s, Vij):
                continue
            verdict = finiteness_verdict(ctx, [s], evidence=lambda summands: {'probe': len(summands)})
            self.assertIn(verdict.kind, (FINITE, INFINITE, UNDETERMINED))
            if verdict.kind == UNDETERMINED:
                opened += 1
                self.assertEqual(verdict.evidence['probe'], 1)
        self.assertGreater(opened, 0)

    def test_rank_two_predicates(self):
        """Test the rank-two predicates directly"""
        self.assertEqual(match_rank_two(2, 3, 1), 'rank2/row2(1)')
        self.assertEqual(match_rank_two(3, 2, 5), 'rank2/row6')
        self.assertIsNone(match_rank_two(2, 1, 1))

    def test_formula_requires_family(self):
        """Test no dimension is claimed outside the encoded families"""
        self.assertEqual(dimension_formula(context_init(2), [Vij(3, 1)]), (None, None))


if __name__ == '__main__':
    unittest.main()
