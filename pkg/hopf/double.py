"""
The Drinfeld double D = D(H_{p,-1}^cop) on A_{p,-1} (x) H_{p,-1}.

With K = H^cop and K^* identified with A^op through phi,
    (r (x) a)(s (x) b) = <s_(1), S^-1_K(a_(3))> <s_(3), a_(1)> (r s_(2)) (x) a_(2) b
where s_(1) (x) s_(2) (x) s_(3) is taken in A, a_(1) (x) a_(2) (x) a_(3) in K, and
r s_(2) is the product of A^op. As a coalgebra D = A^bop (x) H^cop.
"""

import logging
from typing import Dict, List, Tuple

import config
from hopf.algebra import (
    HopfAlgebra, HopfMorphism, Tensor2, antipode_order, check_morphism, install_word_antipode,
    solve_antipode_on_generators,
)
from hopf.duality import pairing
from hopf.radford import a_index, build_A, build_H, h_index
from exactla import Vec, vec_add_term, vec_axpy, vec_equal
from scalar import ScalarContext
from utils.errors import AntipodeNotFound, CapExceeded

logger = logging.getLogger(__name__)


def _triples(h: HopfAlgebra, i: int) -> List[Tuple[int, int, int, object]]:
    """(Delta (x) id)Delta(e_i) as a list of (i1, i2, i3, coeff)"""
    acc: Dict[Tuple[int, int, int], object] = {}
    for (a, b), s in h.comult(i).items():
        for (c, d), t in h.comult(a).items():
            vec_add_term(acc, (c, d, b), s * t)
    return [(k[0], k[1], k[2], s) for k, s in sorted(acc.items())]


def opposite(h: HopfAlgebra, op_product: bool, op_coproduct: bool, name: str) -> HopfAlgebra:
    """H^op, H^cop or H^bop; S stays for bop and is inverted otherwise"""
    def product(i, j):
        return h.mult(j, i) if op_product else h.mult(i, j)

    def coproduct(i):
        t = h.comult(i)
        return {(b, a): s for (a, b), s in t.items()} if op_coproduct else t

    def antipode(i):
        if op_product == op_coproduct:
            return h.antipode(i)
        # S^-1 = S^{n-1} for S of finite order n
        order = antipode_order(h)
        if order is None:
            raise AntipodeNotFound(f"{h.name}: antipode order not found", algebra=h.name)
        v = h.basis(i)
        for _ in range(order - 1):
            v = h.apply_antipode(v)
        return v

    return HopfAlgebra(h.ctx, name, h.labels, product, coproduct, h.unit, h.counit,
                       antipode=antipode, generators=h.generators, words=h.words)


def _double_label(a_label: str, h_label: str) -> str:
    if a_label == '1':
        return h_label
    if h_label == '1':
        return a_label
    return a_label + h_label


def drinfeld_double(ctx: ScalarContext) -> HopfAlgebra:
    """
    D(H_{p,-1}^cop) with basis r (x) a at index r * 4p + a.

    Raises:
        CapExceeded: when 16p^2 exceeds DOUBLE_MAX_DIM
    """
    p, n = ctx.p, 2 * ctx.p
    dim = 16 * p * p
    if dim > config.DOUBLE_MAX_DIM:
        raise CapExceeded('double dimension', dim, config.DOUBLE_MAX_DIM)
    a_alg = build_A(ctx)
    h_alg = build_H(ctx)
    dh = h_alg.dim
    pair = pairing(ctx)

    s_triples = {r: _triples(a_alg, r) for r in range(a_alg.dim)}
    # triples of K = H^cop are the H triples read backwards
    k_triples = {a: [(c3, c2, c1, s) for c1, c2, c3, s in _triples(h_alg, a)] for a in range(dh)}
    antipode_h = {a: h_alg.antipode(a) for a in range(dh)}

    def pair_vec(r: int, v: Vec):
        total = ctx.zero
        for k, s in v.items():
            total = total + s * pair(r, k)
        return total

    def product(u: int, v: int) -> Vec:
        r, a = divmod(u, dh)
        s, b = divmod(v, dh)
        out: Vec = {}
        for a1, a2, a3, alpha in k_triples[a]:
            right = h_alg.mult(a2, b)
            if not right:
                continue
            for s1, s2, s3, sigma in s_triples[s]:
                c3 = pair(s3, a1)
                if c3.is_zero():
                    continue
                c1 = pair_vec(s1, antipode_h[a3])
                if c1.is_zero():
                    continue
                coeff = alpha * sigma * c1 * c3
                # r s_(2) in A^op
                for k, x in a_alg.mult(s2, r).items():
                    for m, y in right.items():
                        vec_add_term(out, k * dh + m, coeff * x * y)
        return out

    def coproduct(u: int) -> Tensor2:
        r, a = divmod(u, dh)
        out: Tensor2 = {}
        for (r1, r2), s in a_alg.comult(r).items():
            for (a1, a2), t in h_alg.comult(a).items():
                vec_add_term(out, (r2 * dh + a2, r1 * dh + a1), s * t)
        return out

    def counit(u: int):
        r, a = divmod(u, dh)
        return a_alg.counit(r) * h_alg.counit(a)

    gen_a, gen_b = h_index(p, 0, 1), h_index(p, 1, 0)
    gen_g, gen_x = a_index(p, 0, 1) * dh, a_index(p, 1, 0) * dh
    words = {}
    for r in range(a_alg.dim):
        xs, j = divmod(r, n)
        # x^s g^j in A is g^j x^s in A^op
        left = (gen_g,) * j + (gen_x,) * xs
        for a in range(dh):
            words[r * dh + a] = left + h_alg.words[a]
    labels = [_double_label(a_alg.labels[r], h_alg.labels[a]) for r in range(a_alg.dim) for a in range(dh)]
    d = HopfAlgebra(ctx, f'D_{p}', labels, product, coproduct, {0: ctx.one}, counit,
                    generators=[gen_a, gen_b, gen_g, gen_x], words=words)

    # 1 (x) H is the Hopf subalgebra H^cop, with antipode S^-1 = S^3
    known = {}
    for gen in (gen_a, gen_b):
        v = h_alg.basis(gen)
        for _ in range(3):
            v = h_alg.apply_antipode(v)
        known[gen] = v
    images = solve_antipode_on_generators(d, known)
    install_word_antipode(d, images)
    logger.info(f"Built D(H_{{{p},-1}}^cop) of dim {dim}")
    return d


def double_relations(d: HopfAlgebra) -> Dict[str, bool]:
    """The cross relations between the H and A generators, checked exactly"""
    ctx = d.ctx
    p, n = ctx.p, 2 * ctx.p
    dh = 4 * p
    a = {h_index(p, 0, 1): ctx.one}
    b = {h_index(p, 1, 0): ctx.one}
    g = {a_index(p, 0, 1) * dh: ctx.one}
    x = {a_index(p, 1, 0) * dh: ctx.one}

    def lin(*terms):
        out: Vec = {}
        for coeff, vec in terms:
            vec_axpy(out, coeff, vec)
        return out

    m = d.mul
    one = ctx.one
    ba_p = m(b, d.power(a, p))
    a_p1 = d.power(a, p + 1)
    coeff = ctx.theta * ctx.xi_power(p + 1)
    return {
        'ag=ga': vec_equal(m(a, g), m(g, a)),
        'bg=-gb': vec_equal(m(b, g), lin((-one, m(g, b)))),
        'ax-xi*xa=lambda^-1*theta*xi^(p+1)*(ba^p-gb)': vec_equal(
            lin((one, m(a, x)), (-ctx.xi, m(x, a))),
            lin((ctx.lam_inv * coeff, ba_p), (-ctx.lam_inv * coeff, m(g, b)))),
        'bx-xi*xb=theta*xi^(p+1)*(a^(p+1)-ga)': vec_equal(
            lin((one, m(b, x)), (-ctx.xi, m(x, b))),
            lin((coeff, a_p1), (-coeff, m(g, a)))),
        'a^(2p)=1': vec_equal(d.power(a, n), d.one()),
        'g^(2p)=1': vec_equal(d.power(g, n), d.one()),
        'x^2=1-g^2': vec_equal(m(x, x), lin((one, d.one()), (-one, m(g, g)))),
        'b^2=0': not m(b, b),
    }


def subalgebra_inclusions(ctx: ScalarContext, d: HopfAlgebra) -> Dict[str, dict]:
    """H^cop -> D and A^bop -> D as Hopf morphisms"""
    h_alg = build_H(ctx)
    a_alg = build_A(ctx)
    dh = h_alg.dim
    h_cop = opposite(h_alg, False, True, f'H_{ctx.p}^cop')
    a_bop = opposite(a_alg, True, True, f'A_{ctx.p}^bop')
    into_h = HopfMorphism(h_cop, d, {k: {k: ctx.one} for k in range(dh)})
    into_a = HopfMorphism(a_bop, d, {r: {r * dh: ctx.one} for r in range(a_alg.dim)})
    return {
        'H^cop': check_morphism(into_h, exhaustive=True),
        'A^bop': check_morphism(into_a, exhaustive=True),
    }
