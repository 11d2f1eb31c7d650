"""
Builders for the 4p-dimensional Hopf algebras H_{p,-1} and A_{p,-1}.

H_{p,-1} is generated by a, b with a^{2p} = 1, b^2 = 0, ba = xi ab,
    Delta(a) = a (x) a + lambda^-1 b (x) ba^p,  Delta(b) = b (x) a^{p+1} + a (x) b,
    S(a) = a^{2p-1},  S(b) = xi^{p+1} ba^{p-2}.
Basis b^s a^i has index s*2p + i.

A_{p,-1} is generated by g, x with g^{2p} = 1, x^2 = 1 - g^2, gx = -xg,
    Delta(g) = g (x) g,  Delta(x) = x (x) 1 + g (x) x.
Basis x^s g^j has index s*2p + j.
"""

import logging
from typing import Dict

from hopf.algebra import HopfAlgebra, Tensor2
from exactla import Vec, vec_add_term
from scalar import ScalarContext

logger = logging.getLogger(__name__)


def h_index(p: int, s: int, i: int) -> int:
    """Index of b^s a^i"""
    return s * 2 * p + i % (2 * p)


def h_label(p: int, s: int, i: int) -> str:
    i %= 2 * p
    a_part = '' if i == 0 else ('a' if i == 1 else f'a^{i}')
    if s == 0:
        return a_part or '1'
    return 'b' + a_part


def build_H(ctx: ScalarContext) -> HopfAlgebra:
    """The dual Radford algebra H_{p,-1}"""
    p, n = ctx.p, 2 * ctx.p
    labels = [h_label(p, s, i) for s in (0, 1) for i in range(n)]

    def product(u: int, v: int) -> Vec:
        s, i = divmod(u, n)
        t, j = divmod(v, n)
        if s + t > 1:
            return {}
        # a^i b^t = xi^{-it} b^t a^i
        return {h_index(p, s + t, i + j): ctx.xi_power(-i * t)}

    h = HopfAlgebra(ctx, f'H_{p}', labels, product, lambda i: {}, {0: ctx.one},
                    counit=lambda u: ctx.one if u < n else ctx.zero,
                    generators=[h_index(p, 0, 1), h_index(p, 1, 0)],
                    words={s * n + i: (h_index(p, 1, 0),) * s + (h_index(p, 0, 1),) * i
                           for s in (0, 1) for i in range(n)})

    delta_a: Tensor2 = {(h_index(p, 0, 1), h_index(p, 0, 1)): ctx.one,
                        (h_index(p, 1, 0), h_index(p, 1, p)): ctx.lam_inv}
    delta_b: Tensor2 = {(h_index(p, 1, 0), h_index(p, 0, p + 1)): ctx.one,
                        (h_index(p, 0, 1), h_index(p, 1, 0)): ctx.one}
    powers_of_a = [h.tensor_one()]
    for _ in range(1, n):
        powers_of_a.append(h.tensor_mul(powers_of_a[-1], delta_a))

    def coproduct(u: int) -> Tensor2:
        s, i = divmod(u, n)
        return h.tensor_mul(delta_b, powers_of_a[i]) if s else powers_of_a[i]

    s_b = {h_index(p, 1, p - 2): ctx.xi_power(p + 1)}

    def antipode(u: int) -> Vec:
        s, i = divmod(u, n)
        a_inv = {h_index(p, 0, -i): ctx.one}
        return h.mul(a_inv, s_b) if s else a_inv

    h.set_coproduct(coproduct)
    h.set_antipode(antipode)
    logger.debug(f"Built H_{{{p},-1}} of dim {h.dim}")
    return h


def a_index(p: int, s: int, j: int) -> int:
    """Index of x^s g^j"""
    return s * 2 * p + j % (2 * p)


def a_label(p: int, s: int, j: int) -> str:
    j %= 2 * p
    g_part = '' if j == 0 else ('g' if j == 1 else f'g^{j}')
    if s == 0:
        return g_part or '1'
    return 'x' + g_part


def build_A(ctx: ScalarContext) -> HopfAlgebra:
    """The Radford algebra A_{p,-1}"""
    p, n = ctx.p, 2 * ctx.p
    labels = [a_label(p, s, j) for s in (0, 1) for j in range(n)]

    def product(u: int, v: int) -> Vec:
        s, i = divmod(u, n)
        t, j = divmod(v, n)
        sign = ctx.sign(i * t)
        if s + t < 2:
            # x^s g^i x^t g^j = (-1)^{it} x^{s+t} g^{i+j}
            return {a_index(p, s + t, i + j): ctx.from_int(sign)}
        # (x g^i)(x g^j) = (-1)^i (g^{i+j} - g^{i+j+2})
        out: Dict[int, object] = {}
        vec_add_term(out, a_index(p, 0, i + j), ctx.from_int(sign))
        vec_add_term(out, a_index(p, 0, i + j + 2), ctx.from_int(-sign))
        return out

    def coproduct(u: int) -> Tensor2:
        s, j = divmod(u, n)
        if s == 0:
            return {(u, u): ctx.one}
        return {(u, a_index(p, 0, j)): ctx.one, (a_index(p, 0, j + 1), u): ctx.one}

    def antipode(u: int) -> Vec:
        s, j = divmod(u, n)
        if s == 0:
            return {a_index(p, 0, -j): ctx.one}
        return {a_index(p, 1, -j - 1): ctx.from_int(ctx.sign(j))}

    a = HopfAlgebra(ctx, f'A_{p}', labels, product, coproduct, {0: ctx.one},
                    counit=lambda u: ctx.one if u < n else ctx.zero,
                    antipode=antipode,
                    generators=[a_index(p, 0, 1), a_index(p, 1, 0)],
                    words={s * n + j: (a_index(p, 1, 0),) * s + (a_index(p, 0, 1),) * j
                           for s in (0, 1) for j in range(n)})
    logger.debug(f"Built A_{{{p},-1}} of dim {a.dim}")
    return a
