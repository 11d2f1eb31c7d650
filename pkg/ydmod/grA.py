"""
Realizations over gr A_{p,-1}: the graded Hopf algebra with
    g^{2p} = 1, x^2 = 0, gx = -xg, Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x.

On the rescaled basis e1 = v1, e2 = x.e1 the two-dimensional simples read
    g.e1 = xi^{-j} e1, g.e2 = xi^{p-j} e2, x.e1 = e2, x.e2 = 0,
    delta(e1) = g^i (x) e1,
    delta(e2) = g^{i+1} (x) e2 + ((-1)^i - xi^{-j}) g^i x (x) e1,
and K_{chi^k} has g.v = (-1)^k v, x.v = 0, delta(v) = g^k (x) v.
"""

import logging
from functools import lru_cache

from exactla import SparseMatrix
from hopf import HopfAlgebra, a_index, a_label
from scalar import ScalarContext
from utils.errors import NotInLambda
from ydmod.module import YDModule
from ydmod.summands import Chi, Vij, in_lambda

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def build_grA(ctx: ScalarContext) -> HopfAlgebra:
    """gr A_{p,-1} on the basis x^s g^j, index s*2p + j"""
    p, n = ctx.p, 2 * ctx.p
    labels = [a_label(p, s, j) for s in (0, 1) for j in range(n)]

    def product(u, v):
        s, i = divmod(u, n)
        t, j = divmod(v, n)
        if s + t > 1:
            return {}
        return {a_index(p, s + t, i + j): ctx.from_int(ctx.sign(i * t))}

    def coproduct(u):
        s, j = divmod(u, n)
        if s == 0:
            return {(u, u): ctx.one}
        return {(u, a_index(p, 0, j)): ctx.one, (a_index(p, 0, j + 1), u): ctx.one}

    def antipode(u):
        s, j = divmod(u, n)
        if s == 0:
            return {a_index(p, 0, -j): ctx.one}
        return {a_index(p, 1, -j - 1): ctx.from_int(ctx.sign(j))}

    return HopfAlgebra(ctx, f'grA_{p}', labels, product, coproduct, {0: ctx.one},
                       counit=lambda u: ctx.one if u < n else ctx.zero,
                       antipode=antipode,
                       generators=[a_index(p, 0, 1), a_index(p, 1, 0)],
                       words={s * n + j: (a_index(p, 1, 0),) * s + (a_index(p, 0, 1),) * j
                              for s in (0, 1) for j in range(n)})


def make_one_dim_grA(ctx: ScalarContext, k: int) -> YDModule:
    h = build_grA(ctx)
    p = ctx.p
    k %= 2 * p
    g = SparseMatrix(ctx, 1, 1, {0: {0: ctx.from_int(ctx.sign(k))}})
    x = SparseMatrix(ctx, 1, 1)
    return YDModule(h, f'grA:K_chi^{k}', 1, {a_index(p, 0, 1): g, a_index(p, 1, 0): x},
                    {0: {(a_index(p, 0, k), 0): ctx.one}}, summands=[Chi(k)], labels=['v'])


def make_two_dim_grA(ctx: ScalarContext, i: int, j: int) -> YDModule:
    """
    V_{i,j} transported to gr A, on the basis e1, e2.

    Raises:
        NotInLambda: when pi = j mod 2p
    """
    p = ctx.p
    i, j = i % (2 * p), j % (2 * p)
    if not in_lambda(p, i, j):
        raise NotInLambda(p, i, j)
    h = build_grA(ctx)
    g = SparseMatrix(ctx, 2, 2, {0: {0: ctx.xi_power(-j)}, 1: {1: ctx.xi_power(p - j)}})
    x = SparseMatrix(ctx, 2, 2, {1: {0: ctx.one}})
    # g^i x = (-1)^i x g^i
    cross = ctx.one - ctx.from_int(ctx.sign(i)) * ctx.xi_power(-j)
    delta_e2 = {(a_index(p, 0, i + 1), 1): ctx.one}
    if not cross.is_zero():
        delta_e2[(a_index(p, 1, i), 0)] = cross
    coaction = {0: {(a_index(p, 0, i), 0): ctx.one}, 1: delta_e2}
    return YDModule(h, f'grA:V_{{{i},{j}}}', 2, {a_index(p, 0, 1): g, a_index(p, 1, 0): x}, coaction,
                    summands=[Vij(i, j)], labels=['e1', 'e2'])
