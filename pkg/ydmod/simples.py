"""
The simple Yetter-Drinfeld modules over H_{p,-1}.

K_{chi^k}: a.v = xi^k v, b.v = 0, delta(v) = a^{pk} (x) v.
V_{i,j}, pi - j != 0 mod 2p, on v1, v2:
    a.v1 = xi^i v1, a.v2 = xi^{i+1} v2, b.v1 = 0, b.v2 = v1,
    delta(v1) = a^{-j} (x) v1 + x2 theta^-1 ba^{-1-j} (x) v2,
    delta(v2) = a^{p-j} (x) v2 + x1 theta^-1 ba^{p-j-1} (x) v1,
with x1 = theta^-1 xi^{p-1-i}((-1)^i + xi^j), x2 = theta xi^{p+1+i}((-1)^i - xi^j).
"""

import logging
from functools import lru_cache
from typing import Sequence, Tuple

from exactla import SparseMatrix
from hopf import HopfAlgebra, build_H, h_index
from scalar import ScalarContext, ThetaScalar
from utils.errors import IsoCheckFailed, NotInLambda
from ydmod.module import YDModule, direct_sum, find_isomorphism, left_dual
from ydmod.summands import Chi, Summand, Vij, dual_summand, in_lambda

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def radford_dual(ctx: ScalarContext) -> HopfAlgebra:
    """Shared H_{p,-1} for a context"""
    return build_H(ctx)


def two_dim_scalars(ctx: ScalarContext, i: int, j: int) -> Tuple[ThetaScalar, ThetaScalar]:
    """(x1, x2)"""
    p = ctx.p
    sign = ctx.from_int(ctx.sign(i))
    x1 = ctx.theta.inverse() * ctx.xi_power(p - 1 - i) * (sign + ctx.xi_power(j))
    x2 = ctx.theta * ctx.xi_power(p + 1 + i) * (sign - ctx.xi_power(j))
    return x1, x2


def make_one_dim(ctx: ScalarContext, k: int) -> YDModule:
    """K_{chi^k}"""
    h = radford_dual(ctx)
    p = ctx.p
    k %= 2 * p
    a = SparseMatrix(ctx, 1, 1, {0: {0: ctx.xi_power(k)}})
    b = SparseMatrix(ctx, 1, 1)
    coaction = {0: {(h_index(p, 0, p * k), 0): ctx.one}}
    return YDModule(h, f'K_chi^{k}', 1, {h_index(p, 0, 1): a, h_index(p, 1, 0): b}, coaction,
                    summands=[Chi(k)], labels=['v'])


def make_two_dim(ctx: ScalarContext, i: int, j: int) -> YDModule:
    """
    V_{i,j}.

    Raises:
        NotInLambda: when pi = j mod 2p
    """
    p = ctx.p
    i, j = i % (2 * p), j % (2 * p)
    if not in_lambda(p, i, j):
        raise NotInLambda(p, i, j)
    h = radford_dual(ctx)
    x1, x2 = two_dim_scalars(ctx, i, j)
    theta_inv = ctx.theta.inverse()
    a = SparseMatrix(ctx, 2, 2, {0: {0: ctx.xi_power(i)}, 1: {1: ctx.xi_power(i + 1)}})
    b = SparseMatrix(ctx, 2, 2, {0: {1: ctx.one}})
    coaction = {
        0: {(h_index(p, 0, -j), 0): ctx.one, (h_index(p, 1, -1 - j), 1): x2 * theta_inv},
        1: {(h_index(p, 0, p - j), 1): ctx.one, (h_index(p, 1, p - j - 1), 0): x1 * theta_inv},
    }
    coaction = {m: {key: s for key, s in delta.items() if not s.is_zero()} for m, delta in coaction.items()}
    return YDModule(h, f'V_{{{i},{j}}}', 2, {h_index(p, 0, 1): a, h_index(p, 1, 0): b}, coaction,
                    summands=[Vij(i, j)])


def make_simple(ctx: ScalarContext, summand: Summand) -> YDModule:
    if isinstance(summand, Vij):
        return make_two_dim(ctx, summand.i, summand.j)
    return make_one_dim(ctx, summand.k)


def make_module(ctx: ScalarContext, summands: Sequence[Summand]) -> YDModule:
    """Direct sum of simples in the given order"""
    parts = [make_simple(ctx, s) for s in summands]
    return parts[0] if len(parts) == 1 else direct_sum(parts)


def dual(m: YDModule) -> YDModule:
    """
    Left dual of a sum of simples, checked isomorphic to the sum of the
    expected partners V_{-i-1,-j-p} and K_{chi^-k} by intertwiner search.

    Raises:
        IsoCheckFailed: when no invertible intertwiner exists
    """
    md = left_dual(m)
    if m.summands is None:
        return md
    partner = make_module(m.ctx, [dual_summand(m.ctx.p, s) for s in m.summands])
    iso = find_isomorphism(md, partner)
    if iso is None:
        raise IsoCheckFailed(f"{md.name} is not isomorphic to {partner.name}")
    logger.debug(f"{md.name} = {partner.name}")
    return md
