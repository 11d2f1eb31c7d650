"""
Linear duals of finite-dimensional Hopf algebras and the isomorphism
A_{p,-1} -> H_{p,-1}^*.
"""

import logging
from typing import Dict

from hopf.algebra import HopfAlgebra, HopfMorphism, Tensor2, check_morphism
from hopf.radford import a_index, build_A, build_H, h_index
from exactla import Vec, vec_add_term
from scalar import ScalarContext
from utils.errors import IsoCheckFailed

logger = logging.getLogger(__name__)


def dual(h: HopfAlgebra) -> HopfAlgebra:
    """
    H^* on the dual basis e_k^*: multiplication is the transpose of Delta,
    Delta the transpose of multiplication, unit = counit, counit = unit and
    S^* the transpose of S.
    """
    d = h.dim
    mult_table: Dict[tuple, Vec] = {}
    for k in range(d):
        for (i, j), s in h.comult(k).items():
            vec_add_term(mult_table.setdefault((i, j), {}), k, s)
    comult_table: Dict[int, Tensor2] = {}
    antipode_table: Dict[int, Vec] = {}
    for i in range(d):
        for j in range(d):
            for k, s in h.mult(i, j).items():
                vec_add_term(comult_table.setdefault(k, {}), (i, j), s)
        if h.has_antipode():
            for k, s in h.antipode(i).items():
                vec_add_term(antipode_table.setdefault(k, {}), i, s)
    unit = {k: h.counit(k) for k in range(d) if not h.counit(k).is_zero()}
    counit_values = {k: s for k, s in h.unit.items()}

    return HopfAlgebra(
        h.ctx, f'{h.name}*', [f'({label})*' for label in h.labels],
        product=lambda i, j: dict(mult_table.get((i, j), {})),
        coproduct=lambda k: dict(comult_table.get(k, {})),
        unit=unit,
        counit=lambda k: counit_values.get(k, h.ctx.zero),
        antipode=(lambda k: dict(antipode_table.get(k, {}))) if h.has_antipode() else None,
    )


def dual_iso_map(ctx: ScalarContext, a_alg: HopfAlgebra, h_dual: HopfAlgebra) -> HopfMorphism:
    """
    phi(g^i) = sum_j xi^{-ij} (a^j)^*,
    phi(x g^i) = (-1)^i theta sum_j xi^{-i(j+1)} (ba^j)^*
    """
    p, n = ctx.p, 2 * ctx.p
    images: Dict[int, Vec] = {}
    for i in range(n):
        images[a_index(p, 0, i)] = {h_index(p, 0, j): ctx.xi_power(-i * j) for j in range(n)}
        coeff = ctx.theta * ctx.sign(i)
        images[a_index(p, 1, i)] = {h_index(p, 1, j): coeff * ctx.xi_power(-i * (j + 1)) for j in range(n)}
    return HopfMorphism(a_alg, h_dual, images)


def pairing(ctx: ScalarContext):
    """<r, h> = phi(r)(h) on basis indices of A_{p,-1} and H_{p,-1}"""
    phi = dual_iso_map(ctx, None, None)

    def pair(r: int, h: int):
        return phi.images[r].get(h, ctx.zero)
    return pair


def dual_iso_check(ctx: ScalarContext) -> HopfMorphism:
    """
    Build phi: A_{p,-1} -> H_{p,-1}^* and verify it is a bijective Hopf morphism.

    Raises:
        IsoCheckFailed: with the first violated pair or basis element
    """
    a_alg = build_A(ctx)
    h_dual = dual(build_H(ctx))
    phi = dual_iso_map(ctx, a_alg, h_dual)
    report = check_morphism(phi, exhaustive=True)
    if not report['algebra_map']['pass']:
        raise IsoCheckFailed("phi is not multiplicative", witness=report['algebra_map']['witness'])
    if not report['coalgebra_map']['pass']:
        raise IsoCheckFailed("phi is not comultiplicative", witness=report['coalgebra_map']['witness'])
    if not report['bijective']:
        raise IsoCheckFailed("phi is not bijective")
    logger.info(f"A_{{{ctx.p},-1}} -> H_{{{ctx.p},-1}}^* is a Hopf isomorphism")
    return phi
