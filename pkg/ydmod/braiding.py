"""
The braiding c(v (x) w) = v_(-1).w (x) v_(0) of a Yetter-Drinfeld module,
as a matrix on V (x) V with the first factor most significant.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

from exactla import SparseMatrix, Vec, compose_on_tensor_slot, rank
from scalar import ScalarContext
from ydmod.module import YDModule

logger = logging.getLogger(__name__)


@dataclass
class Braiding:
    """Operator c on V (x) V"""
    ctx: ScalarContext
    dim: int
    matrix: SparseMatrix
    name: str = 'c'

    def slot(self, n: int, j: int) -> SparseMatrix:
        """c_j = id^{j-1} (x) c (x) id^{n-j-1} on V^{(x)n}"""
        return compose_on_tensor_slot(self.matrix, self.dim, n, j)

    def apply(self, v: int, w: int) -> Vec:
        """c(v_v (x) v_w), keys are word indices u * dim + u'"""
        return self.matrix.column(v * self.dim + w)

    def entry(self, out: Sequence[int], inp: Sequence[int]):
        d = self.dim
        return self.matrix.get(out[0] * d + out[1], inp[0] * d + inp[1])

    def is_invertible(self) -> bool:
        return rank(self.matrix) == self.dim * self.dim

    def satisfies_braid_equation(self) -> bool:
        """c1 c2 c1 = c2 c1 c2 on V^{(x)3}"""
        c1 = self.slot(3, 1)
        c2 = self.slot(3, 2)
        return c1 @ c2 @ c1 == c2 @ c1 @ c2

    def conjugated(self, diagonal: Sequence) -> 'Braiding':
        """(D (x) D) c (D (x) D)^-1 for the basis rescaling v_u -> diagonal[u] v_u"""
        d = self.dim
        out = SparseMatrix(self.ctx, d * d, d * d)
        for r, c, s in self.matrix.items():
            scale = diagonal[r // d] * diagonal[r % d] / (diagonal[c // d] * diagonal[c % d])
            out.set(r, c, s * scale)
        return Braiding(self.ctx, d, out, self.name)

    @classmethod
    def diagonal(cls, ctx: ScalarContext, exponents: Sequence[Sequence[int]], name: str = 'diag') -> 'Braiding':
        """c(v_u (x) v_w) = xi^{e_uw} v_w (x) v_u"""
        d = len(exponents)
        out = SparseMatrix(ctx, d * d, d * d)
        for u in range(d):
            for w in range(d):
                out.set(w * d + u, u * d + w, ctx.xi_power(exponents[u][w]))
        return cls(ctx, d, out, name)


def braiding(m: YDModule, check: bool = True) -> Braiding:
    """
    Assemble c from the coaction, then the action.

    With check set, the braid equation is verified and a failure is logged;
    callers decide what to do with braiding_report.
    """
    d = m.dim
    out = SparseMatrix(m.ctx, d * d, d * d)
    for v in range(d):
        for (c, u), s in m.coaction[v].items():
            action = m.matrix(c)
            for w in range(d):
                for w2, t in action.column(w).items():
                    out.add_to(w2 * d + u, v * d + w, s * t)
    result = Braiding(m.ctx, d, out, f'c[{m.name}]')
    if check and not result.satisfies_braid_equation():
        logger.warning(f"{result.name} fails the braid equation")
    return result


def braiding_report(c: Braiding) -> dict:
    return {
        'braiding': c.name,
        'dim': c.dim,
        'nonzero_entries': c.matrix.nnz(),
        'invertible': c.is_invertible(),
        'braid_equation': c.satisfies_braid_equation(),
    }
