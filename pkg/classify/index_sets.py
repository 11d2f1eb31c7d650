"""
The index sets Lambda_p and its subfamilies.

Lambda_p indexes the two-dimensional simples V_{i,j}; the subsets
Lambda^1..Lambda^4 single out the objects with quadratic relations and the
ones whose liftings deform those relations. Membership is decided by
evaluating the defining powers of xi in the scalar field.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Set, Tuple

from scalar import ScalarContext

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass
class IndexSets:
    """Lambda_p and the subsets Lambda^1..Lambda^4 as sets of (i, j)"""
    p: int
    lam: Set[Pair] = field(default_factory=set)
    lambda1: Set[Pair] = field(default_factory=set)
    lambda2: Set[Pair] = field(default_factory=set)
    lambda3: Set[Pair] = field(default_factory=set)
    lambda4: Set[Pair] = field(default_factory=set)

    @property
    def quadratic(self) -> Set[Pair]:
        """Lambda^1 u Lambda^2: the V_{i,j} whose Nichols algebra has quadratic relations"""
        return self.lambda1 | self.lambda2

    def get(self, name: str) -> Set[Pair]:
        return {'lambda': self.lam, 'lambda1': self.lambda1, 'lambda2': self.lambda2,
                'lambda3': self.lambda3, 'lambda4': self.lambda4}[name]

    def to_dict(self) -> dict:
        def listed(pairs: Set[Pair]) -> List[List[int]]:
            return [list(pair) for pair in sorted(pairs)]

        return {
            'p': self.p,
            'sizes': {
                'lambda': len(self.lam),
                'lambda1': len(self.lambda1),
                'lambda2': len(self.lambda2),
                'lambda3': len(self.lambda3),
                'lambda4': len(self.lambda4),
            },
            'lambda1': listed(self.lambda1),
            'lambda2': listed(self.lambda2),
            'lambda3': listed(self.lambda3),
            'lambda4': listed(self.lambda4),
        }


def lambda_sets(ctx: ScalarContext) -> IndexSets:
    """
    Compute Lambda_p and its subfamilies for the context's p.

    Lambda:   xi^{pi-j} != 1
    Lambda^1: 1 + xi^{-ij} = 0
    Lambda^2: xi^{(i+1)(p-j)} = -1
    Lambda^3: (i, j) in Lambda^2 with xi^{2(i+1)} = 1 and xi^{2j} = -1
    Lambda^4: xi^{(p+j)(i-1)} = xi^{3ij} = xi^{3(i+1)} = 1

    Args:
        ctx: scalar context fixing p

    Returns:
        IndexSets
    """
    p = ctx.p
    one, minus_one = ctx.one, -ctx.one
    xi = ctx.xi_power
    sets = IndexSets(p)
    for i in range(2 * p):
        for j in range(2 * p):
            if xi(p * i - j) == one:
                continue
            sets.lam.add((i, j))
            if one + xi(-i * j) == ctx.zero:
                sets.lambda1.add((i, j))
            if xi((i + 1) * (p - j)) == minus_one:
                sets.lambda2.add((i, j))
                if xi(2 * (i + 1)) == one and xi(2 * j) == minus_one:
                    sets.lambda3.add((i, j))
            if xi((p + j) * (i - 1)) == one and xi(3 * i * j) == one and xi(3 * (i + 1)) == one:
                sets.lambda4.add((i, j))
    logger.debug(f"p={p}: |Lambda|={len(sets.lam)}, |Lambda^1|={len(sets.lambda1)}, "
                 f"|Lambda^2|={len(sets.lambda2)}, |Lambda^3|={len(sets.lambda3)}, "
                 f"|Lambda^4|={len(sets.lambda4)}")
    return sets
