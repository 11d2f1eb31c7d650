"""
Quadratic relations of B(V) and degreewise truncation of relation ideals.
"""

import logging
from typing import List, Optional, Sequence

import config
from exactla import Echelon, all_words, check_dim, vec_add_term, word_index
from nichols.derivations import TensorElement, kernel_elements, tensor_degree
from scalar import ScalarContext
from ydmod.braiding import braiding
from ydmod.module import YDModule

logger = logging.getLogger(__name__)


def quadratic_relations(m: YDModule) -> List[TensorElement]:
    """Basis of J^2(V) = ker(id + c)"""
    return kernel_elements(braiding(m, check=False), 2)


def quad_criterion(ctx: ScalarContext, i: int, j: int) -> bool:
    """B(V_{i,j}) has quadratic relations iff xi^{-ij} = -1 or xi^{(i+1)(p-j)} = -1"""
    minus_one = -ctx.one
    return ctx.xi_power(-i * j) == minus_one or ctx.xi_power((i + 1) * (ctx.p - j)) == minus_one


def ideal_graded_dims(ctx: ScalarContext, dim: int, relations: Sequence[TensorElement], cutoff: int,
                      cap: Optional[int] = None) -> List[int]:
    """
    dim (T(V)/I)^n for n <= cutoff, I the ideal generated by the relations.

    I^n is spanned by the products x r y with r a relation and x, y words,
    generated degree by degree.

    Raises:
        CapExceeded: when d^cutoff is over the cap
    """
    cap = cap or config.MATRIX_CAP
    check_dim('tensor power', dim ** cutoff, cap)
    degrees = [tensor_degree(r) for r in relations]
    dims = [1]
    for n in range(1, cutoff + 1):
        ech = Echelon(ctx)
        for r, m in zip(relations, degrees):
            if m > n or m == 0:
                continue
            for left in range(n - m + 1):
                for x in all_words(dim, left):
                    for y in all_words(dim, n - m - left):
                        vec = {}
                        for word, s in r.items():
                            vec_add_term(vec, word_index(x + word + y, dim), s)
                        ech.add(vec)
        dims.append(dim ** n - ech.rank())
        logger.debug(f"truncated quotient degree {n}: dim {dims[-1]}")
    return dims
