"""Exact scalars: Q(xi) with xi of order 2p, extended by a formal theta"""

from scalar.cyclotomic import Cyclotomic, CyclotomicField, cyclotomic_poly
from scalar.theta import ScalarContext, ThetaScalar, context_init, order_of_unity, scalar_arith
from scalar.text import parse, render

__all__ = [
    'Cyclotomic', 'CyclotomicField', 'cyclotomic_poly',
    'ScalarContext', 'ThetaScalar', 'context_init', 'order_of_unity', 'scalar_arith',
    'parse', 'render',
]
