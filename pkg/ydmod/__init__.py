"""Yetter-Drinfeld modules over H_{p,-1}: simples, braidings, D-modules, Dynkin diagrams, verdicts"""

from ydmod.summands import (
    Chi, Summand, Vij, check_lambda, dual_summand, in_lambda, normalize_all, parse_summand,
    summand_from_dict, summands_label,
)
from ydmod.module import YDModule, direct_sum, find_isomorphism, left_dual, yd_intertwiners
from ydmod.simples import dual, make_module, make_one_dim, make_simple, make_two_dim, radford_dual, two_dim_scalars
from ydmod.braiding import Braiding, braiding, braiding_report
from ydmod.dmodules import (
    DMod, d_intertwiners, enumerate_simples, joint_weights, make_D_simple, represents_double,
    yd_from_dmod, yd_to_dmod,
)
from ydmod.grA import build_grA, make_one_dim_grA, make_two_dim_grA
from ydmod.dynkin import DiagonalVertex, DynkinDiagram, dynkin_diagram
from ydmod.verdict import (
    FINITE, INFINITE, UNDETERMINED, Verdict, classification_covers, dimension_formula, exponent_order,
    finiteness_verdict, match_rank_three, match_rank_two,
)

__all__ = [
    'Chi', 'Summand', 'Vij', 'check_lambda', 'dual_summand', 'in_lambda', 'normalize_all', 'parse_summand',
    'summand_from_dict', 'summands_label',
    'YDModule', 'direct_sum', 'find_isomorphism', 'left_dual', 'yd_intertwiners',
    'dual', 'make_module', 'make_one_dim', 'make_simple', 'make_two_dim', 'radford_dual', 'two_dim_scalars',
    'Braiding', 'braiding', 'braiding_report',
    'DMod', 'd_intertwiners', 'enumerate_simples', 'joint_weights', 'make_D_simple', 'represents_double',
    'yd_from_dmod', 'yd_to_dmod',
    'build_grA', 'make_one_dim_grA', 'make_two_dim_grA',
    'DiagonalVertex', 'DynkinDiagram', 'dynkin_diagram',
    'FINITE', 'INFINITE', 'UNDETERMINED', 'Verdict', 'classification_covers', 'dimension_formula',
    'exponent_order', 'finiteness_verdict', 'match_rank_three', 'match_rank_two',
]
