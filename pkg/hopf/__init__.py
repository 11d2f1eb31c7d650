"""Hopf algebras as structure constants: H_{p,-1}, A_{p,-1}, duals, the double, bosonization"""

from hopf.algebra import (
    HopfAlgebra, HopfMorphism, antipode_order, check_morphism, install_word_antipode,
    solve_antipode_on_generators, tensor_of, verify_hopf, word_product_failure,
)
from hopf.radford import a_index, a_label, build_A, build_H, h_index, h_label
from hopf.duality import dual, dual_iso_check, dual_iso_map, pairing
from hopf.double import double_relations, drinfeld_double, opposite, subalgebra_inclusions
from hopf.coradical import group_likes, is_group_like, skew_primitives
from hopf.bosonization import BraidedAlgebra, bosonization, yd_violation
from hopf.serialize import hopf_from_dict, hopf_to_dict, morphism_to_dict, vector_to_dict

__all__ = [
    'HopfAlgebra', 'HopfMorphism', 'antipode_order', 'check_morphism', 'install_word_antipode',
    'solve_antipode_on_generators', 'tensor_of', 'verify_hopf', 'word_product_failure',
    'a_index', 'a_label', 'build_A', 'build_H', 'h_index', 'h_label',
    'dual', 'dual_iso_check', 'dual_iso_map', 'pairing',
    'double_relations', 'drinfeld_double', 'opposite', 'subalgebra_inclusions',
    'group_likes', 'is_group_like', 'skew_primitives',
    'BraidedAlgebra', 'bosonization', 'yd_violation',
    'hopf_from_dict', 'hopf_to_dict', 'morphism_to_dict', 'vector_to_dict',
]
