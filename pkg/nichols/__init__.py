"""Nichols algebras: braid lifts, symmetrizers, skew-derivations, presentations"""

from nichols.braid import (
    all_permutations, braid_operator, compose_word, inversion_count, matsumoto_lift, reduced_words,
)
from nichols.symmetrizer import literal_symmetrizer, quantum_symmetrizer, shuffle_sum, symmetrizer_ranks
from nichols.derivations import (
    SkewDerivations, TensorElement, in_nichols_ideal, joint_kernel, kernel_elements, linear_combination,
    multiply, skew_derivation, tensor_degree, word_element,
)
from nichols.graded import GradedDims, NicholsQuotient, default_cutoff, graded_dims
from nichols.relations import ideal_graded_dims, quad_criterion, quadratic_relations
from nichols.presentations import (
    CONJECTURE, PROVED, NicholsPresentation, NicholsProfile, catalogue_presentation, g3_presentation,
    in_lambda_one, in_lambda_two, pair_presentation, quadratic_presentation, standard_b2_presentation,
    with_chi_presentation,
)
from nichols.verify import nichols_certificate, relation_text, verify_presentation
from nichols.braided import nichols_bosonization, nichols_braided_algebra

__all__ = [
    'all_permutations', 'braid_operator', 'compose_word', 'inversion_count', 'matsumoto_lift', 'reduced_words',
    'literal_symmetrizer', 'quantum_symmetrizer', 'shuffle_sum', 'symmetrizer_ranks',
    'SkewDerivations', 'TensorElement', 'in_nichols_ideal', 'joint_kernel', 'kernel_elements',
    'linear_combination', 'multiply', 'skew_derivation', 'tensor_degree', 'word_element',
    'GradedDims', 'NicholsQuotient', 'default_cutoff', 'graded_dims',
    'ideal_graded_dims', 'quad_criterion', 'quadratic_relations',
    'CONJECTURE', 'PROVED', 'NicholsPresentation', 'NicholsProfile', 'catalogue_presentation',
    'g3_presentation', 'in_lambda_one', 'in_lambda_two', 'pair_presentation', 'quadratic_presentation',
    'standard_b2_presentation', 'with_chi_presentation',
    'nichols_certificate', 'relation_text', 'verify_presentation',
    'nichols_bosonization', 'nichols_braided_algebra',
]
