"""Presented algebras by rewriting: normal forms, overlaps, PBW bases and the lifting families"""

from rewrite.order import Letter, Word, WordOrder
from rewrite.presentation import LinComb, Presentation, Rule, presentation_from_dict
from rewrite.diamond import (
    Ambiguity, PBWBasis, ambiguities, dimension, irreducible_words, overlaps_resolvable, random_normal_form,
    resolve,
)
from rewrite.closure import ClosureReport, close_ambiguities
from rewrite.liftings import (
    EXCLUDED, FAMILIES, Lifting, bosonization_presentation, build_lifting, in_lambda_four, in_lambda_three,
    lambda_four_failure, lambda_four_lifting, lambda_three_lifting, pair_lifting, radford_presentation,
)
from rewrite.hopf_check import generator_isomorphism, hopf_check_presented, presented_hopf_algebra

__all__ = [
    'Letter', 'Word', 'WordOrder',
    'LinComb', 'Presentation', 'Rule', 'presentation_from_dict',
    'Ambiguity', 'PBWBasis', 'ambiguities', 'dimension', 'irreducible_words', 'overlaps_resolvable',
    'random_normal_form', 'resolve',
    'ClosureReport', 'close_ambiguities',
    'EXCLUDED', 'FAMILIES', 'Lifting', 'bosonization_presentation', 'build_lifting', 'in_lambda_four',
    'in_lambda_three', 'lambda_four_failure', 'lambda_four_lifting', 'lambda_three_lifting', 'pair_lifting',
    'radford_presentation',
    'generator_isomorphism', 'hopf_check_presented', 'presented_hopf_algebra',
]
