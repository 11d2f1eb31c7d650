"""
Hopf structure of a presented lifting, checked on its PBW basis.

The algebra is materialized through normal forms, the comultiplication is
extended multiplicatively from the generators into A (x) A and the antipode
is solved generator by generator, after which every axiom is verified
exactly by hopf.verify_hopf.
"""

import logging
from typing import Dict, Optional

import config
from exactla import Vec, vec_add_term
from hopf import (
    HopfAlgebra, HopfMorphism, check_morphism, install_word_antipode, solve_antipode_on_generators,
    verify_hopf,
)
from hopf.algebra import Tensor2
from rewrite.diamond import PBWBasis, irreducible_words, overlaps_resolvable
from rewrite.liftings import Lifting
from rewrite.order import Word
from rewrite.presentation import LinComb
from utils.errors import AntipodeNotFound, BialgebraAxiomFailed, CapExceeded

logger = logging.getLogger(__name__)

BIALGEBRA_CHECKS = ('associativity', 'unit', 'coassociativity', 'counit',
                    'comult_multiplicative', 'counit_multiplicative')


def presented_hopf_algebra(lifting: Lifting, basis: Optional[PBWBasis] = None,
                           cap: Optional[int] = None) -> HopfAlgebra:
    """
    HopfAlgebra on the irreducible words of a lifting, without antipode.

    Raises:
        CapExceeded: when the PBW basis is larger than cap (EXECUTED_DIM_CAP by default)
    """
    pres = lifting.presentation
    cap = cap or config.EXECUTED_DIM_CAP
    basis = basis or irreducible_words(pres, cap)
    if not basis.finite or len(basis) > cap:
        raise CapExceeded(f'PBW basis of {pres.name}', len(basis), cap)
    ctx = pres.ctx
    words = list(basis.words)
    index: Dict[Word, int] = {w: k for k, w in enumerate(words)}

    def to_vec(combo: LinComb) -> Vec:
        return {index[w]: s for w, s in combo.items()}

    def product(i: int, j: int) -> Vec:
        return to_vec(pres.normal_form(words[i] + words[j]))

    letter_basis = {g: index[(g,)] for g in range(len(pres.order)) if (g,) in index}
    generators = sorted({letter_basis[g] for g in lifting.base})
    factorization = {k: tuple(letter_basis[g] for g in pres.order.expand(w)) for k, w in enumerate(words)}

    def counit(i: int):
        out = ctx.one
        for g in words[i]:
            out = out * lifting.counits[g]
        return out

    h = HopfAlgebra(ctx, pres.name, [pres.order.text(w) for w in words], product,
                    lambda i: {}, {index[()]: ctx.one}, counit, generators=generators, words=factorization)

    def letter_coproduct(g: int) -> Tensor2:
        letter = pres.order.letters[g]
        if letter.expands:
            out = h.tensor_one()
            for name in letter.expands:
                out = h.tensor_mul(out, letter_coproduct(pres.order.index[name]))
            return out
        out: Tensor2 = {}
        for (w1, w2), s in lifting.coproducts[g].items():
            for u1, c1 in pres.normal_form(w1).items():
                for u2, c2 in pres.normal_form(w2).items():
                    vec_add_term(out, (index[u1], index[u2]), s * c1 * c2)
        return out

    def coproduct(i: int) -> Tensor2:
        word = words[i]
        if not word:
            return h.tensor_one()
        if len(word) == 1:
            return letter_coproduct(word[0])
        return h.tensor_mul(h.comult(index[word[:1]]), h.comult(index[word[1:]]))

    h.set_coproduct(coproduct)
    return h


def _known_antipodes(lifting: Lifting, h: HopfAlgebra) -> Dict[int, Vec]:
    pres = lifting.presentation
    index = {pres.word(label): k for k, label in enumerate(h.labels)}
    return {index[(g,)]: {index[w]: s for w, s in pres.normal_form(image).items()}
            for g, image in lifting.antipodes.items()}


def _bialgebra_failures(report: dict) -> list:
    return [name for name in BIALGEBRA_CHECKS if not report['checks'][name]['pass']]


def hopf_check_presented(lifting: Lifting, cap: Optional[int] = None) -> dict:
    """
    Verify that the coalgebra data of a lifting makes it a Hopf algebra.

    Returns:
        verify_hopf report extended with the overlap report and the antipode images

    Raises:
        BialgebraAxiomFailed: when an overlap does not resolve or a bialgebra axiom fails
        AntipodeNotFound: when the antipode cannot be solved or fails its axiom
    """
    pres = lifting.presentation
    overlaps = overlaps_resolvable(pres)
    if not overlaps['resolvable']:
        raise BialgebraAxiomFailed(f"{pres.name}: rewriting system is not confluent",
                                   failures=overlaps['failures'][:3])
    h = presented_hopf_algebra(lifting, cap=cap)
    try:
        images = solve_antipode_on_generators(h, _known_antipodes(lifting, h))
    except AntipodeNotFound:
        report = verify_hopf(h)
        failed = _bialgebra_failures(report)
        if failed:
            raise BialgebraAxiomFailed(f"{pres.name}: bialgebra axioms fail", failed=failed,
                                       witness=report['checks'][failed[0]]['witness']) from None
        raise
    install_word_antipode(h, images)
    report = verify_hopf(h)
    failed = _bialgebra_failures(report)
    if failed:
        raise BialgebraAxiomFailed(f"{pres.name}: bialgebra axioms fail", failed=failed,
                                   witness=report['checks'][failed[0]]['witness'])
    if not report['checks']['antipode']['pass']:
        raise AntipodeNotFound(f"{pres.name}: solved antipode fails S * id = 1 epsilon",
                               witness=report['checks']['antipode']['witness'])
    report['overlaps'] = {'ambiguities': overlaps['ambiguities'], 'resolvable': True}
    report['antipode_images'] = {h.labels[g]: h.render(v) for g, v in sorted(images.items())}
    report['family'] = lifting.family
    logger.info(f"{pres.name}: Hopf algebra of dimension {h.dim}")
    return report


def generator_isomorphism(lifting: Lifting, target: HopfAlgebra, images: Dict[str, Vec],
                          source: Optional[HopfAlgebra] = None) -> dict:
    """
    Extend letter images multiplicatively over the PBW basis and check the result.

    Args:
        lifting: the presented source
        target: any HopfAlgebra of the same dimension
        images: letter name -> vector of target
        source: the materialized lifting, built when omitted

    Returns:
        check_morphism report
    """
    pres = lifting.presentation
    source = source or presented_hopf_algebra(lifting)
    names = {k: letter.name for k, letter in enumerate(pres.order.letters)}
    basis_images: Dict[int, Vec] = {}
    for k, label in enumerate(source.labels):
        word = pres.order.expand(pres.word(label))
        basis_images[k] = target.mul_many(*(images[names[g]] for g in word))
    report = check_morphism(HopfMorphism(source, target, basis_images))
    logger.info(f"{source.name} -> {target.name}: bijective={report['bijective']}, passed={report['passed']}")
    return report
