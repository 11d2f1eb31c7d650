"""
Checks of a stated Nichols presentation against the computed B(V).
"""

import logging
from typing import List, Optional, Sequence

from nichols.graded import NicholsQuotient, default_cutoff
from nichols.derivations import TensorElement, tensor_degree
from nichols.presentations import NicholsPresentation, catalogue_presentation
from nichols.relations import ideal_graded_dims
from scalar import render
from utils.errors import CapExceeded, DimMismatch, RelationNotInKernel
from ydmod.braiding import Braiding, braiding
from ydmod.simples import make_module
from ydmod.summands import Summand

logger = logging.getLogger(__name__)


def relation_text(relation: TensorElement) -> str:
    return ' + '.join(f"({render(s)})*{''.join(f'v{a + 1}' for a in word)}"
                      for word, s in sorted(relation.items()))


def verify_presentation(c: Braiding, presentation: NicholsPresentation, cutoff: Optional[int] = None,
                        quotient: Optional[NicholsQuotient] = None) -> dict:
    """
    Check a presentation in three steps.

    (a) every relation vanishes in B(V), that is all its skew-derivations
        vanish degree by degree; (b) the ideal generated by the relations has
        the graded dimensions of J up to the cutoff; (c) the claimed PBW
        count equals dim B(V) once a zero degree is reached.

    Args:
        c: braiding of V, basis ordered as in the catalogue
        presentation: relations and profile
        cutoff: last degree for the truncated ideal check
        quotient: a NicholsQuotient of c to reuse

    Returns:
        Report with dims, total, per-relation status and the certificate

    Raises:
        RelationNotInKernel: for the first relation outside J
        DimMismatch: for the first degree where a check disagrees
    """
    cutoff = cutoff or default_cutoff(c.dim)
    profile = presentation.profile
    quotient = quotient or NicholsQuotient(c)
    checked: List[dict] = []

    for name, relation in zip(presentation.names, presentation.relations):
        degree = tensor_degree(relation)
        if not quotient.is_zero(relation):
            logger.warning(f"{profile.family}: relation {name} is not in the Nichols ideal")
            raise RelationNotInKernel(relation_text(relation), degree)
        checked.append({'relation': name, 'degree': degree, 'status': 'in-ideal'})

    quotient.build(max(cutoff, quotient.top))
    nichols_dims = quotient.dims
    ideal_dims = ideal_graded_dims(c.ctx, c.dim, presentation.relations, cutoff)
    for n, found in enumerate(ideal_dims):
        expected = nichols_dims[n] if n < len(nichols_dims) else 0
        if found != expected:
            raise DimMismatch(n, expected, found)

    quotient.build()
    total = sum(quotient.dims)
    if quotient.complete and total != profile.claimed_dim:
        raise DimMismatch('total', profile.claimed_dim, total)
    report = {
        'profile': profile.to_dict(),
        'dims': quotient.graded_dims().dims,
        'total': total if quotient.complete else None,
        'relations_checked': checked,
        'truncated_ideal_dims': ideal_dims,
        'certificate': f'symmetrizer-derivations/{profile.family}',
        'status': profile.status,
    }
    logger.info(f"{profile.family} {[s.label() for s in profile.summands]}: presentation verified, total {total}")
    return report


def nichols_certificate(ctx, summands: Sequence[Summand], cutoff: Optional[int] = None) -> dict:
    """
    Graded dimensions of B(V) for a sum of simples, with its catalogue entry.

    Without a cutoff the computation runs until a zero degree; a word cap
    hit is logged and the dims computed so far are reported as truncated.
    """
    m = make_module(ctx, summands)
    quotient = NicholsQuotient(braiding(m, check=False))
    try:
        quotient.build(cutoff)
    except CapExceeded as e:
        logger.warning(f"B({m.name}) truncated: {e}")
    dims = quotient.graded_dims(cutoff)
    presentation = catalogue_presentation(ctx, summands)
    return {
        'summands': [s.label() for s in summands],
        'graded': dims.to_dict(),
        'presentation': presentation.profile.to_dict() if presentation else None,
    }
