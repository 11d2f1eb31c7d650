"""
B(V) as a braided Hopf algebra in YD(H), ready for bosonization.

Basis: the basis words of a NicholsQuotient, degree by degree; R-index 0 is
the unit and R-index 1 + a is the generator v_a.
"""

import logging
from typing import Dict, List, Optional, Tuple

from exactla import Vec, vec_add_term, vec_axpy
from hopf import BraidedAlgebra, HopfAlgebra, bosonization
from hopf.algebra import Tensor2
from nichols.graded import NicholsQuotient
from ydmod.braiding import braiding
from ydmod.module import YDModule

logger = logging.getLogger(__name__)


def nichols_braided_algebra(m: YDModule, quotient: Optional[NicholsQuotient] = None) -> BraidedAlgebra:
    """
    Materialize a finite B(V) with its H-action and generator coaction.

    Raises:
        CapExceeded: when B(V) does not close within the word cap
    """
    quotient = quotient or NicholsQuotient(braiding(m, check=False))
    quotient.build()
    h = m.h
    ctx = m.ctx
    offsets: List[int] = []
    flat: List[Tuple[int, int]] = []
    for n, words in enumerate(quotient.basis):
        offsets.append(len(flat))
        flat.extend((n, k) for k in range(len(words)))
    words = {r: tuple(1 + a for a in quotient.basis[n][k]) for r, (n, k) in enumerate(flat)}
    labels = ['1' if not words[r] else ''.join(m.labels[a - 1] for a in words[r]) for r in range(len(flat))]

    def globalize(n: int, vec: Vec) -> Vec:
        return {offsets[n] + k: s for k, s in vec.items()}

    def mult(r: int, s: int) -> Vec:
        (n1, k1), (n2, k2) = flat[r], flat[s]
        word = quotient.basis[n1][k1] + quotient.basis[n2][k2]
        return globalize(n1 + n2, quotient.normal_form_word(word))

    cache: Dict[Tuple[int, int], Vec] = {}

    def action(hk: int, r: int) -> Vec:
        key = (hk, r)
        if key in cache:
            return cache[key]
        n, k = flat[r]
        if n == 0:
            out = {0: h.counit(hk)} if not h.counit(hk).is_zero() else {}
        else:
            word = quotient.basis[n][k]
            rest = offsets[n - 1] + quotient.basis[n - 1].index(word[1:])
            out = {}
            for (h1, h2), s in h.comult(hk).items():
                head = m.act(h1, word[0])
                if not head:
                    continue
                tail = action(h2, rest)
                for a, t in head.items():
                    for u, w in tail.items():
                        vec_axpy(out, s * t * w, mult(1 + a, u))
        cache[key] = out
        return out

    def coaction(g: int) -> Tensor2:
        out: Tensor2 = {}
        for (c, u), s in m.coact(g - 1).items():
            vec_add_term(out, (c, 1 + u), s)
        return out

    logger.info(f"B({m.name}) materialized: dim {len(flat)}, top degree {quotient.top - 1}")
    return BraidedAlgebra(ctx, f'B({m.name})', labels, mult=mult, words=words,
                          generators=[1 + a for a in range(m.dim)], action=action, coaction=coaction)


def nichols_bosonization(m: YDModule, quotient: Optional[NicholsQuotient] = None) -> HopfAlgebra:
    """B(V) # H"""
    return bosonization(nichols_braided_algebra(m, quotient), m.h)
