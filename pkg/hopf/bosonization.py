"""
Bosonization R#H of a braided Hopf algebra R in the Yetter-Drinfeld category
over H.

R is given by its multiplication on a word basis, the H-action on that basis
and the H-coaction on the degree-one generators (which are primitive in R):
    (r#h)(s#k) = r (h_(1).s) # h_(2) k
    Delta(v#1) = v#1 (x) 1#1 + (1#v_(-1)) (x) (v_(0)#1)
    Delta(1#h) = (1#h_(1)) (x) (1#h_(2))
and Delta is extended multiplicatively along the word basis.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from hopf.algebra import (
    HopfAlgebra, Tensor2, install_word_antipode, solve_antipode_on_generators,
)
from exactla import Vec, vec_add_term, vec_axpy, vec_equal
from scalar import ScalarContext
from utils.errors import YDViolation

logger = logging.getLogger(__name__)


@dataclass
class BraidedAlgebra:
    """
    Graded algebra R in YD(H) on a word basis; index 0 is the unit.

    Attributes:
        generators: R-indices of the degree-one basis vectors v_1, ..., v_d
        words: R-index -> tuple of generator R-indices
        action: (H-index, R-index) -> h.r
        coaction: generator R-index -> sum of (H-index, R-index) terms
    """
    ctx: ScalarContext
    name: str
    labels: List[str]
    mult: Callable[[int, int], Vec]
    words: Dict[int, Tuple[int, ...]]
    generators: List[int]
    action: Callable[[int, int], Vec]
    coaction: Callable[[int], Tensor2]

    @property
    def dim(self) -> int:
        return len(self.labels)


def yd_violation(h: HopfAlgebra, vectors: List[int],
                 act: Callable[[int, int], Vec], coact: Callable[[int], Tensor2]) -> Optional[list]:
    """
    First (h, v) where delta(h.v) != h_(1) v_(-1) S(h_(3)) (x) h_(2).v_(0), or None.

    act and coact are given on basis indices; act(h, v) may leave the listed
    vectors only inside a space on which coact is defined.
    """
    triples: Dict[int, list] = {}
    for k in range(h.dim):
        acc: Dict[Tuple[int, int, int], object] = {}
        for (a, b), s in h.comult(k).items():
            for (c, d), t in h.comult(a).items():
                vec_add_term(acc, (c, d, b), s * t)
        triples[k] = list(acc.items())

    for k in range(h.dim):
        for v in vectors:
            lhs: Tensor2 = {}
            for w, s in act(k, v).items():
                vec_axpy(lhs, s, coact(w))
            rhs: Tensor2 = {}
            for (h1, h2, h3), coeff in triples[k]:
                for (c, w), t in coact(v).items():
                    left = h.mul(h.mul(h.basis(h1), h.basis(c)), h.antipode(h3))
                    right = act(h2, w)
                    for x, a in left.items():
                        for y, b in right.items():
                            vec_add_term(rhs, (x, y), coeff * t * a * b)
            if not vec_equal(lhs, rhs):
                return [h.labels[k], v]
    return None


def bosonization(r: BraidedAlgebra, h: HopfAlgebra) -> HopfAlgebra:
    """
    R#H on the basis r#h at index r * dim H + h.

    Raises:
        YDViolation: when the generator action and coaction are not YD compatible
    """
    ctx = r.ctx
    dh = h.dim
    witness = yd_violation(h, r.generators, r.action, r.coaction)
    if witness is not None:
        raise YDViolation(f"{r.name} is not a Yetter-Drinfeld module over {h.name}", witness=witness)

    def product(u: int, v: int) -> Vec:
        ri, a = divmod(u, dh)
        si, b = divmod(v, dh)
        out: Vec = {}
        for (a1, a2), s in h.comult(a).items():
            acted = r.action(a1, si)
            if not acted:
                continue
            right = h.mult(a2, b)
            for w, t in acted.items():
                for x, c in r.mult(ri, w).items():
                    for y, e in right.items():
                        vec_add_term(out, x * dh + y, s * t * c * e)
        return out

    def counit(u: int):
        ri, a = divmod(u, dh)
        return h.counit(a) if ri == 0 else ctx.zero

    labels = [_smash_label(r.labels[i], h.labels[a]) for i in range(r.dim) for a in range(dh)]
    words = {i * dh + a: tuple(g * dh for g in r.words[i]) + tuple(h.words[a])
             for i in range(r.dim) for a in range(dh)}
    gens = [g * dh for g in r.generators] + list(h.generators)
    boson = HopfAlgebra(ctx, f'{r.name}#{h.name}', labels, product, lambda u: {}, {0: ctx.one}, counit,
                        generators=gens, words=words)

    generator_delta: Dict[int, Tensor2] = {}
    for g in r.generators:
        delta: Tensor2 = {(g * dh, 0): ctx.one}
        for (c, w), s in r.coaction(g).items():
            vec_add_term(delta, (c, w * dh), s)
        generator_delta[g * dh] = delta
    for g in h.generators:
        generator_delta[g] = dict(h.comult(g))

    def coproduct(u: int) -> Tensor2:
        out = boson.tensor_one()
        for g in words[u]:
            out = boson.tensor_mul(out, generator_delta[g])
        return out

    boson.set_coproduct(coproduct)
    known = {g: h.antipode(g) for g in h.generators}
    install_word_antipode(boson, solve_antipode_on_generators(boson, known))
    logger.info(f"Bosonization {boson.name}: dim {boson.dim}")
    return boson


def _smash_label(r_label: str, h_label: str) -> str:
    if h_label == '1':
        return r_label
    if r_label == '1':
        return h_label
    return f'{r_label}#{h_label}'
