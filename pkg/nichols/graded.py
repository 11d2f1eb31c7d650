"""
Degree-by-degree construction of B(V) = T(V)/J(V).

B^n is spanned by the products v_a b with b running over a basis of B^{n-1}.
A candidate v_a b is zero in B^n exactly when all its skew-derivations vanish
in B^{n-1}, so each degree costs one elimination on d * dim B^{n-1} columns
instead of a rank computation on V^{(x)n}. Surviving candidates become the
basis words of degree n; the others get their normal form from the
elimination.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import config
from exactla import Echelon, Vec, vec_add_term, vec_axpy
from nichols.derivations import TensorElement, Word
from utils.errors import CapExceeded
from ydmod.braiding import Braiding

logger = logging.getLogger(__name__)


@dataclass
class GradedDims:
    """Graded dimensions of a Nichols algebra up to a cutoff"""
    dims: List[int]
    cutoff: Optional[int]
    complete: bool = False

    @property
    def total(self) -> Optional[int]:
        return sum(self.dims) if self.complete else None

    @property
    def top_degree(self) -> Optional[int]:
        return len(self.dims) - 1 if self.complete else None

    def to_dict(self) -> dict:
        return {
            'dims': list(self.dims),
            'cutoff': self.cutoff,
            'complete': self.complete,
            'total': self.total,
            'status': 'complete' if self.complete else 'truncated',
        }


def default_cutoff(dim: int) -> int:
    return config.CUTOFF_SMALL if dim <= 2 else config.CUTOFF_LARGE


class NicholsQuotient:
    """
    Basis words and normal forms of B(V) in degrees 0..top.

    Attributes:
        basis: per degree, the basis words (letter tuples)
        products: per degree n, (letter, index in degree n-1) -> normal form in degree n
        derivations: per degree n, basis index -> {f: normal form of d_f in degree n-1}
    """

    def __init__(self, c: Braiding, cap: Optional[int] = None):
        self.c = c
        self.ctx = c.ctx
        self.dim = c.dim
        self.cap = cap or config.WORD_CAP
        self.basis: List[List[Word]] = [[()]]
        self.products: List[Dict[Tuple[int, int], Vec]] = [{}]
        self.derivations: List[List[Dict[int, Vec]]] = [[{}]]
        self.complete = False
        # c[(f,b),(a,g)] grouped by (a, g)
        d = c.dim
        self._moves: Dict[Tuple[int, int], List[Tuple[int, int, object]]] = {}
        for r, col, s in c.matrix.items():
            a, g = divmod(col, d)
            f, b = divmod(r, d)
            self._moves.setdefault((a, g), []).append((f, b, s))
        self._nf_cache: Dict[Word, Vec] = {(): {0: self.ctx.one}}

    @property
    def top(self) -> int:
        return len(self.basis) - 1

    @property
    def dims(self) -> List[int]:
        return [len(b) for b in self.basis]

    def _candidate_derivatives(self, n: int, a: int, s: int) -> Dict[int, Vec]:
        """{f: d_f(v_a b_s) in degree n-1} for the basis word b_s of degree n-1"""
        out: Dict[int, Vec] = {a: {s: self.ctx.one}}
        if n == 1:
            return out
        below = self.derivations[n - 1][s]
        for g, dg in below.items():
            for f, b, coeff in self._moves.get((a, g), ()):
                target = out.setdefault(f, {})
                for t, u in dg.items():
                    vec_axpy(target, coeff * u, self.products[n - 1][(b, t)])
        return {f: v for f, v in out.items() if v}

    def extend(self) -> int:
        """Compute the next degree; returns its dimension"""
        n = self.top + 1
        prev = len(self.basis[n - 1])
        limit = self.dim * prev
        ech = Echelon(self.ctx, pivot_limit=limit)
        candidates = [(a, s) for a in range(self.dim) for s in range(prev)]
        words: List[Word] = []
        derivs: List[Dict[int, Vec]] = []
        position: Dict[int, int] = {}
        products: Dict[Tuple[int, int], Vec] = {}
        for ci, (a, s) in enumerate(candidates):
            ders = self._candidate_derivatives(n, a, s)
            v: Vec = {limit + ci: self.ctx.one}
            for f, vec in ders.items():
                for t, coeff in vec.items():
                    v[f * prev + t] = coeff
            rem = ech.reduce(v)
            if any(k < limit for k in rem):
                ech.add(v)
                position[ci] = len(words)
                words.append((a,) + self.basis[n - 1][s])
                derivs.append(ders)
                products[(a, s)] = {position[ci]: self.ctx.one}
            else:
                nf: Vec = {}
                for k, coeff in rem.items():
                    if k != limit + ci:
                        vec_add_term(nf, position[k - limit], -coeff)
                products[(a, s)] = nf
        self.basis.append(words)
        self.products.append(products)
        self.derivations.append(derivs)
        total = sum(self.dims)
        if total > self.cap:
            raise CapExceeded('nichols basis words', total, self.cap)
        if not words:
            self.complete = True
        logger.debug(f"B^{n}[{self.c.name}] has dim {len(words)}")
        return len(words)

    def build(self, cutoff: Optional[int] = None) -> 'NicholsQuotient':
        """Extend until a zero degree or the cutoff"""
        while not self.complete and (cutoff is None or self.top < cutoff):
            self.extend()
        return self

    def graded_dims(self, cutoff: Optional[int] = None) -> GradedDims:
        # the zero degree that closed the computation is not listed
        dims = self.dims[:-1] if self.complete else self.dims
        return GradedDims(dims, cutoff, self.complete)

    def normal_form_word(self, word: Word) -> Vec:
        """Coordinates of a word in the basis of its degree"""
        word = tuple(word)
        if word in self._nf_cache:
            return self._nf_cache[word]
        n = len(word)
        while self.top < n and not self.complete:
            self.extend()
        if n > self.top:
            return {}
        out: Vec = {}
        for t, coeff in self.normal_form_word(word[1:]).items():
            vec_axpy(out, coeff, self.products[n][(word[0], t)])
        self._nf_cache[word] = out
        return out

    def normal_form(self, v: TensorElement) -> Dict[int, Vec]:
        """Per-degree coordinates of a tensor element"""
        out: Dict[int, Vec] = {}
        for word, s in v.items():
            target = out.setdefault(len(word), {})
            vec_axpy(target, s, self.normal_form_word(word))
        return {n: vec for n, vec in out.items() if vec}

    def is_zero(self, v: TensorElement) -> bool:
        return not self.normal_form(v)

    def element(self, degree: int, vec: Vec) -> TensorElement:
        return {self.basis[degree][k]: s for k, s in vec.items()}


def graded_dims(c: Braiding, cutoff: Optional[int] = None, cap: Optional[int] = None) -> GradedDims:
    """
    dim B^n(V) for n up to the cutoff.

    Args:
        c: braiding of V
        cutoff: last degree computed; None runs until a zero degree
        cap: bound on the total number of basis words

    Returns:
        GradedDims, complete when a zero degree was reached

    Raises:
        CapExceeded: when the basis grows past the cap
    """
    quotient = NicholsQuotient(c, cap).build(cutoff)
    result = quotient.graded_dims(cutoff)
    logger.info(f"B({c.name}): dims {result.dims}{'' if result.complete else ' (truncated)'}")
    return result
