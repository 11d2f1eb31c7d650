"""
Skew-derivations on T(V).

Tensor elements are sparse maps from letter tuples to scalars. For f the
coordinate functional of v_f,

    d_f(v) = (f (x) id) Delta^{1, m-1}(v)

and Delta^{1, m-1} = 1 + c_1 (id (x) Delta^{1, m-2}) gives, for a letter x
followed by a word y,

    d_f(x y) = delta_{f,x} y + sum_{g,b} c[(f,b),(x,g)] b d_g(y)

An element r of degree m lies in the Nichols ideal exactly when every d_f(r)
lies in it in degree m - 1.
"""

import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from exactla import SparseMatrix, all_words, index_word, kernel_basis, vec_add_term, vec_axpy
from nichols.symmetrizer import quantum_symmetrizer
from scalar import ScalarContext, ThetaScalar
from ydmod.braiding import Braiding

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
TensorElement = Dict[Word, ThetaScalar]


def word_element(ctx: ScalarContext, word: Sequence[int]) -> TensorElement:
    return {tuple(word): ctx.one}


def tensor_degree(v: TensorElement) -> int:
    degrees = {len(w) for w in v}
    if len(degrees) > 1:
        raise ValueError(f"element is not homogeneous: degrees {sorted(degrees)}")
    return degrees.pop() if degrees else 0


def multiply(u: TensorElement, v: TensorElement) -> TensorElement:
    """Concatenation product in T(V)"""
    out: TensorElement = {}
    for a, s in u.items():
        for b, t in v.items():
            vec_add_term(out, a + b, s * t)
    return out


def linear_combination(ctx: ScalarContext, terms: Iterable[Tuple[ThetaScalar, Sequence[int]]]) -> TensorElement:
    out: TensorElement = {}
    for coeff, word in terms:
        vec_add_term(out, tuple(word), coeff if isinstance(coeff, ThetaScalar) else ctx.from_int(coeff))
    return out


class SkewDerivations:
    """All d_f of one braiding, with per-word caching"""

    def __init__(self, c: Braiding):
        self.c = c
        self.ctx = c.ctx
        self.dim = c.dim
        self._cache: Dict[Tuple[int, Word], TensorElement] = {}
        # c[(f,b),(x,g)] grouped by (x, g)
        d = c.dim
        self._moves: Dict[Tuple[int, int], List[Tuple[int, int, ThetaScalar]]] = {}
        for r, col, s in c.matrix.items():
            x, g = divmod(col, d)
            f, b = divmod(r, d)
            self._moves.setdefault((x, g), []).append((f, b, s))

    def of_word(self, f: int, word: Word) -> TensorElement:
        key = (f, word)
        if key in self._cache:
            return self._cache[key]
        if not word:
            raise ValueError("skew-derivations vanish on degree 0")
        x, rest = word[0], word[1:]
        out: TensorElement = {}
        if x == f:
            vec_add_term(out, rest, self.ctx.one)
        if rest:
            for g in range(self.dim):
                dg = None
                for f2, b, s in self._moves.get((x, g), ()):
                    if f2 != f:
                        continue
                    if dg is None:
                        dg = self.of_word(g, rest)
                    for w, t in dg.items():
                        vec_add_term(out, (b,) + w, s * t)
        self._cache[key] = out
        return out

    def apply(self, f: int, v: TensorElement) -> TensorElement:
        out: TensorElement = {}
        for word, s in v.items():
            vec_axpy(out, s, self.of_word(f, word))
        return out

    def annihilates(self, v: TensorElement) -> bool:
        """True when v lies in the Nichols ideal J"""
        if not v:
            return True
        if tensor_degree(v) <= 1:
            return False
        return all(self.annihilates(self.apply(f, v)) for f in range(self.dim))


def skew_derivation(c: Braiding, f_index: int, v: TensorElement) -> TensorElement:
    """
    d_f(v) for the coordinate functional f = v_{f_index}^*.

    Args:
        c: braiding on V (x) V
        f_index: basis index of the functional
        v: homogeneous element of degree m >= 1

    Returns:
        Element of degree m - 1; in degree 0 the key is the empty tuple
    """
    return SkewDerivations(c).apply(f_index, v)


def in_nichols_ideal(c: Braiding, v: TensorElement) -> bool:
    """Joint annihilation by all iterated skew-derivations"""
    return SkewDerivations(c).annihilates(v)


def kernel_elements(c: Braiding, n: int) -> List[TensorElement]:
    """Basis of ker Omega_n as tensor elements"""
    omega = quantum_symmetrizer(c, n)
    return [{index_word(idx, c.dim, n): s for idx, s in vec.items()} for vec in kernel_basis(omega)]


def joint_kernel(c: Braiding, n: int) -> List[TensorElement]:
    """
    Basis of {r in T^n : d_{f_1} ... d_{f_n} r = 0 for all f}.

    Built as the kernel of the stacked derivation matrix, independently of
    Omega_n.
    """
    words = all_words(c.dim, n)
    ders = SkewDerivations(c)
    paths = all_words(c.dim, n)
    stacked = SparseMatrix(c.ctx, len(paths), len(words))
    for col, word in enumerate(words):
        for row, path in enumerate(paths):
            v = {word: c.ctx.one}
            for f in reversed(path):
                v = ders.apply(f, v)
                if not v:
                    break
            s = v.get((), None)
            if s is not None and not s.is_zero():
                stacked.set(row, col, s)
    return [{words[idx]: s for idx, s in vec.items()} for vec in kernel_basis(stacked)]
