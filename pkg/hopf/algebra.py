"""
Finite-dimensional Hopf algebras given by structure constants.

Structure maps are supplied as functions on basis indices and memoized, so a
HopfAlgebra built from a presentation only materializes the products that are
actually used.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import config
from exactla import SparseMatrix, Vec, rank, solve, vec_add_term, vec_axpy, vec_equal
from scalar import ScalarContext, ThetaScalar
from utils.errors import AntipodeNotFound

logger = logging.getLogger(__name__)

Tensor2 = Dict[Tuple[int, int], ThetaScalar]
Tensor3 = Dict[Tuple[int, int, int], ThetaScalar]


class HopfAlgebra:
    """
    Hopf algebra on the basis e_0, ..., e_{dim-1}.

    Args:
        ctx: scalar context
        name: display name
        labels: one label per basis element
        product: (i, j) -> e_i e_j as a sparse vector
        coproduct: i -> Delta(e_i) as a sparse 2-tensor
        unit: the unit as a sparse vector
        counit: i -> epsilon(e_i)
        antipode: i -> S(e_i), optional
        generators: basis indices of algebra generators
        words: basis index -> tuple of generator indices whose product is e_i
    """

    def __init__(self, ctx: ScalarContext, name: str, labels: Sequence[str],
                 product: Callable[[int, int], Vec],
                 coproduct: Callable[[int], Tensor2],
                 unit: Vec,
                 counit: Callable[[int], ThetaScalar],
                 antipode: Optional[Callable[[int], Vec]] = None,
                 generators: Optional[List[int]] = None,
                 words: Optional[Dict[int, Tuple[int, ...]]] = None):
        self.ctx = ctx
        self.name = name
        self.labels = list(labels)
        self.dim = len(self.labels)
        self._product = product
        self._coproduct = coproduct
        self._counit = counit
        self._antipode = antipode
        self.unit = unit
        self.generators = list(generators) if generators is not None else list(range(self.dim))
        self.words = words
        self._mult_cache: Dict[Tuple[int, int], Vec] = {}
        self._comult_cache: Dict[int, Tensor2] = {}
        self._counit_cache: Dict[int, ThetaScalar] = {}
        self._antipode_cache: Dict[int, Vec] = {}

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.dim})"

    # structure maps on basis elements

    def basis(self, i: int) -> Vec:
        return {i: self.ctx.one}

    def one(self) -> Vec:
        return dict(self.unit)

    def mult(self, i: int, j: int) -> Vec:
        key = (i, j)
        cached = self._mult_cache.get(key)
        if cached is None:
            cached = self._product(i, j)
            self._mult_cache[key] = cached
        return cached

    def comult(self, i: int) -> Tensor2:
        cached = self._comult_cache.get(i)
        if cached is None:
            cached = self._coproduct(i)
            self._comult_cache[i] = cached
        return cached

    def counit(self, i: int) -> ThetaScalar:
        cached = self._counit_cache.get(i)
        if cached is None:
            cached = self._counit(i)
            self._counit_cache[i] = cached
        return cached

    def has_antipode(self) -> bool:
        return self._antipode is not None

    def set_coproduct(self, coproduct: Callable[[int], Tensor2]):
        self._coproduct = coproduct
        self._comult_cache.clear()

    def set_antipode(self, antipode: Callable[[int], Vec]):
        self._antipode = antipode
        self._antipode_cache.clear()

    def antipode(self, i: int) -> Vec:
        if self._antipode is None:
            raise AntipodeNotFound(f"{self.name} has no antipode", algebra=self.name)
        cached = self._antipode_cache.get(i)
        if cached is None:
            cached = self._antipode(i)
            self._antipode_cache[i] = cached
        return cached

    # linear extensions

    def mul(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, s in u.items():
            for j, t in v.items():
                vec_axpy(out, s * t, self.mult(i, j))
        return out

    def mul_many(self, *vectors: Vec) -> Vec:
        out = self.one()
        for v in vectors:
            out = self.mul(out, v)
        return out

    def power(self, u: Vec, n: int) -> Vec:
        out = self.one()
        for _ in range(n):
            out = self.mul(out, u)
        return out

    def comul(self, u: Vec) -> Tensor2:
        out: Tensor2 = {}
        for i, s in u.items():
            vec_axpy(out, s, self.comult(i))
        return out

    def eps(self, u: Vec) -> ThetaScalar:
        total = self.ctx.zero
        for i, s in u.items():
            total = total + s * self.counit(i)
        return total

    def apply_antipode(self, u: Vec) -> Vec:
        out: Vec = {}
        for i, s in u.items():
            vec_axpy(out, s, self.antipode(i))
        return out

    def tensor_mul(self, t1: Tensor2, t2: Tensor2) -> Tensor2:
        """Product in the algebra H (x) H"""
        out: Tensor2 = {}
        for (i1, j1), s in t1.items():
            for (i2, j2), t in t2.items():
                left = self.mult(i1, i2)
                right = self.mult(j1, j2)
                coeff = s * t
                for k, a in left.items():
                    for m, b in right.items():
                        vec_add_term(out, (k, m), coeff * a * b)
        return out

    def tensor_one(self) -> Tensor2:
        return {(i, j): s * t for i, s in self.unit.items() for j, t in self.unit.items()}

    def render(self, u: Vec) -> str:
        from scalar import render
        if not u:
            return '0'
        return ' + '.join(f"({render(s)})*{self.labels[i]}" for i, s in sorted(u.items()))


def tensor_of(u: Vec, v: Vec) -> Tensor2:
    return {(i, j): s * t for i, s in u.items() for j, t in v.items()}


def has_word_basis(h: HopfAlgebra) -> bool:
    """True when every basis element carries a word in the generators"""
    if not h.words or set(h.words) != set(range(h.dim)):
        return False
    gens = set(h.generators)
    return all(g in gens for word in h.words.values() for g in word)


def use_exhaustive(h: HopfAlgebra, exhaustive: Optional[bool]) -> bool:
    if exhaustive is None:
        exhaustive = h.dim <= config.EXHAUSTIVE_DIM
    if not exhaustive and not has_word_basis(h):
        logger.info(f"{h.name}: no word basis, checking exhaustively")
        return True
    return exhaustive


def word_product_failure(h: HopfAlgebra) -> Optional[List[int]]:
    """
    First pair (i, j) where e_i e_j is not the word of e_i applied to e_j.

    The word g w of e_i is checked as e_i e_j = g (e_k e_j), with e_k the
    basis element whose word is w, so each product costs one multiplication.
    """
    by_word = {tuple(w): i for i, w in h.words.items()}
    for i in sorted(range(h.dim), key=lambda k: len(h.words[k])):
        word = tuple(h.words[i])
        rest = by_word.get(word[1:]) if word else None
        for j in range(h.dim):
            if not word:
                expected = h.basis(j)
            elif rest is not None:
                expected = h.mul(h.basis(word[0]), h.mult(rest, j))
            else:
                expected = h.basis(j)
                for g in reversed(word):
                    expected = h.mul(h.basis(g), expected)
            if not vec_equal(expected, h.mult(i, j)):
                return [i, j]
    return None


def basis_pairs(h: HopfAlgebra, exhaustive: bool):
    """
    Pairs used by multiplicativity checks.

    Outside exhaustive mode the pairs (g, j) with g a generator suffice once
    the word products hold and the map sends 1 to 1.
    """
    if exhaustive:
        return [(i, j) for i in range(h.dim) for j in range(h.dim)]
    gens = h.generators
    pairs = {(g, j) for g in gens for j in range(h.dim)}
    pairs |= {(j, g) for g in gens for j in range(h.dim)}
    return sorted(pairs)


def basis_triples(h: HopfAlgebra, exhaustive: bool):
    """
    Triples used by the associativity check.

    Outside exhaustive mode these are (g, j, k) with g a generator: together
    with the word products, (g e_j) e_k = g (e_j e_k) gives associativity on
    the whole basis.
    """
    if exhaustive:
        return ((i, j, k) for i in range(h.dim) for j in range(h.dim) for k in range(h.dim))
    return ((g, j, k) for g in h.generators for j in range(h.dim) for k in range(h.dim))


def _check(name: str, failures: list) -> dict:
    return {'pass': not failures, 'witness': failures[0] if failures else None}


def antipode_order(h: HopfAlgebra, bound: Optional[int] = None) -> Optional[int]:
    """Smallest n >= 1 with S^n = id, or None within the bound"""
    bound = bound or config.ORDER_SEARCH_FACTOR * 2 * h.ctx.p
    current = {i: h.basis(i) for i in range(h.dim)}
    for n in range(1, bound + 1):
        current = {i: h.apply_antipode(v) for i, v in current.items()}
        if all(vec_equal(current[i], h.basis(i)) for i in range(h.dim)):
            return n
    return None


def verify_hopf(h: HopfAlgebra, exhaustive: Optional[bool] = None) -> dict:
    """
    Check every Hopf algebra axiom exactly.

    Algebras of dimension at most EXHAUSTIVE_DIM, or without a word basis,
    are checked on all basis pairs and triples. Larger ones first check that
    every product e_i e_j is the generator word of e_i applied to e_j; then
    associativity on triples (g, j, k) and multiplicativity on pairs (g, j)
    with g a generator, plus Delta(1) = 1 (x) 1 and epsilon(1) = 1, imply
    the axioms on the whole basis. Coassociativity, counit and antipode laws
    are checked on every basis element in both modes.

    Returns:
        Report dict with one entry per axiom and the antipode order
    """
    exhaustive = use_exhaustive(h, exhaustive)
    lab = h.labels
    one = h.one()
    logger.info(f"Verifying {h.name} (dim {h.dim}, {'exhaustive' if exhaustive else 'generator'} mode)")

    assoc = []
    if not exhaustive:
        witness = word_product_failure(h)
        if witness is not None:
            assoc.append([lab[witness[0]], lab[witness[1]], 'word'])
    for i, j, k in ([] if assoc else basis_triples(h, exhaustive)):
        left = h.mul(h.mult(i, j), h.basis(k))
        right = h.mul(h.basis(i), h.mult(j, k))
        if not vec_equal(left, right):
            assoc.append([lab[i], lab[j], lab[k]])
            break

    unit = []
    for i in range(h.dim):
        e = h.basis(i)
        if not vec_equal(h.mul(one, e), e) or not vec_equal(h.mul(e, one), e):
            unit.append([lab[i]])
            break

    coassoc = []
    counit = []
    for i in range(h.dim):
        delta = h.comult(i)
        left: Tensor3 = {}
        right: Tensor3 = {}
        for (a, b), s in delta.items():
            for (c, d), t in h.comult(a).items():
                vec_add_term(left, (c, d, b), s * t)
            for (c, d), t in h.comult(b).items():
                vec_add_term(right, (a, c, d), s * t)
        if not coassoc and not vec_equal(left, right):
            coassoc.append([lab[i]])
        lhs: Vec = {}
        rhs: Vec = {}
        for (a, b), s in delta.items():
            vec_add_term(lhs, b, s * h.counit(a))
            vec_add_term(rhs, a, s * h.counit(b))
        if not counit and (not vec_equal(lhs, h.basis(i)) or not vec_equal(rhs, h.basis(i))):
            counit.append([lab[i]])

    comult_mult = []
    counit_mult = []
    if not vec_equal(h.comul(one), h.tensor_one()):
        comult_mult.append(['1'])
    if h.eps(one) != h.ctx.one:
        counit_mult.append(['1'])
    for i, j in basis_pairs(h, exhaustive):
        prod = h.mult(i, j)
        if not comult_mult and not vec_equal(h.comul(prod), h.tensor_mul(h.comult(i), h.comult(j))):
            comult_mult.append([lab[i], lab[j]])
        if not counit_mult and h.eps(prod) != h.counit(i) * h.counit(j):
            counit_mult.append([lab[i], lab[j]])
        if comult_mult and counit_mult:
            break

    antipode = []
    if not h.has_antipode():
        antipode.append(['missing'])
    else:
        for i in range(h.dim):
            lhs: Vec = {}
            rhs: Vec = {}
            for (a, b), s in h.comult(i).items():
                vec_axpy(lhs, s, h.mul(h.antipode(a), h.basis(b)))
                vec_axpy(rhs, s, h.mul(h.basis(a), h.antipode(b)))
            expected = {k: v * h.counit(i) for k, v in one.items() if not (v * h.counit(i)).is_zero()}
            if not vec_equal(lhs, expected) or not vec_equal(rhs, expected):
                antipode.append([lab[i]])
                break

    checks = {
        'associativity': _check('associativity', assoc),
        'unit': _check('unit', unit),
        'coassociativity': _check('coassociativity', coassoc),
        'counit': _check('counit', counit),
        'comult_multiplicative': _check('comult_multiplicative', comult_mult),
        'counit_multiplicative': _check('counit_multiplicative', counit_mult),
        'antipode': _check('antipode', antipode),
    }
    passed = all(c['pass'] for c in checks.values())
    report = {
        'algebra': h.name,
        'dim': h.dim,
        'mode': 'exhaustive' if exhaustive else 'generators',
        'checks': checks,
        'antipode_order': antipode_order(h) if checks['antipode']['pass'] else None,
        'passed': passed,
    }
    if passed:
        logger.info(f"{h.name}: all axioms pass (antipode order {report['antipode_order']})")
    else:
        failed = [name for name, c in checks.items() if not c['pass']]
        logger.warning(f"{h.name}: failed axioms {failed}")
    return report


def solve_antipode_on_generators(h: HopfAlgebra, known: Optional[Dict[int, Vec]] = None) -> Dict[int, Vec]:
    """
    Solve m(S (x) id)Delta(u) = epsilon(u)1 for S(u), one generator at a time.

    Delta(u) is split as sum h_k (x) w_k; the terms with h_k = u give S(u) W,
    the others must only involve basis words whose generators already have
    a known antipode. W must be invertible.

    Raises:
        AntipodeNotFound: when no generator order makes the system triangular
            or W is not invertible
    """
    if h.words is None:
        raise AntipodeNotFound(f"{h.name}: no word factorization of the basis", algebra=h.name)
    images: Dict[int, Vec] = dict(known or {})
    pending = [g for g in h.generators if g not in images]

    def antipode_of_word(k: int) -> Optional[Vec]:
        if any(g not in images for g in h.words[k]):
            return None
        out = h.one()
        for g in reversed(h.words[k]):
            out = h.mul(out, images[g])
        return out

    progress = True
    while pending and progress:
        progress = False
        for u in list(pending):
            w: Vec = {}
            rest: Vec = {}
            ok = True
            for (a, b), s in h.comult(u).items():
                if a == u:
                    vec_add_term(w, b, s)
                    continue
                sa = antipode_of_word(a)
                if sa is None:
                    ok = False
                    break
                vec_axpy(rest, s, h.mul(sa, h.basis(b)))
            if not ok or not w:
                continue
            rhs = {k: v * h.counit(u) for k, v in h.unit.items()}
            for k, v in rest.items():
                vec_add_term(rhs, k, -v)
            # right inverse of w through the left multiplication matrix
            columns = [h.mul(w, h.basis(k)) for k in range(h.dim)]
            w_inv = solve(SparseMatrix.from_columns(h.ctx, h.dim, columns), h.one())
            if w_inv is None:
                raise AntipodeNotFound(f"{h.name}: leading coefficient of {h.labels[u]} is not invertible",
                                       generator=h.labels[u])
            images[u] = h.mul(rhs, w_inv)
            pending.remove(u)
            progress = True
    if pending:
        raise AntipodeNotFound(f"{h.name}: antipode system is not triangular",
                               generators=[h.labels[g] for g in pending])
    return images


def install_word_antipode(h: HopfAlgebra, generator_images: Dict[int, Vec]):
    """Extend S anti-multiplicatively from generators to the word basis"""
    def antipode(k: int) -> Vec:
        out = h.one()
        for g in reversed(h.words[k]):
            out = h.mul(out, generator_images[g])
        return out
    h.set_antipode(antipode)


@dataclass
class HopfMorphism:
    """Linear map source -> target given by the images of source basis elements"""
    source: HopfAlgebra
    target: HopfAlgebra
    images: Dict[int, Vec] = field(default_factory=dict)

    def apply(self, u: Vec) -> Vec:
        out: Vec = {}
        for i, s in u.items():
            vec_axpy(out, s, self.images.get(i, {}))
        return out

    def apply_tensor(self, t: Tensor2) -> Tensor2:
        out: Tensor2 = {}
        for (i, j), s in t.items():
            for k, a in self.images.get(i, {}).items():
                for m, b in self.images.get(j, {}).items():
                    vec_add_term(out, (k, m), s * a * b)
        return out


def check_morphism(phi: HopfMorphism, exhaustive: Optional[bool] = None) -> dict:
    """
    Algebra map, coalgebra map and bijectivity checks, each exact.

    Outside exhaustive mode the algebra map is checked on pairs with a
    generator, after the word products of the source are confirmed.
    """
    src, tgt = phi.source, phi.target
    exhaustive = use_exhaustive(src, exhaustive)
    lab = src.labels

    algebra = []
    if not vec_equal(phi.apply(src.one()), tgt.one()):
        algebra.append(['1'])
    if not exhaustive and not algebra:
        witness = word_product_failure(src)
        if witness is not None:
            algebra.append([lab[witness[0]], lab[witness[1]], 'word'])
    for i, j in basis_pairs(src, exhaustive):
        if algebra:
            break
        if not vec_equal(phi.apply(src.mult(i, j)), tgt.mul(phi.images.get(i, {}), phi.images.get(j, {}))):
            algebra.append([lab[i], lab[j]])

    coalgebra = []
    for i in range(src.dim):
        image = phi.images.get(i, {})
        if not vec_equal(phi.apply_tensor(src.comult(i)), tgt.comul(image)) or tgt.eps(image) != src.counit(i):
            coalgebra.append([lab[i]])
            break

    matrix = SparseMatrix.from_columns(src.ctx, tgt.dim, [phi.images.get(i, {}) for i in range(src.dim)])
    injective = rank(matrix) == src.dim
    bijective = injective and src.dim == tgt.dim
    return {
        'source': src.name,
        'target': tgt.name,
        'algebra_map': _check('algebra_map', algebra),
        'coalgebra_map': _check('coalgebra_map', coalgebra),
        'injective': injective,
        'bijective': bijective,
        'passed': not algebra and not coalgebra and injective,
    }
