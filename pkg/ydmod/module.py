"""
Yetter-Drinfeld modules over a finite-dimensional Hopf algebra H.

A module is stored as one action matrix per algebra generator of H plus the
coaction of every basis vector, delta(v_m) = sum h (x) v_n, kept as a sparse
map (H-index, module index) -> scalar. Actions of other basis elements of H
are products of generator matrices along the word basis of H.
"""

import logging
from typing import Dict, List, Optional, Sequence

from exactla import SparseMatrix, Vec, kernel_basis, rank, vec_add_term, vec_axpy, vec_equal
from hopf import HopfAlgebra, antipode_order, yd_violation
from hopf.algebra import Tensor2
from utils.errors import AntipodeNotFound, YDViolation

logger = logging.getLogger(__name__)


class YDModule:
    """
    Left-left Yetter-Drinfeld module over h.

    Args:
        h: the Hopf algebra; needs a word basis
        name: display name
        dim: dimension
        actions: generator index of h -> dim x dim matrix
        coaction: basis index -> delta(v) as {(h-index, module index): scalar}
        summands: the simple summands, when known
        verify: run the module, comodule and YD checks and raise on failure

    Raises:
        YDViolation: when verify is set and a check fails
    """

    def __init__(self, h: HopfAlgebra, name: str, dim: int, actions: Dict[int, SparseMatrix],
                 coaction: Dict[int, Tensor2], summands: Optional[Sequence] = None,
                 labels: Optional[List[str]] = None, verify: bool = True):
        self.h = h
        self.ctx = h.ctx
        self.name = name
        self.dim = dim
        self.actions = dict(actions)
        self.coaction = {m: dict(coaction.get(m, {})) for m in range(dim)}
        self.summands = list(summands) if summands is not None else None
        self.labels = list(labels) if labels else [f'v{m + 1}' for m in range(dim)]
        self._matrices: Dict[int, SparseMatrix] = {}
        if verify:
            report = self.verify()
            if not report['passed']:
                failed = {k: v['witness'] for k, v in report['checks'].items() if not v['pass']}
                raise YDViolation(f"{name} is not a Yetter-Drinfeld module over {h.name}", failed=failed)

    def __repr__(self):
        return f"YDModule({self.name}, dim={self.dim})"

    def matrix(self, k: int) -> SparseMatrix:
        """Action matrix of the basis element e_k of h"""
        cached = self._matrices.get(k)
        if cached is None:
            cached = SparseMatrix.identity(self.ctx, self.dim)
            for g in self.h.words[k]:
                cached = cached @ self.actions[g]
            self._matrices[k] = cached
        return cached

    def matrix_of(self, u: Vec) -> SparseMatrix:
        """Action matrix of an arbitrary element of h"""
        out = SparseMatrix(self.ctx, self.dim, self.dim)
        for k, s in u.items():
            out = out + self.matrix(k).scaled(s)
        return out

    def act(self, k: int, m: int) -> Vec:
        return self.matrix(k).column(m)

    def coact(self, m: int) -> Tensor2:
        return self.coaction[m]

    def coact_vector(self, v: Vec) -> Tensor2:
        out: Tensor2 = {}
        for m, s in v.items():
            vec_axpy(out, s, self.coaction[m])
        return out

    def verify(self) -> dict:
        """Module, comodule and Yetter-Drinfeld compatibility, each exact"""
        h = self.h
        module = []
        for g in h.generators:
            for k in range(h.dim):
                if not self.matrix_of(h.mult(g, k)) == self.actions[g] @ self.matrix(k):
                    module.append([h.labels[g], h.labels[k]])
                    break
            if module:
                break

        comodule = []
        counit = []
        for m in range(self.dim):
            left: Dict[tuple, object] = {}
            right: Dict[tuple, object] = {}
            back: Vec = {}
            for (c, n), s in self.coaction[m].items():
                for (c1, c2), t in h.comult(c).items():
                    vec_add_term(left, (c1, c2, n), s * t)
                for (d, q), t in self.coaction[n].items():
                    vec_add_term(right, (c, d, q), s * t)
                vec_add_term(back, n, s * h.counit(c))
            if not comodule and not vec_equal(left, right):
                comodule.append(self.labels[m])
            if not counit and not vec_equal(back, {m: self.ctx.one}):
                counit.append(self.labels[m])

        yd = []
        if not module and not comodule:
            witness = yd_violation(h, list(range(self.dim)), self.act, self.coact)
            if witness is not None:
                yd.append(witness)

        checks = {
            'module': {'pass': not module, 'witness': module[0] if module else None},
            'comodule': {'pass': not comodule, 'witness': comodule[0] if comodule else None},
            'counit': {'pass': not counit, 'witness': counit[0] if counit else None},
            'yetter_drinfeld': {'pass': not yd, 'witness': yd[0] if yd else None},
        }
        passed = all(c['pass'] for c in checks.values())
        logger.debug(f"{self.name}: YD checks {'pass' if passed else 'fail'}")
        return {'module': self.name, 'dim': self.dim, 'checks': checks, 'passed': passed}


def direct_sum(modules: Sequence[YDModule], name: Optional[str] = None) -> YDModule:
    """Block-diagonal sum, summands in the given order"""
    if not modules:
        raise ValueError("direct sum of no modules")
    h = modules[0].h
    ctx = h.ctx
    dim = sum(m.dim for m in modules)
    actions = {g: SparseMatrix(ctx, dim, dim) for g in h.generators}
    coaction: Dict[int, Tensor2] = {}
    labels: List[str] = []
    summands: Optional[list] = []
    offset = 0
    for pos, mod in enumerate(modules, start=1):
        for g in h.generators:
            for r, c, s in mod.actions[g].items():
                actions[g].set(offset + r, offset + c, s)
        for m in range(mod.dim):
            coaction[offset + m] = {(c, offset + n): s for (c, n), s in mod.coaction[m].items()}
        labels.extend(mod.labels if len(modules) == 1 else [f"{lab}.{pos}" for lab in mod.labels])
        if summands is not None and mod.summands is not None:
            summands.extend(mod.summands)
        else:
            summands = None
        offset += mod.dim
    name = name or ' + '.join(m.name for m in modules)
    return YDModule(h, name, dim, actions, coaction, summands=summands, labels=labels)


def inverse_antipode(h: HopfAlgebra):
    """S^-1 as S^{n-1}, n the order of S"""
    order = antipode_order(h)
    if order is None:
        raise AntipodeNotFound(f"{h.name}: antipode order not found", algebra=h.name)
    cache: Dict[int, Vec] = {}

    def apply(k: int) -> Vec:
        v = cache.get(k)
        if v is None:
            v = h.basis(k)
            for _ in range(order - 1):
                v = h.apply_antipode(v)
            cache[k] = v
        return v
    return apply


def left_dual(m: YDModule) -> YDModule:
    """
    V^* on the dual basis f^1, ..., f^d:
        (h.f)(v) = f(S(h)v),  f_(-1) f_(0)(v) = S^-1(v_(-1)) f(v_(0))
    """
    h = m.h
    actions = {g: m.matrix_of(h.antipode(g)).transpose() for g in h.generators}
    s_inv = inverse_antipode(h)
    coaction: Dict[int, Tensor2] = {k: {} for k in range(m.dim)}
    for row in range(m.dim):
        for (c, n), s in m.coaction[row].items():
            for c2, t in s_inv(c).items():
                vec_add_term(coaction[n], (c2, row), s * t)
    summands = None
    if m.summands is not None:
        from ydmod.summands import dual_summand
        summands = [dual_summand(m.ctx.p, s) for s in m.summands]
    return YDModule(h, f'({m.name})*', m.dim, actions, coaction, summands=summands,
                    labels=[f'f{k + 1}' for k in range(m.dim)])


def yd_intertwiners(m1: YDModule, m2: YDModule) -> List[SparseMatrix]:
    """
    Basis of the YD morphisms T: m1 -> m2, found as the kernel of the linear
    conditions T [g]_1 = [g]_2 T on generators and (id (x) T) delta_1 = delta_2 T.
    """
    ctx = m1.ctx
    d1, d2 = m1.dim, m2.dim
    rows: List[Vec] = []

    def unknown(r: int, c: int) -> int:
        return r * d1 + c

    for g in m1.h.generators:
        a1, a2 = m1.actions[g], m2.actions[g]
        for r in range(d2):
            for c in range(d1):
                eq: Vec = {}
                for k in range(d1):
                    s = a1.get(k, c)
                    if not s.is_zero():
                        vec_add_term(eq, unknown(r, k), s)
                for k in range(d2):
                    s = a2.get(r, k)
                    if not s.is_zero():
                        vec_add_term(eq, unknown(k, c), -s)
                if eq:
                    rows.append(eq)

    for col in range(d1):
        eqs: Dict[tuple, Vec] = {}
        for (c, n), s in m1.coaction[col].items():
            for r in range(d2):
                vec_add_term(eqs.setdefault((c, r), {}), unknown(r, n), s)
        for k in range(d2):
            for (c, r), s in m2.coaction[k].items():
                vec_add_term(eqs.setdefault((c, r), {}), unknown(k, col), -s)
        rows.extend(eq for _, eq in sorted(eqs.items()) if eq)

    system = SparseMatrix(ctx, max(len(rows), 1), d1 * d2)
    for r, eq in enumerate(rows):
        for c, s in eq.items():
            system.set(r, c, s)
    out = []
    for vec in kernel_basis(system):
        t = SparseMatrix(ctx, d2, d1)
        for idx, s in vec.items():
            t.set(idx // d1, idx % d1, s)
        out.append(t)
    return out


def find_isomorphism(m1: YDModule, m2: YDModule) -> Optional[SparseMatrix]:
    """An invertible intertwiner, trying each kernel basis vector and their sum"""
    if m1.dim != m2.dim:
        return None
    candidates = yd_intertwiners(m1, m2)
    if not candidates:
        return None
    total = candidates[0]
    for t in candidates[1:]:
        total = total + t
    for t in candidates + [total]:
        if rank(t) == m1.dim:
            return t
    return None
