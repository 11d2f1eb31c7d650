"""
Group-like and skew-primitive elements.

Group-likes are found as common eigenvectors of the operators
R_j = (id (x) e_j^*) Delta: if Delta(v) = v (x) v then R_j v = v_j v. Eigenvalues
are searched among 0 and the powers of xi, which covers every group-like whose
coordinates in the chosen basis are roots of unity.
"""

import logging
from typing import List, Tuple

from hopf.algebra import HopfAlgebra, Tensor2, tensor_of
from exactla import SparseMatrix, Vec, kernel_basis, vec_add_term, vec_axpy, vec_equal, vec_scale

logger = logging.getLogger(__name__)


def _right_slice(h: HopfAlgebra, v: Vec, j: int) -> Vec:
    out: Vec = {}
    for k, s in v.items():
        for (a, b), t in h.comult(k).items():
            if b == j:
                vec_add_term(out, a, s * t)
    return out


def _restrict(h: HopfAlgebra, space: List[Vec], j: int, lam) -> List[Vec]:
    """Vectors w in span(space) with R_j w = lam w and w_j = lam * eps(w)"""
    columns = []
    for w in space:
        col = dict(_right_slice(h, w, j))
        vec_axpy(col, -lam, w)
        # extra coordinate for the normalization constraint
        extra = w.get(j, h.ctx.zero) - lam * h.eps(w)
        if not extra.is_zero():
            col[h.dim] = extra
        columns.append(col)
    m = SparseMatrix.from_columns(h.ctx, h.dim + 1, columns)
    out = []
    for combo in kernel_basis(m):
        vec: Vec = {}
        for idx, coeff in combo.items():
            vec_axpy(vec, coeff, space[idx])
        if vec:
            out.append(vec)
    return out


def _normalize(h: HopfAlgebra, space: List[Vec]) -> List[Vec]:
    for w in space:
        e = h.eps(w)
        if not e.is_zero():
            return [vec_scale(w, e.inverse())]
    return []


def is_group_like(h: HopfAlgebra, v: Vec) -> bool:
    return bool(v) and h.eps(v) == 1 and vec_equal(h.comul(v), tensor_of(v, v))


def group_likes(h: HopfAlgebra) -> List[Vec]:
    """All group-likes reachable by the eigenvalue search, in a stable order"""
    ctx = h.ctx
    candidates = [ctx.zero] + [ctx.xi_power(k) for k in range(2 * ctx.p)]
    found: List[Vec] = []
    stack: List[Tuple[int, List[Vec]]] = [(0, [h.basis(i) for i in range(h.dim)])]
    while stack:
        j, space = stack.pop()
        if not any(not h.eps(w).is_zero() for w in space):
            continue
        if len(space) == 1 or j == h.dim:
            for v in _normalize(h, space):
                if is_group_like(h, v) and not any(vec_equal(v, f) for f in found):
                    found.append(v)
            continue
        for lam in candidates:
            sub = _restrict(h, space, j, lam)
            if sub:
                stack.append((j + 1, sub))
    found.sort(key=lambda v: sorted((k, str(s)) for k, s in v.items()))
    logger.debug(f"{h.name}: {len(found)} group-likes")
    return found


def skew_primitives(h: HopfAlgebra, g1: Vec, g2: Vec) -> List[Vec]:
    """Basis of {v : Delta(v) = v (x) g1 + g2 (x) v}"""
    d = h.dim
    columns = []
    for k in range(d):
        e = h.basis(k)
        col: Tensor2 = dict(h.comult(k))
        for key, s in tensor_of(e, g1).items():
            vec_add_term(col, key, -s)
        for key, s in tensor_of(g2, e).items():
            vec_add_term(col, key, -s)
        columns.append({a * d + b: s for (a, b), s in col.items()})
    m = SparseMatrix.from_columns(h.ctx, d * d, columns)
    return list(kernel_basis(m))
