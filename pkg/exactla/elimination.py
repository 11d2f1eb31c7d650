"""
Exact Gauss-Jordan elimination over Q(xi)[theta].

Entries with th = 0 live in a field and always have inverses. Entries with a
theta part are usable as pivots only when their norm is nonzero; a row whose
entries are all zero divisors stops elimination with NonInvertiblePivot.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from exactla.sparse import SparseMatrix, Vec, vec_axpy, vec_scale
from utils.errors import NonInvertiblePivot

logger = logging.getLogger(__name__)


@dataclass
class KernelBasis:
    """Linearly independent vectors spanning ker(m)"""
    vectors: List[Vec] = field(default_factory=list)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def _pivot_key(col, s):
    # field entries first, then sparse ones
    return (s.has_theta(), s.support(), col)


class Echelon:
    """
    Incremental reduced row echelon form.

    Pivot rows are normalized to 1 at their pivot column and every pivot
    column is cleared in all other pivot rows, so reducing a vector never
    reintroduces a pivot column.
    """

    def __init__(self, ctx, pivot_limit: Optional[int] = None):
        self.ctx = ctx
        self.pivot_limit = pivot_limit
        self.pivots: Dict[int, Vec] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: Vec) -> Vec:
        out = dict(v)
        for c in [c for c in out if c in self.pivots]:
            coeff = out.get(c)
            if coeff is not None:
                vec_axpy(out, -coeff, self.pivots[c])
        return out

    def _choose_pivot(self, v: Vec) -> Optional[int]:
        candidates = [(c, s) for c, s in v.items()
                      if self.pivot_limit is None or c < self.pivot_limit]
        if not candidates:
            return None
        usable = [(c, s) for c, s in candidates if s.is_invertible()]
        if not usable:
            raise NonInvertiblePivot(
                "no invertible pivot in a nonzero row",
                columns=sorted(c for c, _ in candidates),
            )
        return min(usable, key=lambda cs: _pivot_key(*cs))[0]

    def add(self, v: Vec) -> bool:
        """Insert v; True when it was independent of the current span"""
        rem = self.reduce(v)
        if not rem:
            return False
        col = self._choose_pivot(rem)
        if col is None:
            # only augmented columns survive
            return False
        row = vec_scale(rem, rem[col].inverse())
        for other in self.pivots.values():
            coeff = other.get(col)
            if coeff is not None:
                vec_axpy(other, -coeff, row)
        self.pivots[col] = row
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def rank(self) -> int:
        return len(self.pivots)

    def basis(self) -> List[Vec]:
        return [self.pivots[c] for c in sorted(self.pivots)]


def row_echelon(m: SparseMatrix, pivot_limit: Optional[int] = None) -> Echelon:
    ech = Echelon(m.ctx, pivot_limit)
    for row in m.nonzero_rows():
        ech.add(row)
    return ech


def rank(m: SparseMatrix) -> int:
    """Exact rank"""
    return row_echelon(m).rank()


def kernel_basis(m: SparseMatrix) -> KernelBasis:
    """Basis of {v : m v = 0}, one vector per free column"""
    ech = row_echelon(m)
    vectors = []
    for f in range(m.cols):
        if f in ech.pivots:
            continue
        v = {f: m.ctx.one}
        for c, row in ech.pivots.items():
            coeff = row.get(f)
            if coeff is not None:
                v[c] = -coeff
        vectors.append(v)
    logger.debug(f"kernel of {m!r}: dim {len(vectors)}")
    return KernelBasis(vectors)


def solve(m: SparseMatrix, rhs: Vec) -> Optional[Vec]:
    """One solution x of m x = rhs (free variables set to 0), or None"""
    aug = m.cols
    ech = Echelon(m.ctx, pivot_limit=aug)
    rows: Dict[int, Vec] = {r: dict(row) for r, row in m._rows.items()}
    for r, s in rhs.items():
        rows.setdefault(r, {})[aug] = s
    for r in sorted(rows):
        ech.add(rows[r])
        rem = ech.reduce(rows[r])
        if rem:
            # a row reduced to a pure augmented entry
            return None
    return {c: row[aug] for c, row in ech.pivots.items() if aug in row}


def invert_matrix(m: SparseMatrix) -> SparseMatrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    ech = Echelon(m.ctx, pivot_limit=n)
    for r in range(n):
        row = m.row(r)
        row[n + r] = m.ctx.one
        ech.add(row)
    if ech.rank() < n:
        raise NonInvertiblePivot("matrix is singular", rank=ech.rank(), size=n)
    inv = SparseMatrix(m.ctx, n, n)
    for c, row in ech.pivots.items():
        for k, s in row.items():
            if k >= n:
                inv.set(c, k - n, s)
    return inv
