"""
Sparse vectors and matrices over ThetaScalar.

A vector is a plain dict index -> nonzero scalar. A matrix is row-major:
row -> {col -> nonzero scalar}.
"""

import logging
from typing import Dict, Iterable, Iterator, Optional, Tuple

import config
from scalar import ScalarContext, ThetaScalar
from utils.errors import CapExceeded

logger = logging.getLogger(__name__)

Vec = Dict[int, ThetaScalar]


def vec_axpy(target: dict, coeff, source: dict) -> dict:
    """target += coeff * source, in place; keys of any hashable type"""
    for k, v in source.items():
        prod = v * coeff
        cur = target.get(k)
        new = prod if cur is None else cur + prod
        if new.is_zero():
            target.pop(k, None)
        else:
            target[k] = new
    return target


def vec_add_term(target: dict, key, value) -> dict:
    if value.is_zero():
        return target
    cur = target.get(key)
    new = value if cur is None else cur + value
    if new.is_zero():
        target.pop(key, None)
    else:
        target[key] = new
    return target


def vec_scale(v: dict, coeff) -> dict:
    if not isinstance(coeff, ThetaScalar) and coeff == 0:
        return {}
    out = {}
    for k, s in v.items():
        prod = s * coeff
        if not prod.is_zero():
            out[k] = prod
    return out


def vec_sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, s in v.items():
        vec_add_term(out, k, -s)
    return out


def vec_equal(u: dict, v: dict) -> bool:
    if u.keys() != v.keys():
        return False
    return all(u[k] == v[k] for k in u)


def check_dim(what: str, size: int, cap: Optional[int] = None):
    cap = config.MATRIX_CAP if cap is None else cap
    if size > cap:
        raise CapExceeded(what, size, cap)


class SparseMatrix:
    """Exact sparse matrix; no stored zeros"""

    def __init__(self, ctx: ScalarContext, rows: int, cols: int,
                 entries: Optional[Dict[int, Dict[int, ThetaScalar]]] = None, cap: Optional[int] = None):
        check_dim('matrix rows', rows, cap)
        check_dim('matrix cols', cols, cap)
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        self._rows: Dict[int, Dict[int, ThetaScalar]] = {}
        if entries:
            for r, row in entries.items():
                for c, s in row.items():
                    self.set(r, c, s)

    @classmethod
    def from_triplets(cls, ctx, rows, cols, triplets: Iterable[Tuple[int, int, ThetaScalar]], cap=None):
        m = cls(ctx, rows, cols, cap=cap)
        for r, c, s in triplets:
            m.add_to(r, c, s)
        return m

    @classmethod
    def from_columns(cls, ctx, rows, columns, cap=None):
        """Matrix whose c-th column is the sparse vector columns[c]"""
        m = cls(ctx, rows, len(columns), cap=cap)
        for c, col in enumerate(columns):
            for r, s in col.items():
                m.set(r, c, s)
        return m

    @classmethod
    def identity(cls, ctx, n, cap=None):
        m = cls(ctx, n, n, cap=cap)
        for k in range(n):
            m._rows[k] = {k: ctx.one}
        return m

    def _check_index(self, r, c):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")

    def set(self, r: int, c: int, s: ThetaScalar):
        self._check_index(r, c)
        row = self._rows.get(r)
        if s.is_zero():
            if row is not None:
                row.pop(c, None)
                if not row:
                    del self._rows[r]
            return
        if row is None:
            row = self._rows[r] = {}
        row[c] = s

    def add_to(self, r: int, c: int, s: ThetaScalar):
        cur = self.get(r, c)
        self.set(r, c, cur + s)

    def get(self, r: int, c: int) -> ThetaScalar:
        row = self._rows.get(r)
        if row is None:
            return self.ctx.zero
        return row.get(c, self.ctx.zero)

    def row(self, r: int) -> Vec:
        return dict(self._rows.get(r, {}))

    def column(self, c: int) -> Vec:
        return {r: row[c] for r, row in self._rows.items() if c in row}

    def items(self) -> Iterator[Tuple[int, int, ThetaScalar]]:
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def nonzero_rows(self):
        return [self._rows[r] for r in sorted(self._rows)]

    def apply(self, v: Vec) -> Vec:
        """Matrix times column vector"""
        out: Vec = {}
        for r, row in self._rows.items():
            acc = None
            for c, s in row.items():
                x = v.get(c)
                if x is not None:
                    term = s * x
                    acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero():
                out[r] = acc
        return out

    def __matmul__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = SparseMatrix(self.ctx, self.rows, other.cols)
        for r, row in self._rows.items():
            acc: Vec = {}
            for k, s in row.items():
                other_row = other._rows.get(k)
                if other_row:
                    vec_axpy(acc, s, other_row)
            if acc:
                out._rows[r] = acc
        return out

    def __add__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        out = self.copy()
        for r, c, s in other.items():
            out.add_to(r, c, s)
        return out

    def __sub__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        return self + other.scaled(-self.ctx.one)

    def scaled(self, coeff) -> 'SparseMatrix':
        out = SparseMatrix(self.ctx, self.rows, self.cols)
        for r, row in self._rows.items():
            scaled = vec_scale(row, coeff)
            if scaled:
                out._rows[r] = scaled
        return out

    def transpose(self) -> 'SparseMatrix':
        out = SparseMatrix(self.ctx, self.cols, self.rows)
        for r, c, s in self.items():
            out._rows.setdefault(c, {})[r] = s
        return out

    def copy(self) -> 'SparseMatrix':
        out = SparseMatrix(self.ctx, self.rows, self.cols)
        out._rows = {r: dict(row) for r, row in self._rows.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if self._rows.keys() != other._rows.keys():
            return False
        return all(vec_equal(self._rows[r], other._rows[r]) for r in self._rows)

    __hash__ = None

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"
