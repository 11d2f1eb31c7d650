"""
Operators on tensor powers V^{(x)n}.

Basis words (i_1, ..., i_n) of V^{(x)n} are indexed by i_1 d^{n-1} + ... + i_n,
so the first tensor factor is the most significant digit.
"""

import logging
from itertools import product
from typing import List, Sequence, Tuple

from exactla.sparse import SparseMatrix, check_dim

logger = logging.getLogger(__name__)


def word_index(word: Sequence[int], d: int) -> int:
    idx = 0
    for letter in word:
        idx = idx * d + letter
    return idx


def index_word(idx: int, d: int, n: int) -> Tuple[int, ...]:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        idx, out[k] = divmod(idx, d)
    return tuple(out)


def all_words(d: int, n: int) -> List[Tuple[int, ...]]:
    return list(product(range(d), repeat=n))


def kron(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    check_dim('kronecker rows', a.rows * b.rows)
    out = SparseMatrix(a.ctx, a.rows * b.rows, a.cols * b.cols)
    b_items = list(b.items())
    for ra, ca, sa in a.items():
        for rb, cb, sb in b_items:
            out.set(ra * b.rows + rb, ca * b.cols + cb, sa * sb)
    return out


def compose_on_tensor_slot(c: SparseMatrix, d: int, n: int, j: int) -> SparseMatrix:
    """
    id^{(x)(j-1)} (x) c (x) id^{(x)(n-j-1)} on V^{(x)n}.

    Args:
        c: operator on V (x) V, size d^2
        d: dim V
        n: tensor power
        j: slot, 1 <= j <= n - 1

    Returns:
        SparseMatrix of size d^n
    """
    if not 1 <= j <= n - 1:
        raise IndexError(f"slot {j} out of range for n={n}")
    if c.rows != d * d or c.cols != d * d:
        raise ValueError(f"braiding must be {d * d}x{d * d}, got {c.rows}x{c.cols}")
    size = d ** n
    check_dim('tensor power', size)
    left_span = d ** (j - 1)
    right_span = d ** (n - j - 1)
    out = SparseMatrix(c.ctx, size, size)
    entries = list(c.items())
    for left in range(left_span):
        for right in range(right_span):
            base = left * d * d * right_span + right
            for r, col, s in entries:
                out._rows.setdefault(base + r * right_span, {})[base + col * right_span] = s
    return out
