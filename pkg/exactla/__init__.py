"""Exact sparse linear algebra: rank, kernels, solving, tensor slots"""

from exactla.sparse import SparseMatrix, Vec, check_dim, vec_add_term, vec_axpy, vec_equal, vec_scale, vec_sub
from exactla.elimination import Echelon, KernelBasis, invert_matrix, kernel_basis, rank, row_echelon, solve
from exactla.tensor import all_words, compose_on_tensor_slot, index_word, kron, word_index

__all__ = [
    'SparseMatrix', 'Vec', 'check_dim', 'vec_add_term', 'vec_axpy', 'vec_equal', 'vec_scale', 'vec_sub',
    'Echelon', 'KernelBasis', 'invert_matrix', 'kernel_basis', 'rank', 'row_echelon', 'solve',
    'all_words', 'compose_on_tensor_slot', 'index_word', 'kron', 'word_index',
]
