"""
Quantum symmetrizers Omega_n on V^{(x)n}.

The recursion uses the right coset representatives s_1 s_2 ... s_{k-1} of
S_{n-1} (acting on the last n-1 letters) in S_n:

    Omega_n = (id (x) Omega_{n-1}) (1 + c_1 + c_1 c_2 + ... + c_1 ... c_{n-1})

Lengths add along this factorization, so the Matsumoto section is
multiplicative on it and the recursion equals the sum over S_n.
"""

import logging
from typing import Dict

import config
from exactla import SparseMatrix, check_dim, kron, rank
from nichols.braid import all_permutations, braid_operator, matsumoto_lift
from ydmod.braiding import Braiding

logger = logging.getLogger(__name__)


def shuffle_sum(c: Braiding, n: int) -> SparseMatrix:
    """1 + c_1 + c_1 c_2 + ... + c_1 ... c_{n-1}, the lift of the (1, n-1)-shuffles"""
    size = c.dim ** n
    term = SparseMatrix.identity(c.ctx, size)
    out = term.copy()
    for j in range(1, n):
        term = term @ c.slot(n, j)
        out = out + term
    return out


def quantum_symmetrizer(c: Braiding, n: int, cap: int = None) -> SparseMatrix:
    """
    Omega_n assembled by the coset recursion.

    Args:
        c: braiding on V (x) V
        n: degree, at least 1
        cap: largest allowed d^n, defaults to config.MATRIX_CAP

    Returns:
        SparseMatrix of size d^n

    Raises:
        CapExceeded: when d^n is over the cap
    """
    cap = cap or config.MATRIX_CAP
    d = c.dim
    check_dim('tensor power', d ** n, cap)
    omega = SparseMatrix.identity(c.ctx, d)
    for m in range(2, n + 1):
        omega = kron(SparseMatrix.identity(c.ctx, d), omega) @ shuffle_sum(c, m)
    return omega


def literal_symmetrizer(c: Braiding, n: int) -> SparseMatrix:
    """Sum over S_n of the Matsumoto lifts, term by term"""
    check_dim('tensor power', c.dim ** n)
    out = SparseMatrix(c.ctx, c.dim ** n, c.dim ** n)
    for perm in all_permutations(n):
        out = out + braid_operator(c, n, matsumoto_lift(perm))
    return out


def symmetrizer_ranks(c: Braiding, cutoff: int, cap: int = None) -> Dict[int, int]:
    """rank Omega_n for 1 <= n <= cutoff"""
    ranks = {}
    for n in range(1, cutoff + 1):
        ranks[n] = rank(quantum_symmetrizer(c, n, cap))
        logger.debug(f"rank Omega_{n}[{c.name}] = {ranks[n]}")
        if ranks[n] == 0:
            break
    return ranks
