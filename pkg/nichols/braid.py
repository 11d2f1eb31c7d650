"""
Braid-group words for permutations.

A permutation of n letters is a tuple of images of 0..n-1. Braid generators
tau_1..tau_{n-1} are numbered from 1 so that tau_j acts on tensor slots j, j+1.
"""

import logging
from itertools import permutations
from typing import Iterator, List, Sequence, Tuple

from exactla import SparseMatrix
from ydmod.braiding import Braiding

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


def inversion_count(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])


def compose_word(n: int, word: Sequence[int]) -> Permutation:
    """The permutation s_{w_1} ... s_{w_l} as a tuple of images"""
    perm = list(range(n))
    for j in word:
        # right multiplication by s_j swaps two images
        perm[j - 1], perm[j] = perm[j], perm[j - 1]
    return tuple(perm)


def matsumoto_lift(perm: Sequence[int]) -> List[int]:
    """
    A reduced word for perm, read off an insertion sort.

    Each adjacent swap made while sorting perm back to the identity is one
    generator; reversing the swap list gives a word whose product is perm.
    The length equals the inversion count.

    Args:
        perm: tuple of images of 0..n-1

    Returns:
        List of generator indices in 1..n-1
    """
    arr = list(perm)
    swaps = []
    for k in range(1, len(arr)):
        m = k
        while m > 0 and arr[m - 1] > arr[m]:
            arr[m - 1], arr[m] = arr[m], arr[m - 1]
            swaps.append(m)
            m -= 1
    return swaps[::-1]


def reduced_words(perm: Sequence[int]) -> Iterator[List[int]]:
    """Every reduced word of perm, by peeling off right descents"""
    perm = tuple(perm)
    if inversion_count(perm) == 0:
        yield []
        return
    for j in range(1, len(perm)):
        if perm[j - 1] > perm[j]:
            shorter = list(perm)
            shorter[j - 1], shorter[j] = shorter[j], shorter[j - 1]
            for word in reduced_words(shorter):
                yield word + [j]


def braid_operator(c: Braiding, n: int, word: Sequence[int]) -> SparseMatrix:
    """rho_n of the braid tau_{w_1} ... tau_{w_l} on V^{(x)n}"""
    out = SparseMatrix.identity(c.ctx, c.dim ** n)
    slots = {}
    for j in word:
        if j not in slots:
            slots[j] = c.slot(n, j)
        out = out @ slots[j]
    return out


def all_permutations(n: int) -> List[Permutation]:
    return list(permutations(range(n)))
