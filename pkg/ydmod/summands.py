"""
Labels for the simple Yetter-Drinfeld modules over H_{p,-1}: the
one-dimensional K_{chi^k} and the two-dimensional V_{i,j}.
"""

import re
from dataclasses import dataclass
from typing import List, Sequence, Union

from utils.errors import NotInLambda

_V_PATTERN = re.compile(r'^\s*V\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*$', re.IGNORECASE)
_CHI_PATTERN = re.compile(r'^\s*(?:chi|K)\s*\^?\s*\(?\s*(-?\d+)\s*\)?\s*$', re.IGNORECASE)


@dataclass(frozen=True)
class Vij:
    """The two-dimensional simple V_{i,j}"""
    i: int
    j: int

    dim = 2

    def normalized(self, p: int) -> 'Vij':
        return Vij(self.i % (2 * p), self.j % (2 * p))

    def label(self) -> str:
        return f'V_{{{self.i},{self.j}}}'

    def to_dict(self) -> dict:
        return {'kind': 'V', 'i': self.i, 'j': self.j}


@dataclass(frozen=True)
class Chi:
    """The one-dimensional simple K_{chi^k}"""
    k: int

    dim = 1

    def normalized(self, p: int) -> 'Chi':
        return Chi(self.k % (2 * p))

    def label(self) -> str:
        return f'K_chi^{self.k}'

    def to_dict(self) -> dict:
        return {'kind': 'chi', 'k': self.k}


Summand = Union[Vij, Chi]


def in_lambda(p: int, i: int, j: int) -> bool:
    """(i, j) indexes a two-dimensional simple: pi - j != 0 mod 2p"""
    return (p * i - j) % (2 * p) != 0


def check_lambda(p: int, summands: Sequence[Summand]):
    for s in summands:
        if isinstance(s, Vij) and not in_lambda(p, s.i, s.j):
            raise NotInLambda(p, s.i, s.j)


def normalize_all(p: int, summands: Sequence[Summand]) -> List[Summand]:
    return [s.normalized(p) for s in summands]


def dual_summand(p: int, s: Summand) -> Summand:
    """V_{i,j}^* = V_{-i-1,-j-p} and K_{chi^k}^* = K_{chi^-k}"""
    if isinstance(s, Vij):
        return Vij(-s.i - 1, -s.j - p).normalized(p)
    return Chi(-s.k).normalized(p)


def parse_summand(text: str) -> Summand:
    """'V(1,3)', 'V1,3', 'chi3' or 'chi^3'"""
    m = _V_PATTERN.match(text)
    if m:
        return Vij(int(m.group(1)), int(m.group(2)))
    m = _CHI_PATTERN.match(text)
    if m:
        return Chi(int(m.group(1)))
    raise ValueError(f"cannot parse summand '{text}'")


def summands_label(summands: Sequence[Summand]) -> str:
    return ' + '.join(s.label() for s in summands) if summands else '0'


def summand_from_dict(data: dict) -> Summand:
    if data['kind'] == 'V':
        return Vij(int(data['i']), int(data['j']))
    return Chi(int(data['k']))
