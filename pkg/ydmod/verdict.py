"""
Finiteness verdicts for Nichols algebras of sums of simples.

The verdict reads the Dynkin diagram built in ydmod.dynkin. Exponents are
taken mod n = 2p, so a vertex or edge label xi^e is stored as e. Every
finite family is matched by a parameterized predicate; the few families
known only from literal (i, j) lists come from config/defaults.yaml.
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy import isprime

import config
from scalar import ScalarContext
from ydmod.dynkin import DynkinDiagram, dynkin_diagram
from ydmod.summands import Chi, Summand, Vij, check_lambda, normalize_all

logger = logging.getLogger(__name__)

FINITE = 'FiniteCertified'
INFINITE = 'InfiniteCertified'
UNDETERMINED = 'Undetermined'


@dataclass
class Verdict:
    """Outcome of finiteness_verdict"""
    kind: str
    row: Optional[str]
    summands: List[Summand]
    dim: Optional[int] = None
    formula: Optional[str] = None
    evidence: Dict = field(default_factory=dict)

    @property
    def finite(self) -> bool:
        return self.kind == FINITE

    @property
    def infinite(self) -> bool:
        return self.kind == INFINITE

    @property
    def provenance(self) -> str:
        if self.row is None:
            return 'no encoded family applies'
        return config.PROVENANCE.get(self.row, self.row)

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'row': self.row,
            'summands': [s.to_dict() for s in self.summands],
            'dim': self.dim,
            'formula': self.formula,
            'provenance': self.provenance,
            'evidence': self.evidence,
        }


def exponent_order(e: int, n: int) -> int:
    """Multiplicative order of xi^e for a primitive n-th root xi"""
    return n // gcd(e % n, n)


def classification_covers(p: int) -> bool:
    """Negative verdicts rest on classifications proven only for p prime or listed composites"""
    return isprime(p) or p in config.SUPPORTED_COMPOSITE_P


def _distinct_nonzero(n: int, *values: int) -> bool:
    reduced = [v % n for v in values]
    return 0 not in reduced and len(set(reduced)) == len(reduced)


def match_rank_two(p: int, vertex: int, edge: int) -> Optional[str]:
    """
    Row of a connected diagram (-1) --xi^edge-- (xi^vertex).

    Args:
        p: half the order of xi
        vertex: exponent of the second vertex
        edge: exponent of the edge label, nonzero

    Returns:
        Row label, or None when no encoded family matches
    """
    n = 2 * p
    vertex, edge = vertex % n, edge % n
    if vertex != 0 and edge == (-vertex) % n:
        return 'rank2/row2(1)'
    if vertex == p and edge != 0:
        return 'rank2/row2(2)'
    if vertex not in (0, p) and edge == (-2 * vertex) % n:
        return 'rank2/row4'
    if exponent_order(vertex, n) == 3 and edge == (vertex + p) % n:
        return 'rank2/row6'
    if exponent_order(vertex, n) == 5 and edge == (2 * vertex) % n:
        return 'rank2/row13(1)'
    if exponent_order(edge, n) == 5 and vertex == (edge + p) % n:
        return 'rank2/row13(2)'
    return None


def _literal_row(p: int, s: Vij) -> Optional[str]:
    for entry in config.LITERAL_SIMPLES.get(p, []):
        if [s.i, s.j] in [list(pair) for pair in entry.get('pairs', [])]:
            return entry['row']
    return None


def _chain_row(p: int, labels: Tuple[int, int, int, int, int]) -> Optional[str]:
    """labels = (q_a, edge_ab, q_b, edge_bc, q_c) for a chain a - b - c"""
    n = 2 * p
    cube_roots = [c for c in range(1, n) if exponent_order(c, n) == 3]
    for v1, e12, v2, e23, v3 in (labels, labels[::-1]):
        shape = (v1, e12, v2, e23, v3)
        for e in range(1, n):
            m = (-e) % n
            if shape in ((e, m, p, e, m), (p, e, p, m, p), (p, m, e, m, p), (p, e, m, e, p)):
                return 'rank3/row8'
        for c in cube_roots:
            m = (-c) % n
            if shape in ((p, m, c, c, p), (p, c, p, c, p), (p, m, (p - c) % n, m, p)):
                return 'rank3/row15'
        # q -q^-1- (-1) -r^-1- r with s = (qr)^-1
        if v2 == p and e12 == (-v1) % n and e23 == (-v3) % n \
                and _distinct_nonzero(n, v1, v3, -(v1 + v3)):
            return 'rank3/row9'
    return None


def _triangle_row(p: int, diagram: DynkinDiagram, comp: List[int]) -> Optional[str]:
    n = 2 * p
    u, v, w = comp
    edges = [diagram.edge(u, v), diagram.edge(v, w), diagram.edge(u, w)]
    if all(diagram.q(x) == p for x in comp) and sum(edges) % n == 0 and _distinct_nonzero(n, *edges):
        return 'rank3/row9'
    for top in comp:
        a, b = [x for x in comp if x != top]
        c = diagram.q(a)
        if diagram.q(top) == p and exponent_order(c, n) == 3 and diagram.q(b) == c \
                and all(e == (-c) % n for e in edges):
            return 'rank3/row15'
    return None


def match_rank_three(p: int, diagram: DynkinDiagram, comp: List[int]) -> Optional[str]:
    inside = {u: [w for w in diagram.neighbours(u) if w in comp] for u in comp}
    if all(len(ws) == 2 for ws in inside.values()):
        return _triangle_row(p, diagram, comp)
    mid = next(u for u in comp if len(inside[u]) == 2)
    a, c = [u for u in comp if u != mid]
    labels = (diagram.q(a), diagram.edge(a, mid), diagram.q(mid), diagram.edge(mid, c), diagram.q(c))
    return _chain_row(p, labels)


def _single_dimension(p: int, s: Vij) -> Tuple[Optional[int], Optional[str]]:
    n = 2 * p
    i, j = s.i, s.j
    if (i * j) % n == p:
        return 2 * exponent_order(p * i - j, n), '2N'
    if ((i + 1) * (p - j)) % n == p:
        return 2 * exponent_order(-i * j, n), '2N'
    if (p * i - j - 2 * i * j) % n == 0:
        big = exponent_order(-i * j, n)
        if big in (3, 6):
            second = 2 * big if big % 2 else big // 2
            return big * second * 2, 'N*N2*2'
    if ((p + j) * (i - 1)) % n == 0 and (3 * i * j) % n == 0:
        return 18, '18'
    return None, None


def _pair_dimension(p: int, s: Vij, t: Vij) -> Tuple[Optional[int], Optional[str]]:
    n = 2 * p
    i, j, k, l = s.i, s.j, t.i, t.j
    if (k * j + i * l) % n or (p * (i + k) + j + l) % n:
        return None, None
    if (i * j) % n == p and (k * l) % n == p:
        big = exponent_order(p * i - j, n)
        return 8 * big * big, '8N^2'
    if ((i + 1) * (p - j)) % n == p and ((k + 1) * (p - l)) % n == p:
        big = exponent_order(-i * j, n)
        return 8 * big * big, '8N^2'
    return None, None


def dimension_formula(ctx: ScalarContext, summands: Sequence[Summand]) -> Tuple[Optional[int], Optional[str]]:
    """
    Closed-form dim B(V) for the families with a known PBW basis.

    Odd one-dimensional summands not joined to the rest each contribute a
    factor 2 (exterior algebra on one generator).

    Returns:
        (dimension, formula name), or (None, None) when no formula is encoded
    """
    p = ctx.p
    n = 2 * p
    summands = normalize_all(p, summands)
    twos = [s for s in summands if isinstance(s, Vij)]
    chis = [s for s in summands if isinstance(s, Chi)]
    if any((s.k % 2) == 0 for s in chis):
        return None, None
    if not twos:
        return 2 ** len(chis), '2^n'
    attached = [c for c in chis if any((c.k * (p * v.i - v.j)) % n for v in twos)]
    factor = 2 ** (len(chis) - len(attached))
    if len(twos) == 1 and not attached:
        dim, name = _single_dimension(p, twos[0])
    elif len(twos) == 1 and len(attached) == 1:
        s, k = twos[0], attached[0].k
        dim, name = None, None
        if (s.i * s.j) % n == p and ((k + 1) * (p * s.i - s.j)) % n == 0:
            big = exponent_order(p * s.i - s.j, n)
            dim, name = 8 * big * big, '8N^2'
    elif len(twos) == 2 and not attached:
        dim, name = _pair_dimension(p, twos[0], twos[1])
    else:
        dim, name = None, None
    if dim is None:
        return None, None
    if factor > 1:
        name = f'{name}*2^{len(chis) - len(attached)}'
    return dim * factor, name


def finiteness_verdict(ctx: ScalarContext, summands: Sequence[Summand],
                       evidence: Optional[Callable[[List[Summand]], Dict]] = None) -> Verdict:
    """
    Decide whether B(V) is finite-dimensional for V the given sum of simples.

    Args:
        ctx: scalar context fixing p
        summands: Vij and Chi labels, repeats allowed
        evidence: called with the summands when no family decides; its
            result (for instance truncated graded dimensions) is attached

    Returns:
        Verdict

    Raises:
        NotInLambda: for a V_{i,j} outside Lambda_p
    """
    p = ctx.p
    summands = normalize_all(p, summands)
    check_lambda(p, summands)
    diagram = dynkin_diagram(ctx, summands)
    covered = classification_covers(p)

    def infinite(row: str, **details) -> Verdict:
        return Verdict(INFINITE, row, summands, evidence=details)

    units = [v.name for u, v in enumerate(diagram.vertices) if diagram.q(u) == 0]
    if units:
        return infinite('infinite/unit-vertex', vertices=units)
    twos = [s for s in summands if isinstance(s, Vij)]
    if len(twos) >= 3:
        return infinite('infinite/three-two-dim', count=len(twos))
    if not twos:
        return Verdict(FINITE, 'rank1/exterior', summands, dim=2 ** len(summands), formula='2^n')

    core = next(comp for comp in diagram.components() if 0 in comp)
    rank = len(core)
    row = None
    if rank == 2:
        vertex = core[1]
        row = match_rank_two(p, diagram.q(vertex), diagram.edge(0, vertex))
        if row is None:
            row = _literal_row(p, summands[diagram.vertices[vertex].summand])
        excluded = 'infinite/rank2-excluded'
    elif rank == 3:
        row = match_rank_three(p, diagram, core)
        excluded = 'infinite/rank3-excluded'
    else:
        excluded = 'infinite/large-core'

    if row is not None:
        dim, formula = dimension_formula(ctx, summands)
        logger.debug(f"{[s.label() for s in summands]}: finite via {row}, dim {dim}")
        return Verdict(FINITE, row, summands, dim=dim, formula=formula,
                       evidence={'diagram': diagram.to_dict()})
    if covered:
        return infinite(excluded, diagram=diagram.to_dict())

    extra = evidence(summands) if evidence is not None else {}
    logger.info(f"{[s.label() for s in summands]}: no encoded family for p={p}")
    return Verdict(UNDETERMINED, None, summands, evidence={'diagram': diagram.to_dict(), **extra})
