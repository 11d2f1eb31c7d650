"""
Generalized Dynkin diagrams of the diagonal braidings attached to a sum of
simples.

Each vertex u carries a degree exponent m_u and an eigenvalue exponent t_u,
so that q_uv = xi^{m_u t_v}; the vertex label is q_uu and the edge label is
q_uv q_vu = xi^{m_u t_v + m_v t_u}. A sum with a two-dimensional summand gets
one extra vertex X with q = -1, joined to every V_{i,j} vertex.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from scalar import ScalarContext, render
from ydmod.summands import Summand, Vij, check_lambda, normalize_all

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagonalVertex:
    name: str
    m: int
    t: int
    summand: Optional[int] = None

    def q_exponent(self, n: int) -> int:
        return (self.m * self.t) % n


@dataclass
class DynkinDiagram:
    """Vertices in order (X first, then summands); edges keyed by u < v"""
    ctx: ScalarContext
    vertices: List[DiagonalVertex]
    edges: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return 2 * self.ctx.p

    def q(self, u: int) -> int:
        return self.vertices[u].q_exponent(self.n)

    def edge(self, u: int, v: int) -> int:
        """Edge exponent, 0 when not joined"""
        if u == v:
            raise ValueError("no loops in a Dynkin diagram")
        return self.edges.get((min(u, v), max(u, v)), 0)

    def neighbours(self, u: int) -> List[int]:
        return sorted({b if a == u else a for (a, b) in self.edges if u in (a, b)})

    def components(self) -> List[List[int]]:
        seen = set()
        out = []
        for start in range(len(self.vertices)):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.neighbours(u):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def to_dict(self) -> dict:
        ctx = self.ctx
        return {
            'vertices': [{'name': v.name, 'q': render(ctx.xi_power(self.q(k)))}
                         for k, v in enumerate(self.vertices)],
            'edges': [{'u': self.vertices[u].name, 'v': self.vertices[v].name,
                       'label': render(ctx.xi_power(e))}
                      for (u, v), e in sorted(self.edges.items())],
        }


def summand_vertex(p: int, s: Summand, index: int) -> DiagonalVertex:
    if isinstance(s, Vij):
        return DiagonalVertex(f'X_{{{s.i},{s.j}}}', s.i, -s.j, index)
    return DiagonalVertex(f'Y_{s.k}', s.k, p * s.k, index)


def dynkin_diagram(ctx: ScalarContext, summands: Sequence[Summand]) -> DynkinDiagram:
    """
    Diagram of a sum of simples.

    Raises:
        NotInLambda: for a V_{i,j} outside Lambda_p
    """
    p = ctx.p
    n = 2 * p
    summands = normalize_all(p, summands)
    check_lambda(p, summands)
    vertices: List[DiagonalVertex] = []
    if any(isinstance(s, Vij) for s in summands):
        vertices.append(DiagonalVertex('X', 1, p))
    for idx, s in enumerate(summands):
        vertices.append(summand_vertex(p, s, idx))
    edges: Dict[Tuple[int, int], int] = {}
    for u in range(len(vertices)):
        for v in range(u + 1, len(vertices)):
            a, b = vertices[u], vertices[v]
            e = (a.m * b.t + b.m * a.t) % n
            if e:
                edges[(u, v)] = e
    diagram = DynkinDiagram(ctx, vertices, edges)
    logger.debug(f"diagram for {[s for s in summands]}: {len(vertices)} vertices, {len(edges)} edges")
    return diagram
