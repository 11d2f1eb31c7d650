"""
Modules over the Drinfeld double D(H_{p,-1}^cop), given by the matrices of
its generators a, b (from H) and g, x (from A_{p,-1}).

The simple ones are
    K_{chi^k}: a -> xi^k, b -> 0, g -> (-1)^k, x -> 0
    V_{i,j}:   [a] = diag(xi^i, xi^{i+1}), [b] = E_12, [g] = diag(xi^j, -xi^j),
               [x] = [[0, x1], [x2, 0]]
and the Yetter-Drinfeld structure over H is recovered from g and x through
the pairing of A_{p,-1} with H_{p,-1}.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from exactla import SparseMatrix, invert_matrix, kernel_basis, rank, vec_add_term
from hopf import HopfAlgebra, a_index, h_index, pairing
from hopf.algebra import Tensor2
from scalar import ScalarContext
from ydmod.module import YDModule
from ydmod.simples import radford_dual, two_dim_scalars
from ydmod.summands import Chi, Summand, Vij, in_lambda
from utils.errors import NotInLambda

logger = logging.getLogger(__name__)


def _power(m: SparseMatrix, n: int) -> SparseMatrix:
    out = SparseMatrix.identity(m.ctx, m.rows)
    for _ in range(n):
        out = out @ m
    return out


@dataclass
class DMod:
    """Matrices of a, b, g, x on a module over the double"""
    ctx: ScalarContext
    name: str
    dim: int
    a: SparseMatrix
    b: SparseMatrix
    g: SparseMatrix
    x: SparseMatrix
    summand: Optional[Summand] = None

    def generator_matrices(self) -> Dict[str, SparseMatrix]:
        return {'a': self.a, 'b': self.b, 'g': self.g, 'x': self.x}

    def relations(self) -> Dict[str, bool]:
        """Defining relations of the double, each checked exactly"""
        ctx = self.ctx
        p = ctx.p
        a, b, g, x = self.a, self.b, self.g, self.x
        one = SparseMatrix.identity(ctx, self.dim)
        coeff = ctx.theta * ctx.xi_power(p + 1)
        return {
            'a^(2p)=1': _power(a, 2 * p) == one,
            'b^2=0': (b @ b).is_zero(),
            'ba=xi*ab': b @ a == (a @ b).scaled(ctx.xi),
            'g^(2p)=1': _power(g, 2 * p) == one,
            'x^2=1-g^2': x @ x == one - g @ g,
            'gx=-xg': g @ x == (x @ g).scaled(-ctx.one),
            'ag=ga': a @ g == g @ a,
            'bg=-gb': b @ g == (g @ b).scaled(-ctx.one),
            'ax-xi*xa=lambda^-1*theta*xi^(p+1)*(ba^p-gb)':
                a @ x - (x @ a).scaled(ctx.xi) == (b @ _power(a, p) - g @ b).scaled(ctx.lam_inv * coeff),
            'bx-xi*xb=theta*xi^(p+1)*(a^(p+1)-ga)':
                b @ x - (x @ b).scaled(ctx.xi) == (_power(a, p + 1) - g @ a).scaled(coeff),
        }

    def relations_hold(self) -> bool:
        return all(self.relations().values())

    def matrix_of_word(self, word: Tuple[int, ...], gens: Dict[int, SparseMatrix]) -> SparseMatrix:
        out = SparseMatrix.identity(self.ctx, self.dim)
        for k in word:
            out = out @ gens[k]
        return out


def make_D_simple(ctx: ScalarContext, kind: Summand) -> DMod:
    """
    The simple D-module K_{chi^k} or V_{i,j}.

    Raises:
        NotInLambda: for V_{i,j} with pi = j mod 2p
    """
    p = ctx.p
    if isinstance(kind, Chi):
        k = kind.k % (2 * p)
        return DMod(ctx, f'K_chi^{k}', 1,
                    a=SparseMatrix(ctx, 1, 1, {0: {0: ctx.xi_power(k)}}),
                    b=SparseMatrix(ctx, 1, 1),
                    g=SparseMatrix(ctx, 1, 1, {0: {0: ctx.from_int(ctx.sign(k))}}),
                    x=SparseMatrix(ctx, 1, 1),
                    summand=Chi(k))
    i, j = kind.i % (2 * p), kind.j % (2 * p)
    if not in_lambda(p, i, j):
        raise NotInLambda(p, i, j)
    x1, x2 = two_dim_scalars(ctx, i, j)
    return DMod(ctx, f'V_{{{i},{j}}}', 2,
                a=SparseMatrix(ctx, 2, 2, {0: {0: ctx.xi_power(i)}, 1: {1: ctx.xi_power(i + 1)}}),
                b=SparseMatrix(ctx, 2, 2, {0: {1: ctx.one}}),
                g=SparseMatrix(ctx, 2, 2, {0: {0: ctx.xi_power(j)}, 1: {1: -ctx.xi_power(j)}}),
                x=SparseMatrix(ctx, 2, 2, {0: {1: x1}, 1: {0: x2}}),
                summand=Vij(i, j))


def represents_double(dm: DMod, d: HopfAlgebra) -> bool:
    """rho(u v) = rho(u) rho(v) against the structure constants of the double"""
    ctx = dm.ctx
    p = ctx.p
    dh = 4 * p
    gens = {h_index(p, 0, 1): dm.a, h_index(p, 1, 0): dm.b,
            a_index(p, 0, 1) * dh: dm.g, a_index(p, 1, 0) * dh: dm.x}
    rho = {k: dm.matrix_of_word(d.words[k], gens) for k in range(d.dim)}
    for u in gens:
        for v in range(d.dim):
            target = SparseMatrix(ctx, dm.dim, dm.dim)
            for k, s in d.mult(u, v).items():
                target = target + rho[k].scaled(s)
            if not target == rho[u] @ rho[v]:
                logger.debug(f"{dm.name}: rho({d.labels[u]} {d.labels[v]}) mismatch")
                return False
    return True


def yd_to_dmod(m: YDModule) -> DMod:
    """[g] v = sum <g, h> v_k and [x] v = sum <x, h> v_k over delta(v) = sum h (x) v_k"""
    ctx = m.ctx
    p = ctx.p
    pair = pairing(ctx)
    g_idx, x_idx = a_index(p, 0, 1), a_index(p, 1, 0)
    g = SparseMatrix(ctx, m.dim, m.dim)
    x = SparseMatrix(ctx, m.dim, m.dim)
    for v in range(m.dim):
        for (c, n), s in m.coaction[v].items():
            g.add_to(n, v, s * pair(g_idx, c))
            x.add_to(n, v, s * pair(x_idx, c))
    summand = m.summands[0] if m.summands and len(m.summands) == 1 else None
    return DMod(ctx, m.name, m.dim, a=m.actions[h_index(p, 0, 1)], b=m.actions[h_index(p, 1, 0)],
                g=g, x=x, summand=summand)


def yd_from_dmod(dm: DMod, verify: bool = True) -> YDModule:
    """delta(v) = sum_c c (x) c^*.v, with c^* the dual basis of A_{p,-1} under the pairing"""
    ctx = dm.ctx
    p = ctx.p
    n = 2 * p
    h = radford_dual(ctx)
    pair = pairing(ctx)
    pmat = SparseMatrix(ctx, h.dim, h.dim)
    for r in range(h.dim):
        for c in range(h.dim):
            pmat.set(r, c, pair(r, c))
    dual_basis = invert_matrix(pmat)

    # x^s g^j acts as [g]^j [x]^s
    rho_a = {}
    for s in (0, 1):
        for j in range(n):
            rho_a[a_index(p, s, j)] = _power(dm.g, j) @ _power(dm.x, s)

    coaction: Dict[int, Tensor2] = {v: {} for v in range(dm.dim)}
    for c in range(h.dim):
        op = SparseMatrix(ctx, dm.dim, dm.dim)
        for r, s in dual_basis.row(c).items():
            op = op + rho_a[r].scaled(s)
        for row, col, s in op.items():
            vec_add_term(coaction[col], (c, row), s)
    actions = {h_index(p, 0, 1): dm.a, h_index(p, 1, 0): dm.b}
    summands = [dm.summand] if dm.summand is not None else None
    return YDModule(h, dm.name, dm.dim, actions, coaction, summands=summands, verify=verify)


def joint_weights(dm: DMod) -> Tuple[Tuple[int, int, int], ...]:
    """(s, t, multiplicity) for the joint eigenspaces of [a] = xi^s and [g] = xi^t"""
    ctx = dm.ctx
    n = 2 * ctx.p
    one = SparseMatrix.identity(ctx, dm.dim)
    out = []
    for s in range(n):
        shifted_a = dm.a - one.scaled(ctx.xi_power(s))
        if rank(shifted_a) == dm.dim:
            continue
        for t in range(n):
            shifted_g = dm.g - one.scaled(ctx.xi_power(t))
            stacked = SparseMatrix(ctx, 2 * dm.dim, dm.dim)
            for r, c, v in shifted_a.items():
                stacked.set(r, c, v)
            for r, c, v in shifted_g.items():
                stacked.set(dm.dim + r, c, v)
            multiplicity = len(kernel_basis(stacked))
            if multiplicity:
                out.append((s, t, multiplicity))
    return tuple(sorted(out))


def d_intertwiners(m1: DMod, m2: DMod) -> List[SparseMatrix]:
    """Basis of {T : T [u]_1 = [u]_2 T for u in a, b, g, x}"""
    ctx = m1.ctx
    d1, d2 = m1.dim, m2.dim
    eqs = []
    for name, a1 in m1.generator_matrices().items():
        a2 = m2.generator_matrices()[name]
        for r in range(d2):
            for c in range(d1):
                eq = {}
                for k in range(d1):
                    vec_add_term(eq, r * d1 + k, a1.get(k, c))
                for k in range(d2):
                    vec_add_term(eq, k * d1 + c, -a2.get(r, k))
                if eq:
                    eqs.append(eq)
    system = SparseMatrix(ctx, max(len(eqs), 1), d1 * d2)
    for r, eq in enumerate(eqs):
        for c, s in eq.items():
            system.set(r, c, s)
    out = []
    for vec in kernel_basis(system):
        t = SparseMatrix(ctx, d2, d1)
        for idx, s in vec.items():
            t.set(idx // d1, idx % d1, s)
        out.append(t)
    return out


def enumerate_simples(ctx: ScalarContext, cross_check: Optional[bool] = None) -> dict:
    """
    Build every simple D-module, check the relations and separate them by
    joint [a], [g] weights; with cross_check (default for p = 2) also by
    intertwiner search.
    """
    p = ctx.p
    n = 2 * p
    if cross_check is None:
        cross_check = p == 2
    modules = [make_D_simple(ctx, Chi(k)) for k in range(n)]
    modules += [make_D_simple(ctx, Vij(i, j)) for i in range(n) for j in range(n) if in_lambda(p, i, j)]
    failed = [m.name for m in modules if not m.relations_hold()]
    signatures: Dict[tuple, str] = {}
    collisions = []
    for m in modules:
        sig = joint_weights(m)
        if sig in signatures:
            collisions.append([signatures[sig], m.name])
        signatures[sig] = m.name

    hom_clashes = []
    if cross_check:
        for idx, m1 in enumerate(modules):
            for m2 in modules[idx + 1:]:
                if m1.dim == m2.dim and d_intertwiners(m1, m2):
                    hom_clashes.append([m1.name, m2.name])

    one_dim = sum(1 for m in modules if m.dim == 1)
    two_dim = len(modules) - one_dim
    census = {
        'p': p,
        'one_dim': one_dim,
        'two_dim': two_dim,
        'total': len(modules),
        'expected_total': 4 * p * p,
        'relations_ok': not failed,
        'failed': failed,
        'pairwise_distinct': not collisions and not hom_clashes,
        'collisions': collisions + hom_clashes,
        'intertwiner_cross_check': cross_check,
    }
    logger.info(f"p={p}: {one_dim} one-dimensional and {two_dim} two-dimensional simple D-modules")
    return census
