"""
Catalogue of explicit Nichols algebra presentations.

Basis conventions: V_{i,j} = K v1 + K v2 is letters 0, 1; a second
two-dimensional summand W = V_{k,l} adds w1, w2 as letters 2, 3; a
one-dimensional summand next to V_{i,j} is letter 2.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from nichols.derivations import TensorElement, linear_combination
from scalar import ScalarContext, ThetaScalar, render
from utils.errors import FamilyConstraintViolated
from ydmod.summands import Chi, Summand, Vij, check_lambda, normalize_all

logger = logging.getLogger(__name__)

PROVED = 'proved'
CONJECTURE = 'conjecture'


@dataclass
class NicholsProfile:
    """Index data and claimed size of one presentation"""
    p: int
    summands: List[Summand]
    family: str
    n_value: int
    designated: str
    claimed_dim: int
    pbw: str
    n2_value: Optional[int] = None
    status: str = PROVED

    def to_dict(self) -> dict:
        return {
            'p': self.p,
            'summands': [s.label() for s in self.summands],
            'family': self.family,
            'N': self.n_value,
            'N2': self.n2_value,
            'designated_scalar': self.designated,
            'claimed_dim': self.claimed_dim,
            'pbw': self.pbw,
            'status': self.status,
        }


@dataclass
class NicholsPresentation:
    profile: NicholsProfile
    relations: List[TensorElement] = field(default_factory=list)
    names: List[str] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return sum(2 if isinstance(s, Vij) else 1 for s in self.profile.summands)

    def add(self, name: str, relation: TensorElement):
        self.names.append(name)
        self.relations.append(relation)


def _order(ctx: ScalarContext, s: ThetaScalar, family: str) -> int:
    n = ctx.order_of_unity(s)
    if n is None:
        raise FamilyConstraintViolated(family, f'{render(s)} is a root of unity')
    return n


def _alpha(ctx: ScalarContext, i: int, j: int) -> ThetaScalar:
    """theta^-2 xi^{-(i+1)(2+j)} (1 + xi^{pi+j})"""
    p = ctx.p
    t = ctx.theta.inverse()
    return t * t * ctx.xi_power(-(i + 1) * (2 + j)) * (ctx.one + ctx.xi_power(p * i + j))


def _power(letter: int, n: int) -> Tuple[int, ...]:
    return (letter,) * n


def _lambda_one_relations(ctx: ScalarContext, i: int, j: int, v1: int, v2: int,
                          pres: NicholsPresentation, n: int, tag: str = ''):
    xi = ctx.xi_power
    pres.add(f'{tag}v1^2', linear_combination(ctx, [(1, (v1, v1))]))
    pres.add(f'{tag}v1v2', linear_combination(ctx, [(1, (v1, v2)), (xi(-j), (v2, v1))]))
    pres.add(f'{tag}v2^N', linear_combination(ctx, [(1, _power(v2, n))]))


def _lambda_two_relations(ctx: ScalarContext, i: int, j: int, v1: int, v2: int,
                          pres: NicholsPresentation, n: int, tag: str = ''):
    sign = ctx.from_int(ctx.sign(i + 1))
    scale = (ctx.theta * ctx.xi_power(i + 1))
    scale = (scale * scale).inverse()
    pres.add(f'{tag}v1v2', linear_combination(ctx, [(1, (v1, v2)), (sign, (v2, v1))]))
    pres.add(f'{tag}v2^2', linear_combination(ctx, [(1, (v2, v2)), (sign * scale, (v1, v1))]))
    pres.add(f'{tag}v1^N', linear_combination(ctx, [(1, _power(v1, n))]))


def in_lambda_one(ctx: ScalarContext, i: int, j: int) -> bool:
    return ctx.xi_power(-i * j) == -ctx.one


def in_lambda_two(ctx: ScalarContext, i: int, j: int) -> bool:
    return ctx.xi_power((i + 1) * (ctx.p - j)) == -ctx.one


def quadratic_presentation(ctx: ScalarContext, i: int, j: int) -> NicholsPresentation:
    """
    B(V_{i,j}) with quadratic relations, 2N-dimensional.

    Raises:
        FamilyConstraintViolated: when neither xi^{-ij} nor xi^{(i+1)(p-j)} is -1
    """
    check_lambda(ctx.p, [Vij(i, j)])
    if in_lambda_one(ctx, i, j):
        q = ctx.xi_power(-j) * ctx.sign(i)
        n = _order(ctx, q, 'Lambda1')
        profile = NicholsProfile(ctx.p, [Vij(i, j)], 'Lambda1', n, render(q), 2 * n,
                                 'v2^a v1^b, a < N, b < 2')
        pres = NicholsPresentation(profile)
        _lambda_one_relations(ctx, i, j, 0, 1, pres, n)
        return pres
    if in_lambda_two(ctx, i, j):
        q = ctx.xi_power(-i * j)
        n = _order(ctx, q, 'Lambda2')
        profile = NicholsProfile(ctx.p, [Vij(i, j)], 'Lambda2', n, render(q), 2 * n,
                                 'v2^a v1^b, a < 2, b < N')
        pres = NicholsPresentation(profile)
        _lambda_two_relations(ctx, i, j, 0, 1, pres, n)
        return pres
    raise FamilyConstraintViolated(f'V({i},{j})', '1 + xi^{-ij} = 0 or 1 + xi^{(i+1)(p-j)} = 0')


def standard_b2_presentation(ctx: ScalarContext, i: int, j: int) -> NicholsPresentation:
    """B(V_{i,j}) for pi - j - 2ij = 0 mod 2p; proved for N in {3, 6}"""
    p, n2p = ctx.p, 2 * ctx.p
    if (p * i - j - 2 * i * j) % n2p:
        raise FamilyConstraintViolated('standard B2', 'pi - j - 2ij = 0 mod 2p')
    xi = ctx.xi_power
    q = xi(-i * j)
    n = _order(ctx, q, 'standard B2')
    n2 = 2 * n if n % 2 else n // 2
    status = PROVED if n in (3, 6) else CONJECTURE
    profile = NicholsProfile(p, [Vij(i, j)], 'standard B2', n, render(q), n * n2 * 2,
                             'v1^a (v2v1)^b v2^c, a < N, b < 2, c < N2', n2, status)
    pres = NicholsPresentation(profile)
    sign = ctx.from_int(ctx.sign(i + 1))
    if n == 3:
        alpha = ctx.zero
    else:
        t = ctx.theta.inverse()
        alpha = -(t * t * xi(-(i + 1) * (2 + j)) * (ctx.one + xi(2 * i * j)) * (q - ctx.one))
    pres.add('v1^N', linear_combination(ctx, [(1, _power(0, n))]))
    pres.add('v1v2v1', linear_combination(ctx, [
        (ctx.one + q, (0, 1, 0)), (sign * q, (0, 0, 1)), (sign, (1, 0, 0))]))
    pres.add('v1v2^2', linear_combination(ctx, [
        (alpha, (0, 0, 0)), (1, (0, 1, 1)),
        (-((ctx.one - xi(i * j)) * xi(-j * (i + 1))), (1, 0, 1)),
        (-xi(-j * (i + 2)), (1, 1, 0))]))
    if n % 2 == 0:
        half = n // 2
        terms = [(1, _power(1, half))]
        for k in range(half):
            terms.append((ctx.sign(k * (i + 1)), _power(0, k) + (1,) + _power(0, half - 1 - k)))
        pres.add('v2^{N/2}', linear_combination(ctx, terms))
    else:
        pres.add('v2^{2N}', linear_combination(ctx, [(1, _power(1, 2 * n))]))
    return pres


def g3_presentation(ctx: ScalarContext, i: int, j: int) -> NicholsPresentation:
    """18-dimensional B(V_{i,j}) for (p+j)(i-1) = 0 and 3ij = 0 mod 2p"""
    p, n2p = ctx.p, 2 * ctx.p
    if ((p + j) * (i - 1)) % n2p:
        raise FamilyConstraintViolated('G3', '(p+j)(i-1) = 0 mod 2p')
    if (3 * i * j) % n2p:
        raise FamilyConstraintViolated('G3', '3ij = 0 mod 2p')
    xi = ctx.xi_power
    q = xi(-i * j)
    profile = NicholsProfile(p, [Vij(i, j)], 'G3', _order(ctx, q, 'G3'), render(q), 18,
                             'v1^a (v2v1)^b v2^c, a, c < 3, b < 2')
    pres = NicholsPresentation(profile)
    sign = ctx.from_int(ctx.sign(i + 1))
    alpha = _alpha(ctx, i, j)
    pres.add('v1^3', linear_combination(ctx, [(1, (0, 0, 0))]))
    pres.add('v1v2^2', linear_combination(ctx, [(1, (0, 1, 1)), (sign, (1, 0, 1)), (1, (1, 1, 0))]))
    pres.add('v1^2v2', linear_combination(ctx, [
        (1, (0, 0, 1)), (sign * xi(2 * j), (0, 1, 0)), (xi(-2 * j), (1, 0, 0))]))
    pres.add('v2^3', linear_combination(ctx, [
        (1, (1, 1, 1)),
        (-(alpha * ctx.sign(i) * (xi(-j) - xi(-2 * j))), (0, 0, 1)),
        (-(alpha * (xi(-j) + xi(-2 * j))), (1, 0, 0)),
        (-alpha, (0, 1, 0))]))
    return pres


def _pair_conditions(p: int, s: Vij, t: Vij):
    n2p = 2 * p
    if (t.i * s.j + s.i * t.j) % n2p:
        raise FamilyConstraintViolated('V+V', 'kj + il = 0 mod 2p')
    if (p * (s.i + t.i) + s.j + t.j) % n2p:
        raise FamilyConstraintViolated('V+V', 'p(i+k) + j + l = 0 mod 2p')


def pair_presentation(ctx: ScalarContext, s: Vij, t: Vij) -> NicholsPresentation:
    """B(V_{i,j} + V_{k,l}) with both summands in Lambda1 or both in Lambda2, 8N^2-dimensional"""
    p = ctx.p
    check_lambda(p, [s, t])
    _pair_conditions(p, s, t)
    i, j, k, l = s.i, s.j, t.i, t.j
    xi = ctx.xi_power
    if in_lambda_one(ctx, i, j) and in_lambda_one(ctx, k, l):
        family = 'V+V Lambda1'
        q = xi(-j) * ctx.sign(i)
        add_summand = _lambda_one_relations
    elif in_lambda_two(ctx, i, j) and in_lambda_two(ctx, k, l):
        family = 'V+V Lambda2'
        q = xi(-i * j)
        add_summand = _lambda_two_relations
    else:
        raise FamilyConstraintViolated('V+V', 'both summands in Lambda1 or both in Lambda2')
    n = _order(ctx, q, family)
    profile = NicholsProfile(p, [s, t], family, n, render(q), 8 * n * n,
                             'v1^a v2^b (w1v2)^c w1^d w2^e, a, c, d < 2, b, e < N')
    pres = NicholsPresentation(profile)
    add_summand(ctx, i, j, 0, 1, pres, n, 'V:')
    add_summand(ctx, k, l, 2, 3, pres, n, 'W:')
    t_inv = ctx.theta.inverse()
    pres.add('w1v1', linear_combination(ctx, [(1, (2, 0)), (-xi(-i * l), (0, 2))]))
    pres.add('w2v1', linear_combination(ctx, [
        (1, (3, 0)), (-xi((k + 1) * j), (0, 3)),
        (-(xi(i - k) * ctx.sign(i)), (2, 1)),
        (xi(i - k) * ctx.sign(i) * xi(-(i + 1) * l), (1, 2))]))
    pres.add('w2v2', linear_combination(ctx, [
        (1, (3, 1)), (-xi((i + 1) * (p - l)), (1, 3)),
        (-(t_inv * t_inv * xi((i + 1) * (p - 1 - l) + (p - 1 - k)) * (ctx.from_int(ctx.sign(k)) + xi(l))), (0, 2))]))
    return pres


def with_chi_presentation(ctx: ScalarContext, s: Vij, chi: Chi) -> NicholsPresentation:
    """
    B(V_{i,j} + K_{chi^k}), k odd, 8N^2-dimensional.

    Lambda1-based instances need (k+1)(pi-j) = 0 mod 2p and are proved;
    Lambda2-based ones need (k-1)(pi-j) = 0 mod 2p and are proved only for
    N in {3, 4}.
    """
    p, n2p = ctx.p, 2 * ctx.p
    check_lambda(p, [s])
    i, j, k = s.i, s.j, chi.k
    if k % 2 == 0:
        raise FamilyConstraintViolated('V+chi', 'k odd')
    xi = ctx.xi_power
    if in_lambda_one(ctx, i, j):
        if ((k + 1) * (p * i - j)) % n2p:
            raise FamilyConstraintViolated('V+chi Lambda1', '(k+1)(pi-j) = 0 mod 2p')
        q = xi(-j) * ctx.sign(i)
        n = _order(ctx, q, 'V+chi Lambda1')
        profile = NicholsProfile(p, [s, chi], 'V+chi Lambda1', n, render(q), 8 * n * n,
                                 'v1^a v2^b (v3v1)^c (v3v2)^d v3^e, b, d < N, a, c, e < 2')
        pres = NicholsPresentation(profile)
        _lambda_one_relations(ctx, i, j, 0, 1, pres, n)
        pres.add('v3^2', linear_combination(ctx, [(1, (2, 2))]))
        pres.add('(v3v1)^N', linear_combination(ctx, [(1, (2, 0) * n), (ctx.sign(i * n), (0, 2) * n)]))
        sgn = ctx.sign(i)
        pres.add('v1v2v3', linear_combination(ctx, [
            (sgn, (0, 1, 2)), (1, (0, 2, 1)), (sgn, (1, 2, 0)), (1, (2, 1, 0))]))
        alpha = _alpha(ctx, i, j)
        pres.add('v3v2^2', linear_combination(ctx, [
            (1, (2, 1, 1)), (ctx.from_int(sgn) + xi(-j), (1, 2, 1)), (xi(-j) * sgn, (1, 1, 2)),
            (alpha * ctx.sign(i + 1), (0, 2, 0))]))
        return pres
    if in_lambda_two(ctx, i, j):
        if ((k - 1) * (p * i - j)) % n2p:
            raise FamilyConstraintViolated('V+chi Lambda2', '(k-1)(pi-j) = 0 mod 2p')
        q = xi(-i * j)
        n = _order(ctx, q, 'V+chi Lambda2')
        status = PROVED if n in (3, 4) else CONJECTURE
        profile = NicholsProfile(p, [s, chi], 'V+chi Lambda2', n, render(q), 8 * n * n,
                                 'v1^a v2^b (v3v1)^c (v3v2)^d v3^e', status=status)
        pres = NicholsPresentation(profile)
        _lambda_two_relations(ctx, i, j, 0, 1, pres, n)
        pres.add('v3^2', linear_combination(ctx, [(1, (2, 2))]))
        sgn = ctx.sign(i)
        pres.add('v1v2v3', linear_combination(ctx, [
            (xi(j) * ctx.sign(i + 1), (0, 1, 2)), (-xi(j), (0, 2, 1)), (1, (1, 2, 0)), (sgn, (2, 1, 0))]))
        pres.add('v3v1^2', linear_combination(ctx, [
            (1, (2, 0, 0)), (ctx.from_int(ctx.sign(i + 1)) - xi(j), (0, 2, 0)), (xi(j) * sgn, (0, 0, 2))]))
        alpha = _alpha(ctx, i, j)
        geometric = ctx.zero
        for ell in range(n - 1):
            geometric = geometric + xi(2 * j * ell)
        pres.add('(v3v2)^N', linear_combination(ctx, [
            (alpha * ctx.sign(n * i) * geometric, (0, 2, 0, 2) + (1, 2) * (n - 2)),
            (ctx.sign(n * i), (1, 2) * n), (1, (2, 1) * n)]))
        return pres
    raise FamilyConstraintViolated('V+chi', 'V in Lambda1 or Lambda2')


def catalogue_presentation(ctx: ScalarContext, summands: Sequence[Summand]) -> Optional[NicholsPresentation]:
    """The encoded presentation for this sum of simples, or None"""
    summands = normalize_all(ctx.p, summands)
    twos = [s for s in summands if isinstance(s, Vij)]
    chis = [s for s in summands if isinstance(s, Chi)]
    builders: List[Callable[[], NicholsPresentation]] = []
    if len(twos) == 1 and not chis:
        s = twos[0]
        builders = [lambda: quadratic_presentation(ctx, s.i, s.j),
                    lambda: g3_presentation(ctx, s.i, s.j),
                    lambda: standard_b2_presentation(ctx, s.i, s.j)]
    elif len(twos) == 2 and not chis:
        builders = [lambda: pair_presentation(ctx, twos[0], twos[1])]
    elif len(twos) == 1 and len(chis) == 1:
        builders = [lambda: with_chi_presentation(ctx, twos[0], chis[0])]
    for build in builders:
        try:
            return build()
        except FamilyConstraintViolated as e:
            logger.debug(f"{[s.label() for s in summands]}: {e}")
    return None
