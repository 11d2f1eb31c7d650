"""
Presentations of H_{p,-1}, of the bosonizations B(V_{i,j})#H with quadratic
relations, and of their liftings.

Every family shares the relations of H_{p,-1},
    a^{2p} = 1,  b^2 = 0,  ba = xi ab,
and, for a two-dimensional summand with basis x, y and character index i,
    ax = xi^i xa,  bx = xi^i xb,
    ay = xi^{i+1} ya + lambda^-1 xba^p,  by = xi^{i+1} yb + xa^{p+1}.
The coalgebra structure on x, y is read off the coaction of V_{i,j}.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from exactla import vec_add_term
from nichols.derivations import TensorElement
from nichols.presentations import (
    PROVED, NicholsPresentation, g3_presentation, in_lambda_two,
    quadratic_presentation,
)
from rewrite.closure import ClosureReport, close_ambiguities
from rewrite.order import Letter, Word
from rewrite.presentation import LinComb, Presentation
from scalar import ScalarContext, ThetaScalar, parse
from utils.errors import FamilyConstraintViolated
from ydmod.simples import two_dim_scalars
from ydmod.summands import in_lambda

logger = logging.getLogger(__name__)

Coproduct = Dict[Tuple[Word, Word], ThetaScalar]

FAMILIES = ('H', 'Bos', 'A3', 'A4', 'A33')
EXCLUDED = {'A21': 'the lower term o(beta_1) of this family is not determined'}


@dataclass
class Lifting:
    """A presentation with the coalgebra data of its generators"""
    family: str
    params: Dict[str, object]
    presentation: Presentation
    coproducts: Dict[int, Coproduct]
    counits: Dict[int, ThetaScalar]
    antipodes: Dict[int, LinComb]
    base: List[int]
    claimed_dim: int
    status: str = PROVED
    closure: Optional[ClosureReport] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        pres = self.presentation
        text = pres.order.text
        return {
            'family': self.family,
            'params': {k: str(v) for k, v in sorted(self.params.items())},
            'presentation': pres.to_dict(),
            'coproducts': {
                text((g,)): [[text(l), text(r), str(s)] for (l, r), s in sorted(delta.items())]
                for g, delta in sorted(self.coproducts.items())
            },
            'claimed_dim': self.claimed_dim,
            'status': self.status,
            'closure': self.closure.to_dict() if self.closure else None,
            'notes': list(self.notes),
        }


def in_lambda_three(ctx: ScalarContext, i: int, j: int) -> bool:
    """(i, j) in Lambda^2 with xi^{2(i+1)} = 1 and 1 + xi^{2j} = 0"""
    return (in_lambda(ctx.p, i, j) and in_lambda_two(ctx, i, j)
            and ctx.xi_power(2 * (i + 1)) == ctx.one and ctx.xi_power(2 * j) == -ctx.one)


def lambda_four_failure(ctx: ScalarContext, i: int, j: int) -> Optional[str]:
    """First congruence of Lambda^4 that (i, j) violates, or None"""
    n = 2 * ctx.p
    checks = [
        ((ctx.p * i - j) % n != 0, 'pi - j != 0 mod 2p'),
        (((ctx.p + j) * (i - 1)) % n == 0, '(p+j)(i-1) = 0 mod 2p'),
        ((3 * i * j) % n == 0, '3ij = 0 mod 2p'),
        ((3 * (i + 1)) % n == 0, '3(i+1) = 0 mod 2p'),
    ]
    return next((text for ok, text in checks if not ok), None)


def in_lambda_four(ctx: ScalarContext, i: int, j: int) -> bool:
    return lambda_four_failure(ctx, i, j) is None


def _scalar(ctx: ScalarContext, value: Union[int, str, ThetaScalar]) -> ThetaScalar:
    if isinstance(value, ThetaScalar):
        return value
    if isinstance(value, str):
        return parse(ctx, value)
    return ctx.from_int(value)


def _group_letters() -> List[Letter]:
    return [Letter('b', weight=0, rank=0), Letter('a', weight=0, rank=1)]


def _a(p: int, k: int) -> str:
    return 'a' * (k % (2 * p))


def _add_group_relations(pres: Presentation):
    ctx = pres.ctx
    p = ctx.p
    pres.add_relation('a^2p', pres.combo([(1, 'a' * 2 * p), (-1, '1')]))
    pres.add_relation('b^2', pres.combo([(1, 'bb')]))
    pres.add_relation('ba', pres.combo([(1, 'ba'), (-ctx.xi_power(1), 'ab')]))


def _add_cross_relations(pres: Presentation, i: int, x: str, y: str):
    ctx = pres.ctx
    p = ctx.p
    xi = ctx.xi_power
    pres.add_relation(f'a{x}', pres.combo([(1, 'a' + x), (-xi(i), x + 'a')]))
    pres.add_relation(f'b{x}', pres.combo([(1, 'b' + x), (-xi(i), x + 'b')]))
    pres.add_relation(f'a{y}', pres.combo([(1, 'a' + y), (-xi(i + 1), y + 'a'),
                                           (-ctx.lam_inv, x + 'b' + _a(p, p))]))
    pres.add_relation(f'b{y}', pres.combo([(1, 'b' + y), (-xi(i + 1), y + 'b'),
                                           (-1, x + _a(p, p + 1))]))


def _group_coalgebra(pres: Presentation) -> Tuple[Dict[int, Coproduct], Dict[int, LinComb]]:
    ctx = pres.ctx
    p = ctx.p
    w = pres.word
    a, b = w('a'), w('b')
    coproducts = {
        a[0]: {(a, a): ctx.one, (b, w('b' + _a(p, p))): ctx.lam_inv},
        b[0]: {(b, w(_a(p, p + 1))): ctx.one, (a, b): ctx.one},
    }
    antipodes = {
        a[0]: {w(_a(p, -1)): ctx.one},
        b[0]: pres.normal_form({w('b' + _a(p, p - 2)): ctx.xi_power(p + 1)}),
    }
    return coproducts, antipodes


def _summand_coproducts(pres: Presentation, i: int, j: int, x: str, y: str) -> Dict[int, Coproduct]:
    """Delta(x), Delta(y) from the coaction of V_{i,j} on x = v1, y = v2"""
    ctx = pres.ctx
    p = ctx.p
    w = pres.word
    x1, x2 = two_dim_scalars(ctx, i, j)
    theta_inv = ctx.theta.inverse()
    out = {}
    for letter, other, power, tail_power, scale in ((x, y, -j, -1 - j, x2), (y, x, p - j, p - j - 1, x1)):
        delta: Coproduct = {(w(letter), ()): ctx.one, (w(_a(p, power)), w(letter)): ctx.one}
        vec_add_term(delta, (w('b' + _a(p, tail_power)), w(other)), scale * theta_inv)
        out[w(letter)[0]] = delta
    return out


def _counits(pres: Presentation) -> Dict[int, ThetaScalar]:
    ctx = pres.ctx
    return {k: ctx.one if letter.name == 'a' else ctx.zero for k, letter in enumerate(pres.order.letters)}


def _translate(pres: Presentation, relation: TensorElement, names: str) -> LinComb:
    """Nichols relation on v1, v2, ... -> linear combination over the given letters"""
    out: LinComb = {}
    for word, s in relation.items():
        vec_add_term(out, pres.word(''.join(names[k] for k in word)), s)
    return out


def _with_terms(pres: Presentation, combo: LinComb, terms) -> LinComb:
    out = dict(combo)
    for coeff, text in terms:
        vec_add_term(out, pres.word(text), coeff)
    return out


def radford_presentation(ctx: ScalarContext) -> Lifting:
    """H_{p,-1} itself, on the letters b < a"""
    pres = Presentation(ctx, f'H_{ctx.p}', _group_letters())
    _add_group_relations(pres)
    coproducts, antipodes = _group_coalgebra(pres)
    base = [pres.word('a')[0], pres.word('b')[0]]
    return Lifting('H', {'p': ctx.p}, pres, coproducts, _counits(pres), antipodes, base, 4 * ctx.p)


def _two_dim_letters() -> List[Letter]:
    return [Letter('y', potential=1, rank=0), Letter('x', rank=1)] + _group_letters()


def _two_dim_lifting(ctx: ScalarContext, family: str, name: str, i: int, j: int,
                     params: Dict[str, object], claimed: int, letters: List[Letter]) -> Lifting:
    pres = Presentation(ctx, name, letters)
    _add_group_relations(pres)
    _add_cross_relations(pres, i, 'x', 'y')
    coproducts, antipodes = _group_coalgebra(pres)
    coproducts.update(_summand_coproducts(pres, i, j, 'x', 'y'))
    base = [pres.word(c)[0] for c in 'xyab']
    return Lifting(family, params, pres, coproducts, _counits(pres), antipodes, base, claimed)


def bosonization_presentation(ctx: ScalarContext, i: int, j: int) -> Lifting:
    """
    B(V_{i,j})#H for (i, j) in Lambda^1 or Lambda^2, with x = v1, y = v2.

    Raises:
        FamilyConstraintViolated: when B(V_{i,j}) has no quadratic relations
    """
    p = ctx.p
    i, j = i % (2 * p), j % (2 * p)
    if not in_lambda(p, i, j):
        raise FamilyConstraintViolated('Bos', 'pi - j != 0 mod 2p')
    nichols: NicholsPresentation = quadratic_presentation(ctx, i, j)
    claimed = nichols.profile.claimed_dim * 4 * p
    lifting = _two_dim_lifting(ctx, 'Bos', f'B(V_{{{i},{j}}})#H_{p}', i, j,
                               {'i': i, 'j': j}, claimed, _two_dim_letters())
    for rel_name, relation in zip(nichols.names, nichols.relations):
        lifting.presentation.add_relation(rel_name, _translate(lifting.presentation, relation, 'xy'))
    lifting.status = nichols.profile.status
    lifting.notes.append(f"{nichols.profile.family}, N = {nichols.profile.n_value}")
    return lifting


def lambda_three_lifting(ctx: ScalarContext, i: int, j: int, mu=0) -> Lifting:
    """
    The family over Lambda^3: x^4 = 0, xy + yx = mu ba^-1, y^2 + theta^-2 x^2 = mu/2 (1 - a^p).

    Raises:
        FamilyConstraintViolated: for (i, j) outside Lambda^3
    """
    p = ctx.p
    i, j = i % (2 * p), j % (2 * p)
    if not in_lambda(p, i, j):
        raise FamilyConstraintViolated('A3', 'pi - j != 0 mod 2p')
    if not in_lambda_two(ctx, i, j):
        raise FamilyConstraintViolated('A3', '1 + xi^{(i+1)(p-j)} = 0')
    if ctx.xi_power(2 * (i + 1)) != ctx.one:
        raise FamilyConstraintViolated('A3', 'xi^{2(i+1)} = 1')
    if ctx.xi_power(2 * j) != -ctx.one:
        raise FamilyConstraintViolated('A3', '1 + xi^{2j} = 0')
    mu = _scalar(ctx, mu)
    half_mu = mu * ctx.from_int(2).inverse()
    theta_sq_inv = (ctx.theta * ctx.theta).inverse()
    lifting = _two_dim_lifting(ctx, 'A3', f'A3_{{{i},{j}}}({mu})', i, j, {'i': i, 'j': j, 'mu': mu},
                               32 * p, _two_dim_letters())
    pres = lifting.presentation
    pres.add_relation('x^4', pres.combo([(1, 'xxxx')]))
    pres.add_relation('xy', pres.combo([(1, 'xy'), (1, 'yx'), (-mu, 'b' + _a(p, -1))]))
    pres.add_relation('y^2', pres.combo([(1, 'yy'), (theta_sq_inv, 'xx'), (-half_mu, '1'),
                                         (half_mu, _a(p, p))]))
    return lifting


def lambda_four_lifting(ctx: ScalarContext, i: int, j: int, mu=0, close: bool = True) -> Lifting:
    """
    The family over Lambda^4, on y < z < x with z := xy.

    The relations are those of the 18-dimensional B(V_{i,j}) with
        y^3 - ... = mu (1 - a^p),
        xy^2 + (-1)^{i+1} yxy + y^2x = -2 mu xi^{1+i+j}((-1)^i - xi^j) ba^-1.

    Raises:
        FamilyConstraintViolated: for (i, j) outside Lambda^4 or with xi^{-ij} = 1
    """
    p = ctx.p
    i, j = i % (2 * p), j % (2 * p)
    failed = lambda_four_failure(ctx, i, j)
    if failed:
        raise FamilyConstraintViolated('A4', failed)
    if ctx.xi_power(-i * j) == ctx.one:
        raise FamilyConstraintViolated('A4', 'xi^{-ij} != 1')
    mu = _scalar(ctx, mu)
    letters = [Letter('y', potential=1, rank=0), Letter('z', weight=2, potential=1, rank=1, expands=('x', 'y')),
               Letter('x', rank=2)] + _group_letters()
    lifting = _two_dim_lifting(ctx, 'A4', f'A4_{{{i},{j}}}({mu})', i, j, {'i': i, 'j': j, 'mu': mu},
                               72 * p, letters)
    pres = lifting.presentation
    pres.add_relation('z', pres.combo([(1, 'z'), (-1, 'xy')]))
    nichols = g3_presentation(ctx, i, j)
    lower = -mu * ctx.from_int(2) * ctx.xi_power(1 + i + j) * (ctx.from_int(ctx.sign(i)) - ctx.xi_power(j))
    extra = {
        'v1v2^2': [(-lower, 'b' + _a(p, -1))],
        'v2^3': [(-mu, '1'), (mu, _a(p, p))],
    }
    for rel_name, relation in zip(nichols.names, nichols.relations):
        combo = _with_terms(pres, _translate(pres, relation, 'xy'), extra.get(rel_name, []))
        pres.add_relation(rel_name, combo)
    if close:
        lifting.closure = close_ambiguities(pres)
    return lifting


def pair_lifting(ctx: ScalarContext, mu=0, nu=0, close: bool = True) -> Lifting:
    """
    The family over V_{p-1,p/2} + V_{p-1,3p/2}, p even with p/2 odd, on t < z < y < x.

    Raises:
        FamilyConstraintViolated: unless p = 2 mod 4
    """
    p = ctx.p
    if p % 2 or (p // 2) % 2 == 0:
        raise FamilyConstraintViolated('A33', 'p even and p/2 odd')
    i, j, k, l = p - 1, p // 2, p - 1, 3 * p // 2
    mu, nu = _scalar(ctx, mu), _scalar(ctx, nu)
    letters = [Letter('t', potential=1, rank=0), Letter('z', rank=1), Letter('y', potential=1, rank=2),
               Letter('x', rank=3)] + _group_letters()
    name = f'A33_{{{i},{j},{k},{l}}}({mu},{nu})'
    lifting = _two_dim_lifting(ctx, 'A33', name, i, j,
                               {'i': i, 'j': j, 'k': k, 'l': l, 'mu': mu, 'nu': nu}, 512 * p, letters)
    pres = lifting.presentation
    _add_cross_relations(pres, k, 'z', 't')
    lifting.coproducts.update(_summand_coproducts(pres, k, l, 'z', 't'))
    lifting.base = [pres.word(c)[0] for c in 'xyztab']
    theta_sq_inv = (ctx.theta * ctx.theta).inverse()
    half = ctx.from_int(2).inverse()
    for x, y, param in (('x', 'y', mu), ('z', 't', nu)):
        pres.add_relation(f'{x}^4', pres.combo([(1, x * 4)]))
        pres.add_relation(f'{x}{y}', pres.combo([(1, x + y), (1, y + x), (-param, 'b' + _a(p, -1))]))
        pres.add_relation(f'{y}^2', pres.combo([(1, y + y), (theta_sq_inv, x + x), (-param * half, '1'),
                                                (param * half, _a(p, p))]))
    half_p = ctx.xi_power(p // 2)
    pres.add_relation('zx', pres.combo([(1, 'zx'), (-half_p, 'xz')]))
    pres.add_relation('tx', pres.combo([(1, 'tx'), (1, 'zy'), (1, 'yz'), (1, 'xt')]))
    pres.add_relation('ty', pres.combo([(1, 'ty'), (1, 'yt'), (theta_sq_inv * (ctx.one + half_p), 'xz')]))
    if close:
        lifting.closure = close_ambiguities(pres)
    return lifting


def build_lifting(ctx: ScalarContext, family: str, i: Optional[int] = None, j: Optional[int] = None,
                  mu=0, nu=0, close: bool = True) -> Lifting:
    """
    Dispatch on the family name: H, Bos, A3, A4 or A33.

    Raises:
        FamilyConstraintViolated: for parameters outside the family, or an excluded family
        ValueError: for an unknown family name
    """
    if family in EXCLUDED:
        raise FamilyConstraintViolated(family, EXCLUDED[family])
    if family == 'H':
        return radford_presentation(ctx)
    if family == 'A33':
        return pair_lifting(ctx, mu, nu, close)
    if family not in FAMILIES:
        raise ValueError(f"unknown lifting family {family!r}; expected one of {FAMILIES}")
    if i is None or j is None:
        raise ValueError(f"family {family} needs i and j")
    if family == 'Bos':
        return bosonization_presentation(ctx, i, j)
    if family == 'A3':
        return lambda_three_lifting(ctx, i, j, mu)
    return lambda_four_lifting(ctx, i, j, mu, close)
