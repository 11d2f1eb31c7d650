"""
Congruence systems behind the finite-dimensional Nichols algebras over H_{p,-1}.

Each system is a conjunction of congruences mod 2p in the indices of one
simple V_{i,j}, of V_{i,j} + K_{chi^k}, or of V_{i,j} + V_{k,l}. The solver
enumerates the whole index domain and compares the solution set with the
closed-form description known for prime p. A mismatch is reported, not
raised.

Two printed systems disagree with the diagram conditions they come from
(ij = 0 where the vertex condition gives ij = p, and (i+1)l where the edge
condition gives (i+1)j). Those systems carry the reading derived from the
diagram as well, so that both solution sets are visible.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

from sympy import isprime

from classify.index_sets import IndexSets, lambda_sets
from scalar import ScalarContext
from ydmod.summands import Chi, Summand, Vij
from ydmod.verdict import FINITE, finiteness_verdict

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]
Predicate = Callable[[int, Point], bool]

SIMPLE = 'simple'
WITH_CHI = 'simple+chi'
PAIR = 'pair'


def _zero(p: int, value: int) -> bool:
    return value % (2 * p) == 0


def _is_p(p: int, value: int) -> bool:
    return value % (2 * p) == p


@dataclass(frozen=True)
class Reading:
    """An alternative reading of a printed system"""
    note: str
    congruences: Tuple[str, ...]
    holds: Predicate


@dataclass(frozen=True)
class CongruenceSystem:
    name: str
    shape: str
    congruences: Tuple[str, ...]
    holds: Predicate
    closed_form: Callable[[int, Point], Optional[bool]]
    reading: Optional[Reading] = None


# ---------------------------------------------------------------------------
# Systems for one simple V_{i,j}

def _s21(p, x):
    i, j = x
    return _is_p(p, i * j)


def _s22(p, x):
    i, j = x
    return _zero(p, p * i - (i + 1) * j)


def _s23(p, x):
    i, j = x
    return _zero(p, p * i - (2 * i + 1) * j)


def _s245(p, x):
    i, j = x
    return _zero(p, 3 * i * j) and _zero(p, p * (i + 1) + (i - 1) * j)


def _s26(p, x):
    i, j = x
    return _zero(p, 5 * i * j) and _zero(p, p * i + (2 * i - 1) * j)


def _s27(p, x):
    i, j = x
    return _is_p(p, 5 * i * j) and _zero(p, p * (i + 1) + (i - 1) * j)


def _c21(p, x):
    i, j = x
    return i == p and j % 2 == 1


def _c22(p, x):
    i, j = x
    return i == p - 1 and (p - j) % 2 == 1


def _c23(p, x):
    i, j = x
    if p == 2:
        return False
    return i in ((p - 1) // 2, (p - 1) // 2 + p) and (j - i) % 2 == 0


def _c245(p, x):
    return p == 3 and x in {(1, 2), (1, 4), (4, 1), (4, 5)}


def _c26(p, x):
    return p == 5 and x in {(8, 2), (8, 4), (8, 6), (8, 8)}


def _c27(p, x):
    return p == 5 and x in {(1, 1), (1, 3), (1, 7), (1, 9)}


# ---------------------------------------------------------------------------
# Systems for V_{i,j} + K_{chi^k}

def _w1(p, x):
    i, j, k = x
    return _zero(p, i * j) and _zero(p, (k + 1) * (p * i - j)) and k % 2 == 1


def _w1_read(p, x):
    i, j, k = x
    return _is_p(p, i * j) and _zero(p, (k + 1) * (p * i - j)) and k % 2 == 1


def _w2(p, x):
    i, j, k = x
    return _zero(p, p * i - (i + 1) * j) and _zero(p, k * p * i - (k + i) * j) and k % 2 == 1


def _w3(p, x):
    i, j, k = x
    return (_zero(p, 3 * i * j) and _zero(p, p * i - (i + 1) * j)
            and _zero(p, (k + 1) * (p * i - j)) and k % 2 == 1)


def _w4(p, x):
    i, j, k = x
    return (_zero(p, 3 * i * j) and _zero(p, p * k * i - (i + k) * j)
            and _zero(p, (k + 1) * (p * i - j)) and k % 2 == 1)


def _w5(p, x):
    i, j, k = x
    return (_is_p(p, i * j) and _zero(p, 3 * (p * i - j))
            and _zero(p, (k - 1) * (p * i - j)) and k % 2 == 1)


def _w6(p, x):
    i, j, k = x
    return (_is_p(p, 3 * i * j) and _zero(p, p * (i + 1) + (i - 1) * j)
            and _zero(p, (k - 1) * (p * i - j)) and k % 2 == 1)


def _cw1(p, x):
    i, j, k = x
    return i == p and j % 2 == 1 and k == 2 * p - 1


def _cw2(p, x):
    i, j, k = x
    return i == p - 1 and (p - j) % 2 == 1 and k == 1


def _cw3(p, x):
    i, j, k = x
    return p == 3 and i == p - 1 and j % 2 == 0 and k == 2 * p - 1


def _cw4(p, x):
    i, j, k = x
    return p == 3 and i == p + 1 and j % 2 == 0 and k == 2 * p - 1


def _cw5(p, x):
    i, j, k = x
    return p == 3 and i == p and j % 2 == 1 and k == 1


def _cw6(p, x):
    i, j, k = x
    return p == 3 and i == 1 and j % 2 == 1 and k == 1


# ---------------------------------------------------------------------------
# Systems for V_{i,j} + V_{k,l}

def _v1(p, x):
    i, j, k, l = x
    return (_zero(p, k * j + i * l) and _is_p(p, k * l) and _is_p(p, i * j)
            and _zero(p, p * (i + k) - (j + l)))


def _v2(p, x):
    i, j, k, l = x
    return (_zero(p, k * j + i * l) and _zero(p, p * k - (k + 1) * l)
            and _zero(p, p * i - (i + 1) * l) and _zero(p, k * l + i * j))


def _v2_read(p, x):
    i, j, k, l = x
    return (_zero(p, k * j + i * l) and _zero(p, p * k - (k + 1) * l)
            and _zero(p, p * i - (i + 1) * j) and _zero(p, k * l + i * j))


def _v3(p, x):
    i, j, k, l = x
    return (_is_p(p, i * j) and _is_p(p, k * l) and _zero(p, k * j + i * l)
            and _zero(p, p * (k - i) - (l - j)) and _zero(p, p * i - 3 * j))


def _v4(p, x):
    i, j, k, l = x
    return (_zero(p, 3 * i * j) and _zero(p, i * j - k * l) and _zero(p, p * i - (i + 1) * j)
            and _zero(p, p * k - (k + 1) * l) and _zero(p, k * j + i * l + p * i - j))


def _cv1(p, x):
    i, j, k, l = x
    return i == k == p and _zero(p, j + l) and j % 2 == 1


def _cv2(p, x):
    i, j, k, l = x
    return i == k == p - 1 and _zero(p, j + l) and (p - j) % 2 == 1


def _cv3(p, x):
    i, j, k, l = x
    return p == 3 and i == k == p and l == j and j % 2 == 1


def _cv4(p, x):
    i, j, k, l = x
    return p == 3 and i == k == p - 1 and l == j and j % 2 == 0


SYSTEMS: Tuple[CongruenceSystem, ...] = (
    CongruenceSystem('2-1', SIMPLE, ('ij = p',), _s21, _c21),
    CongruenceSystem('2-2', SIMPLE, ('pi - (i+1)j = 0',), _s22, _c22),
    CongruenceSystem('2-3', SIMPLE, ('pi - (2i+1)j = 0',), _s23, _c23),
    CongruenceSystem('2-4/5', SIMPLE, ('3ij = 0', 'p(i+1) + (i-1)j = 0'), _s245, _c245),
    CongruenceSystem('2-6', SIMPLE, ('5ij = 0', 'pi + (2i-1)j = 0'), _s26, _c26),
    CongruenceSystem('2-7', SIMPLE, ('5ij = p', 'p(i+1) + (i-1)j = 0'), _s27, _c27),
    CongruenceSystem(
        '21-1', WITH_CHI, ('ij = 0', '(k+1)(pi-j) = 0', 'k odd'), _w1, _cw1,
        Reading('vertex condition xi^{-ij} = -1 gives ij = p',
                ('ij = p', '(k+1)(pi-j) = 0', 'k odd'), _w1_read)),
    CongruenceSystem('21-2', WITH_CHI, ('pi - (i+1)j = 0', 'kpi - (k+i)j = 0', 'k odd'), _w2, _cw2),
    CongruenceSystem('21-3', WITH_CHI, ('3ij = 0', 'pi - (i+1)j = 0', '(k+1)(pi-j) = 0', 'k odd'), _w3, _cw3),
    CongruenceSystem('21-4', WITH_CHI, ('3ij = 0', 'pki - (i+k)j = 0', '(k+1)(pi-j) = 0', 'k odd'), _w4, _cw4),
    CongruenceSystem('21-5', WITH_CHI, ('ij = p', '3(pi-j) = 0', '(k-1)(pi-j) = 0', 'k odd'), _w5, _cw5),
    CongruenceSystem('21-6', WITH_CHI, ('3ij = p', 'p(i+1) + (i-1)j = 0', '(k-1)(pi-j) = 0', 'k odd'),
                     _w6, _cw6),
    CongruenceSystem('22-1', PAIR, ('kj + il = 0', 'kl = p', 'ij = p', 'p(i+k) - (j+l) = 0'), _v1, _cv1),
    CongruenceSystem(
        '22-2', PAIR, ('kj + il = 0', 'pk - (k+1)l = 0', 'pi - (i+1)l = 0', 'kl + ij = 0'), _v2, _cv2,
        Reading('edge condition xi^{pi-(i+1)j} = 1 gives pi - (i+1)j',
                ('kj + il = 0', 'pk - (k+1)l = 0', 'pi - (i+1)j = 0', 'kl + ij = 0'), _v2_read)),
    CongruenceSystem('22-3', PAIR, ('ij = p', 'kl = p', 'kj + il = 0', 'p(k-i) - (l-j) = 0', 'pi - 3j = 0'),
                     _v3, _cv3),
    CongruenceSystem('22-4', PAIR, ('3ij = 0', 'ij - kl = 0', 'pi - (i+1)j = 0', 'pk - (k+1)l = 0',
                                    'kj + il + pi - j = 0'), _v4, _cv4),
)


def system_by_name(name: str) -> CongruenceSystem:
    for system in SYSTEMS:
        if system.name == name:
            return system
    raise KeyError(f"unknown congruence system {name!r}")


def _simple_domain(sets: IndexSets) -> List[Tuple[int, int]]:
    """(i, j) in Lambda_p with j not in {0, p}"""
    return sorted((i, j) for i, j in sets.lam if j not in (0, sets.p))


def domain(sets: IndexSets, shape: str) -> Iterator[Point]:
    """All index tuples a system of the given shape ranges over"""
    simples = _simple_domain(sets)
    if shape == SIMPLE:
        yield from simples
    elif shape == WITH_CHI:
        for i, j in simples:
            for k in range(2 * sets.p):
                yield i, j, k
    elif shape == PAIR:
        for i, j in simples:
            for k, l in simples:
                yield i, j, k, l
    else:
        raise ValueError(f"unknown system shape {shape!r}")


def _listed(points: Set[Point]) -> List[List[int]]:
    return [list(x) for x in sorted(points)]


def _compare(solutions: Set[Point], closed: Optional[Set[Point]]) -> Tuple[Optional[bool], Optional[dict]]:
    if closed is None:
        return None, None
    if solutions == closed:
        return True, None
    return False, {'missing': _listed(closed - solutions), 'extra': _listed(solutions - closed)}


def solve_system(system: CongruenceSystem, sets: IndexSets, prime: Optional[bool] = None) -> dict:
    """
    Brute-force solution set of one system, compared with its closed form.

    The closed form is only known for prime p; for other p the comparison
    fields are None.
    """
    p = sets.p
    if prime is None:
        prime = bool(isprime(p))
    points = list(domain(sets, system.shape))
    solutions = {x for x in points if system.holds(p, x)}
    closed = {x for x in points if system.closed_form(p, x)} if prime else None
    agrees, discrepancy = _compare(solutions, closed)
    record = {
        'name': system.name,
        'shape': system.shape,
        'congruences': list(system.congruences),
        'solutions': _listed(solutions),
        'count': len(solutions),
        'closed_form': _listed(closed) if closed is not None else None,
        'agrees': agrees,
        'discrepancy': discrepancy,
        'reading': None,
    }
    if agrees is False:
        logger.warning(f"p={p}, system {system.name}: solutions differ from the closed form "
                       f"(missing {len(discrepancy['missing'])}, extra {len(discrepancy['extra'])})")
    if system.reading is not None:
        read = {x for x in points if system.reading.holds(p, x)}
        read_agrees, read_discrepancy = _compare(read, closed)
        record['reading'] = {
            'note': system.reading.note,
            'congruences': list(system.reading.congruences),
            'solutions': _listed(read),
            'agrees': read_agrees,
            'discrepancy': read_discrepancy,
        }
    return record


def solve_congruence_systems(ctx: ScalarContext, sets: Optional[IndexSets] = None) -> Dict[str, dict]:
    """
    Solve every congruence system for the context's p.

    Args:
        ctx: scalar context fixing p
        sets: precomputed index sets, computed when omitted

    Returns:
        {system name: record}; a record holds the solutions, the closed form
        (prime p only), whether they agree, and the discrepancy if any
    """
    sets = sets or lambda_sets(ctx)
    prime = bool(isprime(ctx.p))
    out = {system.name: solve_system(system, sets, prime) for system in SYSTEMS}
    found = sum(record['count'] for record in out.values())
    logger.info(f"p={ctx.p}: {len(SYSTEMS)} congruence systems solved, {found} solutions")
    return out


def accepted_solutions(record: dict) -> List[Point]:
    """The solutions of the reading when one exists, else the printed solutions"""
    source = record['reading'] or record
    return [tuple(x) for x in source['solutions']]


def summands_of(shape: str, point: Sequence[int]) -> List[Summand]:
    if shape == SIMPLE:
        return [Vij(point[0], point[1])]
    if shape == WITH_CHI:
        return [Vij(point[0], point[1]), Chi(point[2])]
    return [Vij(point[0], point[1]), Vij(point[2], point[3])]


def cross_check_verdicts(ctx: ScalarContext, solved: Dict[str, dict]) -> Dict[str, dict]:
    """
    Feed every accepted solution to finiteness_verdict.

    Returns:
        {system name: {'checked', 'finite', 'rows', 'not_finite'}}
    """
    out = {}
    for name, record in sorted(solved.items()):
        rows: Set[str] = set()
        not_finite = []
        points = accepted_solutions(record)
        for point in points:
            verdict = finiteness_verdict(ctx, summands_of(record['shape'], point))
            if verdict.kind == FINITE:
                rows.add(verdict.row)
            else:
                not_finite.append({'point': list(point), 'kind': verdict.kind, 'row': verdict.row})
        if not_finite:
            logger.warning(f"p={ctx.p}, system {name}: {len(not_finite)} solutions without a finite verdict")
        out[name] = {
            'checked': len(points),
            'finite': len(points) - len(not_finite),
            'rows': sorted(rows),
            'not_finite': not_finite,
        }
    return out
