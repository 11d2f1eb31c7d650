"""
Classification reports: finite-dimensional Nichols algebras over H_{p,-1}
and the Hopf algebras lifting them.

Every entry states how its dimension is known:

    EXECUTED  computed here (graded dims of B(V) or a PBW basis by rewriting)
    FORMULA   a closed dimension formula for a congruence-verified family
    QUOTED    the family is known finite but no formula is encoded

Executed certificates are on by default for p <= 3.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import isprime

import config
from classify.congruences import cross_check_verdicts, solve_congruence_systems
from classify.index_sets import IndexSets, lambda_sets
from nichols.graded import GradedDims, NicholsQuotient
from rewrite.diamond import dimension, overlaps_resolvable
from rewrite.liftings import EXCLUDED, Lifting, build_lifting
from scalar import ScalarContext
from utils.errors import CapExceeded, StepCapExceeded, UnsupportedP
from ydmod.braiding import braiding
from ydmod.simples import make_module
from ydmod.summands import Chi, Summand, Vij
from ydmod.verdict import FINITE, UNDETERMINED, Verdict, exponent_order, finiteness_verdict

logger = logging.getLogger(__name__)

EXECUTED = 'EXECUTED'
FORMULA = 'FORMULA'
QUOTED = 'QUOTED'

CERTIFIED_P = (2, 3, 4, 5)

TRIVIAL = 'trivial'
DEFORMED = 'deformed'
OPEN = 'open'

MU_LINE = 'mu in K (affine line)'
POINT = 'point'

SOURCES = {
    'exterior': 'odd one-dimensional objects: exterior algebras, no deformation',
    'quadratic-lambda1': 'quadratic relations, Lambda^1: A = gr A',
    'quadratic-lambda2': 'quadratic relations, Lambda^2 - Lambda^3: A = gr A',
    'lambda3': 'quadratic relations, Lambda^3: deformations A_{i,j}(mu)',
    'lambda4': 'cube-root family with 3(i+1) = 0 mod 2p: deformations A_{i,j}(mu)',
    'g3': 'cube-root family with 3(i+1) != 0 mod 2p: A = gr A',
    'b2': 'standard B2 family (p prime or N in {3, 6}): A = gr A',
    'prime-above-5': 'p > 5 prime: every lifting is trivial',
    'undetermined': 'liftings of this object are not determined',
    'lambda1-chi': 'V in Lambda^1 plus an odd character: A = gr A',
    'lambda3-chi': 'V in Lambda^3 plus K_chi^k, k != 1: A = gr A',
    'lambda2-chi': 'V in Lambda^2 - Lambda^3 plus an odd character: A = gr A',
    'lambda3-chi-one': 'V in Lambda^3 plus K_chi: family with an undetermined lower term',
    'quadratic-pair': 'two simples with quadratic relations: A = gr A',
}

OPEN_FLAGS = {
    'parameter-isomorphism': 'whether A(mu) and A(mu\') are isomorphic for mu, mu\' != 0 is not settled',
}


@dataclass
class ReportOptions:
    """
    Knobs of classification_report.

    Attributes:
        execute: compute certificates; None means p <= 3
        cap: largest Nichols total computed; the rewriting cap is 4p times this
        max_summands: 1 for simple objects only, 2 to add sums of two simples
        liftings: run the rewriting dimension checks of the presented liftings
    """
    execute: Optional[bool] = None
    cap: Optional[int] = None
    max_summands: int = 2
    liftings: bool = True

    def executes(self, p: int) -> bool:
        return p <= 3 if self.execute is None else self.execute

    @property
    def nichols_cap(self) -> int:
        return self.cap or config.EXECUTED_DIM_CAP

    def to_dict(self, p: int) -> dict:
        return {
            'execute': self.executes(p),
            'cap': self.nichols_cap,
            'max_summands': self.max_summands,
            'liftings': self.liftings,
        }


def summand_key(s: Summand) -> Tuple[int, int, int]:
    return (0, s.k, 0) if isinstance(s, Chi) else (1, s.i, s.j)


def objects_label(summands: Sequence[Summand]) -> str:
    return ' + '.join(s.label() for s in summands)


@dataclass
class ClassificationEntry:
    """One finite-dimensional B(V) with its dimension evidence"""
    summands: List[Summand]
    verdict: Verdict
    evidence_level: str
    numbers: Dict[str, Dict[str, int]] = field(default_factory=dict)
    graded: Optional[GradedDims] = None
    notes: List[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        return objects_label(self.summands)

    @property
    def dim(self) -> Optional[int]:
        if self.graded is not None and self.graded.complete:
            return self.graded.total
        return self.verdict.dim

    @property
    def simple(self) -> bool:
        return len(self.summands) == 1

    def to_dict(self) -> dict:
        return {
            'object': self.label,
            'summands': [s.to_dict() for s in self.summands],
            'verdict': self.verdict.kind,
            'row': self.verdict.row,
            'provenance': self.verdict.provenance,
            'dim': self.dim,
            'formula': self.verdict.formula,
            'numbers': self.numbers,
            'evidence_level': self.evidence_level,
            'certificate': self.graded.to_dict() if self.graded is not None else None,
            'notes': list(self.notes),
        }


def check_supported(p: int):
    """
    Raises:
        UnsupportedP: unless p is prime or a listed composite
    """
    if p < 2 or not (isprime(p) or p in config.SUPPORTED_COMPOSITE_P):
        raise UnsupportedP(
            f"p={p}: the classification covers prime p and p in {list(config.SUPPORTED_COMPOSITE_P)}; "
            f"index sets and Nichols computations remain available per module", p=p)


def order_numbers(p: int, s: Vij) -> Dict[str, int]:
    """N1 = ord((-1)^i xi^{-j}) and N2 = ord(xi^{-ij}) of a two-dimensional simple"""
    n = 2 * p
    return {'N1': exponent_order(p * s.i - s.j, n), 'N2': exponent_order(-s.i * s.j, n)}


def _execute(ctx: ScalarContext, summands: Sequence[Summand], cap: int) -> GradedDims:
    quotient = NicholsQuotient(braiding(make_module(ctx, summands), check=False), cap)
    try:
        quotient.build()
    except CapExceeded as e:
        logger.info(f"B({objects_label(summands)}) stopped at degree {quotient.top}: {e}")
    return quotient.graded_dims()


def nichols_entry(ctx: ScalarContext, verdict: Verdict, execute: bool, cap: int) -> ClassificationEntry:
    """
    Attach the dimension evidence to a finite verdict.

    A known dimension above the cap is not executed; an unknown one is
    executed up to the cap and kept as a truncated certificate.
    """
    summands = list(verdict.summands)
    entry = ClassificationEntry(summands, verdict, QUOTED if verdict.dim is None else FORMULA)
    entry.numbers = {s.label(): order_numbers(ctx.p, s) for s in summands if isinstance(s, Vij)}
    if not execute or (verdict.dim is not None and verdict.dim > cap):
        return entry
    graded = _execute(ctx, summands, cap)
    entry.graded = graded
    if graded.complete:
        entry.evidence_level = EXECUTED
        if verdict.dim is not None and verdict.dim != graded.total:
            logger.warning(f"B({entry.label}): executed total {graded.total}, formula {verdict.dim}")
            entry.notes.append(f"formula {verdict.dim} differs from the executed total")
    else:
        entry.notes.append(f"executed up to {sum(graded.dims)} basis words without reaching a zero degree")
    logger.debug(f"B({entry.label}): {entry.evidence_level}, dim {entry.dim}")
    return entry


def _finite_simples(ctx: ScalarContext, sets: IndexSets) -> Tuple[List[Verdict], List[Verdict]]:
    finite, undetermined = [], []
    candidates: List[Summand] = [Chi(k) for k in range(2 * ctx.p)]
    candidates += [Vij(i, j) for i, j in sorted(sets.lam)]
    for s in candidates:
        verdict = finiteness_verdict(ctx, [s])
        if verdict.kind == FINITE:
            finite.append(verdict)
        elif verdict.kind == UNDETERMINED:
            undetermined.append(verdict)
    return finite, undetermined


def _finite_pairs(ctx: ScalarContext, simples: List[Summand]) -> Tuple[List[Verdict], List[Verdict]]:
    """B(V + W) finite forces B(V) and B(W) finite, so only finite simples are paired"""
    finite, undetermined = [], []
    for s, t in combinations_with_replacement(simples, 2):
        verdict = finiteness_verdict(ctx, [s, t])
        if verdict.kind == FINITE:
            finite.append(verdict)
        elif verdict.kind == UNDETERMINED:
            undetermined.append(verdict)
    return finite, undetermined


# ---------------------------------------------------------------------------
# Liftings

def _mod(p: int, value: int) -> int:
    return value % (2 * p)


def _b2_family(p: int, s: Vij) -> bool:
    return _mod(p, p * s.i - s.j - 2 * s.i * s.j) == 0


def _g3_family(p: int, s: Vij) -> bool:
    return _mod(p, (p + s.j) * (s.i - 1)) == 0 and _mod(p, 3 * s.i * s.j) == 0


def _lambda_four_lifts(ctx: ScalarContext, sets: IndexSets, s: Vij) -> bool:
    return (s.i, s.j) in sets.lambda4 and ctx.xi_power(-s.i * s.j) != ctx.one


def simple_lifting(ctx: ScalarContext, sets: IndexSets, entry: ClassificationEntry) -> dict:
    """
    Lifting data of a finite B(V) with V simple.

    Returns:
        {'reason', 'family', 'lifting', 'algebra', 'parameters', 'basic', 'dim'}
    """
    p = ctx.p
    prime = bool(isprime(p))
    s = entry.summands[0]
    gr_dim = 4 * p * entry.dim if entry.dim is not None else None

    def lifting(reason, family, kind, algebra, dim=gr_dim, parameters=POINT):
        deformed = kind == DEFORMED
        return {
            'reason': reason,
            'family': family,
            'lifting': kind,
            'algebra': algebra,
            'parameters': parameters,
            'basic': 'mu = 0 only' if deformed else (True if kind == TRIVIAL else None),
            'dim': dim,
            'open': ['parameter-isomorphism'] if deformed else [],
        }

    if isinstance(s, Chi):
        return lifting('exterior', 'exterior', TRIVIAL, f'wedge({s.label()})#H', 8 * p)
    bosonization = f'B({s.label()})#H'
    deformation = f'A_{{{s.i},{s.j}}}(mu)'
    numbers = order_numbers(p, s)
    pair = (s.i, s.j)
    if pair in sets.lambda3:
        return lifting('lambda3', 'A3', DEFORMED, deformation, 32 * p, MU_LINE)
    if pair in sets.lambda1:
        return lifting('quadratic-lambda1', 'bosonization', TRIVIAL, bosonization, 8 * p * numbers['N1'])
    if pair in sets.lambda2:
        return lifting('quadratic-lambda2', 'bosonization', TRIVIAL, bosonization, 8 * p * numbers['N2'])
    if _lambda_four_lifts(ctx, sets, s):
        return lifting('lambda4', 'A4', DEFORMED, deformation, 72 * p, MU_LINE)
    if _g3_family(p, s):
        return lifting('g3', 'bosonization', TRIVIAL, bosonization, 72 * p)
    if _b2_family(p, s) and (prime or numbers['N2'] in (3, 6)):
        return lifting('b2', 'bosonization', TRIVIAL, bosonization)
    if prime and p > 5:
        return lifting('prime-above-5', 'bosonization', TRIVIAL, bosonization)
    return lifting('undetermined', 'bosonization', OPEN, bosonization)


def sum_lifting(ctx: ScalarContext, sets: IndexSets, entry: ClassificationEntry) -> dict:
    """Lifting data of a finite B(V + W) for two simple summands"""
    p = ctx.p
    prime = bool(isprime(p))
    gr_dim = 4 * p * entry.dim if entry.dim is not None else None
    algebra = f'B({entry.label})#H'

    def lifting(reason, kind, family='bosonization', excluded=None):
        out = {
            'reason': reason,
            'family': family,
            'lifting': kind,
            'algebra': algebra,
            'parameters': POINT,
            'basic': True if kind == TRIVIAL else None,
            'dim': gr_dim,
            'open': [],
        }
        if excluded is not None:
            out['excluded'] = excluded
        return out

    twos = [s for s in entry.summands if isinstance(s, Vij)]
    chis = [s for s in entry.summands if isinstance(s, Chi)]
    fallback = lifting('prime-above-5', TRIVIAL) if prime and p > 5 else lifting('undetermined', OPEN)
    if not twos:
        return lifting('exterior', TRIVIAL, 'exterior')
    if len(twos) == 1:
        s, k = twos[0], chis[0].k
        pair, edge = (s.i, s.j), p * s.i - s.j
        if _mod(p, k * edge) == 0:
            return fallback
        if pair in sets.lambda3 and _mod(p, (k - 1) * edge) == 0:
            if k == 1:
                return lifting('lambda3-chi-one', OPEN, 'A21', EXCLUDED['A21'])
            return lifting('lambda3-chi', TRIVIAL)
        if pair in sets.lambda1 and _mod(p, (k + 1) * edge) == 0:
            return lifting('lambda1-chi', TRIVIAL)
        if pair in sets.lambda2 and _mod(p, (k - 1) * edge) == 0:
            return lifting('lambda2-chi', TRIVIAL if prime else OPEN)
        return fallback
    quadratic = [(s.i, s.j) in sets.lambda1 or (s.i, s.j) in sets.lambda2 - sets.lambda3 for s in twos]
    if all(quadratic):
        return lifting('quadratic-pair', TRIVIAL)
    return fallback


def _rewrite_certificate(ctx: ScalarContext, family: str, s: Vij, cap: int) -> Optional[dict]:
    """PBW dimensions of the presented liftings (mu = 0 and mu = 1 for deformed families)"""
    mus = (0,) if family == 'Bos' else (0, 1)
    dims = {}
    try:
        for mu in mus:
            lifting: Lifting = build_lifting(ctx, family, s.i, s.j, mu=mu)
            pres = lifting.presentation
            overlaps = overlaps_resolvable(pres, limit=1)
            if not overlaps['resolvable']:
                logger.warning(f"{pres.name}: unresolved overlap {overlaps['failures'][0]['word']}")
                return None
            dims[str(mu)] = dimension(pres, cap)
    except (CapExceeded, StepCapExceeded) as e:
        logger.info(f"{family}({s.i},{s.j}): rewriting stopped: {e}")
        return None
    return {'method': 'rewriting', 'family': family, 'pbw_dims': dims}


def hopf_entry(ctx: ScalarContext, sets: IndexSets, entry: ClassificationEntry, execute: bool,
               options: ReportOptions) -> dict:
    """Hopf algebras A with gr A = B(V)#H for one Nichols entry"""
    data = simple_lifting(ctx, sets, entry) if entry.simple else sum_lifting(ctx, sets, entry)
    data['object'] = entry.label
    data['summands'] = [s.to_dict() for s in entry.summands]
    data['source'] = SOURCES[data['reason']]
    data['evidence_level'] = entry.evidence_level if data['dim'] is not None else QUOTED
    data['certificate'] = None
    if entry.evidence_level == EXECUTED:
        data['certificate'] = {'method': 'nichols', 'nichols_dim': entry.dim}
    rewrite_family = {'quadratic-lambda1': 'Bos', 'quadratic-lambda2': 'Bos', 'lambda3': 'A3', 'lambda4': 'A4'}
    family = rewrite_family.get(data['reason'])
    if execute and options.liftings and family is not None and entry.simple:
        cap = options.nichols_cap * 4 * ctx.p
        certificate = _rewrite_certificate(ctx, family, entry.summands[0], cap)
        if certificate is not None:
            data['certificate'] = certificate
            data['evidence_level'] = EXECUTED
            if any(d != data['dim'] for d in certificate['pbw_dims'].values()):
                logger.warning(f"{data['algebra']}: PBW dims {certificate['pbw_dims']} against {data['dim']}")
                data['notes'] = ['PBW dimension differs from the expected dimension']
    return data


def large_prime_check(p: int, hopf: List[dict]) -> Optional[dict]:
    """For prime p > 5: every lifting is trivial, hence every A is basic"""
    if not (isprime(p) and p > 5):
        return None
    nontrivial = [h['algebra'] for h in hopf if h['lifting'] != TRIVIAL]
    return {'all_trivial': not nontrivial, 'all_basic': not nontrivial, 'exceptions': nontrivial}


def _sort_entries(entries: List[ClassificationEntry]) -> List[ClassificationEntry]:
    return sorted(entries, key=lambda e: (len(e.summands), [summand_key(s) for s in e.summands]))


def classification_report(ctx: ScalarContext, options: Optional[ReportOptions] = None) -> dict:
    """
    Assemble the classification report for the context's p.

    Args:
        ctx: scalar context fixing p
        options: ReportOptions; defaults execute certificates for p <= 3

    Returns:
        Report dict with index sets, congruence solutions, the finite Nichols
        algebras and the Hopf algebras over them; deterministic in (p, options)

    Raises:
        UnsupportedP: for composite p outside the supported list
    """
    p = ctx.p
    check_supported(p)
    options = options or ReportOptions()
    execute = options.executes(p)
    cap = options.nichols_cap
    logger.info(f"Classification report for p={p} (execute={execute}, cap={cap})")

    sets = lambda_sets(ctx)
    solved = solve_congruence_systems(ctx, sets)

    simple_verdicts, undetermined = _finite_simples(ctx, sets)
    entries = [nichols_entry(ctx, v, execute, cap) for v in simple_verdicts]
    if options.max_summands >= 2:
        pair_verdicts, more = _finite_pairs(ctx, [v.summands[0] for v in simple_verdicts])
        undetermined += more
        entries += [nichols_entry(ctx, v, execute, cap) for v in pair_verdicts]
    entries = _sort_entries(entries)
    logger.info(f"p={p}: {len(entries)} finite Nichols algebras, {len(undetermined)} undetermined")

    hopf = [hopf_entry(ctx, sets, e, execute, options) for e in entries]
    indecomposable = [h for h, e in zip(hopf, entries) if e.simple]
    semisimple = [h for h, e in zip(hopf, entries) if not e.simple]

    levels = {level: sum(1 for e in entries if e.evidence_level == level) for level in (EXECUTED, FORMULA, QUOTED)}
    open_flags = sorted({flag for h in hopf for flag in h['open']})
    return {
        'schema': config.REPORT_SCHEMA,
        'p': p,
        'scope': 'certified' if p in CERTIFIED_P else 'congruence',
        'options': options.to_dict(p),
        'index_sets': sets.to_dict(),
        'simple_modules': {'one_dim': 2 * p, 'two_dim': len(sets.lam)},
        'congruences': solved,
        'congruence_verdicts': cross_check_verdicts(ctx, solved),
        'nichols': [e.to_dict() for e in entries],
        'undetermined': [objects_label(v.summands) for v in undetermined],
        'hopf_classification': indecomposable,
        'hopf_semisimple': semisimple,
        'large_prime': large_prime_check(p, hopf),
        'evidence_levels': levels,
        'open_flags': {flag: OPEN_FLAGS[flag] for flag in open_flags},
        'notes': _notes(p),
    }


def _notes(p: int) -> List[str]:
    notes = ['objects with at most two simple summands are listed']
    if p % 2 == 1:
        notes.append('copies of K_chi^p braid trivially with the listed objects and may be added freely')
    return notes


def hopf_families(report: dict) -> Dict[str, List[str]]:
    """{reason: sorted objects} of the indecomposable Hopf classification"""
    out: Dict[str, List[str]] = {}
    for h in report['hopf_classification']:
        out.setdefault(h['reason'], []).append(h['object'])
    return {reason: sorted(objects) for reason, objects in sorted(out.items())}



def report_summary(report: dict) -> dict:
    """The structural part of a report kept in golden files"""
    families = hopf_families(report)
    return {
        'p': report['p'],
        'options': report['options'],
        'simple_modules': report['simple_modules'],
        'index_set_sizes': report['index_sets']['sizes'],
        'families': families,
        'family_sizes': {reason: len(objects) for reason, objects in families.items()},
        'undetermined': report['undetermined'],
    }
