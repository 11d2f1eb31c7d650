#!/usr/bin/env python3
"""
Command-line entry point.

    python main.py <group> <action> --p P [options]

Exit codes: 0 success, 1 verification failure or algebra error, 2 usage
error, 3 size or step cap exceeded.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import ujson

from classify import ReportOptions, classification_report
from hopf import (
    build_A, build_H, double_relations, drinfeld_double, dual, dual_iso_check, hopf_from_dict, hopf_to_dict,
    morphism_to_dict, subalgebra_inclusions, verify_hopf,
)
from nichols import catalogue_presentation, graded_dims, quad_criterion, quadratic_relations, verify_presentation
from reports import FORMATS, ReportGenerator
from rewrite import EXCLUDED, FAMILIES, build_lifting, dimension, hopf_check_presented, overlaps_resolvable
from scalar import ScalarContext, context_init, render
from utils.errors import AlgebraError, CapExceeded, StepCapExceeded, VerificationFailed
from utils.logging_setup import setup_logging
from ydmod import (
    Chi, Summand, Vij, braiding, braiding_report, dynkin_diagram, enumerate_simples, finiteness_verdict,
    make_module, make_two_dim, parse_summand, summands_label,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

Result = Tuple[dict, bool]


class UsageError(ValueError):
    """Flags are missing or inconsistent for the requested command"""


def require_p(args) -> ScalarContext:
    if args.p is None:
        raise UsageError("--p is required")
    return context_init(args.p)


def summands_from_args(args) -> List[Summand]:
    """
    --i --j gives V_{i,j}; --k --l adds V_{k,l}; --k alone adds K_chi^k;
    each --summand adds a parsed label such as 'V(1,3)' or 'chi3'.
    """
    summands: List[Summand] = []
    if (args.i is None) != (args.j is None):
        raise UsageError("--i and --j go together")
    if args.i is not None:
        summands.append(Vij(args.i, args.j))
    if args.l is not None and args.k is None:
        raise UsageError("--l needs --k")
    if args.k is not None:
        summands.append(Vij(args.k, args.l) if args.l is not None else Chi(args.k))
    summands.extend(parse_summand(text) for text in args.summand or [])
    if not summands:
        raise UsageError("no module given: use --i/--j, --k[/--l] or --summand")
    return summands


def matrix_entries(matrix) -> List[list]:
    return [[r, c, render(s)] for r, c, s in sorted(matrix.items(), key=lambda t: (t[0], t[1]))]


def _algebra(ctx: ScalarContext, which: str):
    if which == 'H':
        return build_H(ctx)
    if which == 'A':
        return build_A(ctx)
    if which == 'dual':
        return dual(build_H(ctx))
    return drinfeld_double(ctx)


# hopf

def hopf_build(args) -> Result:
    return hopf_to_dict(_algebra(require_p(args), args.algebra)), True


def hopf_verify(args) -> Result:
    if args.input:
        with open(args.input, 'r', encoding='utf-8') as f:
            h = hopf_from_dict(ujson.load(f))
    else:
        h = _algebra(require_p(args), args.algebra)
    report = verify_hopf(h)
    return report, report['passed']


def hopf_double(args) -> Result:
    ctx = require_p(args)
    d = drinfeld_double(ctx)
    relations = double_relations(d)
    inclusions = subalgebra_inclusions(ctx, d)
    verified = verify_hopf(d)
    report = {
        'algebra': d.name,
        'dim': d.dim,
        'relations': relations,
        'inclusions': inclusions,
        'checks': verified['checks'],
        'antipode_order': verified['antipode_order'],
        'passed': verified['passed'] and all(relations.values()) and all(r['passed'] for r in inclusions.values()),
    }
    return report, report['passed']


def hopf_dual(args) -> Result:
    ctx = require_p(args)
    phi = dual_iso_check(ctx)
    return {'p': ctx.p, 'dim': phi.source.dim, 'bijective': True, 'phi': morphism_to_dict(phi)}, True


# yd

def yd_make(args) -> Result:
    ctx = require_p(args)
    m = make_module(ctx, summands_from_args(args))
    report = m.verify()
    report['actions'] = {m.h.labels[g]: matrix_entries(m.matrix(g)) for g in m.h.generators}
    report['coaction'] = {
        m.labels[v]: [[m.h.labels[c], m.labels[u], render(s)] for (c, u), s in sorted(m.coaction[v].items())]
        for v in range(m.dim)
    }
    return report, report['passed']


def yd_braiding(args) -> Result:
    ctx = require_p(args)
    c = braiding(make_module(ctx, summands_from_args(args)), check=False)
    report = braiding_report(c)
    report['entries'] = matrix_entries(c.matrix)
    return report, report['braid_equation'] and report['invertible']


def yd_dynkin(args) -> Result:
    ctx = require_p(args)
    summands = summands_from_args(args)
    verdict = finiteness_verdict(ctx, summands)
    return {
        'object': summands_label(summands),
        'diagram': dynkin_diagram(ctx, summands).to_dict(),
        'verdict': verdict.to_dict(),
    }, True


def yd_census(args) -> Result:
    census = enumerate_simples(require_p(args))
    ok = census['relations_ok'] and census['pairwise_distinct'] and census['total'] == census['expected_total']
    return census, ok


# nichols

def nichols_dims(args) -> Result:
    ctx = require_p(args)
    summands = summands_from_args(args)
    m = make_module(ctx, summands)
    dims = graded_dims(braiding(m, check=False), args.cutoff, args.cap)
    return {'object': summands_label(summands), 'graded': dims.to_dict()}, True


def nichols_quad(args) -> Result:
    ctx = require_p(args)
    if args.i is None or args.j is None:
        raise UsageError("nichols quad needs --i and --j")
    criterion = quad_criterion(ctx, args.i, args.j)
    kernel = len(quadratic_relations(make_two_dim(ctx, args.i, args.j)))
    report = {
        'object': Vij(args.i, args.j).label(),
        'criterion': criterion,
        'quadratic_relations': kernel,
        'agrees': criterion == (kernel > 0),
    }
    return report, report['agrees']


def nichols_verify_presentation(args) -> Result:
    ctx = require_p(args)
    summands = summands_from_args(args)
    presentation = catalogue_presentation(ctx, summands)
    if presentation is None:
        raise VerificationFailed(f"no encoded presentation for {summands_label(summands)}")
    c = braiding(make_module(ctx, presentation.profile.summands), check=False)
    return verify_presentation(c, presentation, args.cutoff), True


# rewrite

def _lifting(args):
    ctx = require_p(args)
    return build_lifting(ctx, args.family, args.i, args.j, mu=args.mu, nu=args.nu)


def rewrite_dim(args) -> Result:
    lifting = _lifting(args)
    pres = lifting.presentation
    overlaps = overlaps_resolvable(pres, limit=1)
    dim = dimension(pres, args.cap) if overlaps['resolvable'] else None
    report = {
        'presentation': pres.name,
        'family': lifting.family,
        'params': {k: str(v) for k, v in sorted(lifting.params.items())},
        'resolvable': overlaps['resolvable'],
        'dim': dim,
        'claimed_dim': lifting.claimed_dim,
        'closure': lifting.closure.to_dict() if lifting.closure else None,
    }
    return report, dim is not None and dim == lifting.claimed_dim


def rewrite_overlaps(args) -> Result:
    report = overlaps_resolvable(_lifting(args).presentation)
    return report, report['resolvable']


def rewrite_hopf_check(args) -> Result:
    return hopf_check_presented(_lifting(args), args.cap), True


# classify

def classify_report(args) -> Result:
    ctx = require_p(args)
    options = ReportOptions(execute=args.execute, cap=args.cap, max_summands=args.max_summands,
                            liftings=args.liftings)
    return classification_report(ctx, options), True


COMMANDS: Dict[str, Dict[str, Callable]] = {
    'hopf': {'build': hopf_build, 'verify': hopf_verify, 'double': hopf_double, 'dual': hopf_dual},
    'yd': {'make': yd_make, 'braiding': yd_braiding, 'dynkin': yd_dynkin, 'census': yd_census},
    'nichols': {'dims': nichols_dims, 'quad': nichols_quad, 'verify-presentation': nichols_verify_presentation},
    'rewrite': {'dim': rewrite_dim, 'overlaps': rewrite_overlaps, 'hopf-check': rewrite_hopf_check},
    'classify': {'report': classify_report},
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--p', type=int, default=None, help="index p of H_{p,-1}")
    common.add_argument('--i', type=int, default=None)
    common.add_argument('--j', type=int, default=None)
    common.add_argument('--k', type=int, default=None, help="K_chi^k, or with --l the second V_{k,l}")
    common.add_argument('--l', type=int, default=None)
    common.add_argument('--summand', action='append', help="extra summand, e.g. 'V(1,3)' or 'chi3'")
    common.add_argument('--mu', default='0', help="lifting parameter, scalar text")
    common.add_argument('--nu', default='0', help="second lifting parameter, scalar text")
    common.add_argument('--cutoff', type=int, default=None)
    common.add_argument('--cap', type=int, default=None)
    common.add_argument('--format', choices=FORMATS, default='json')
    common.add_argument('--out', default=None, help="write the report to this file")
    common.add_argument('--log-level', default=None)

    parser = argparse.ArgumentParser(prog='main.py', description="Hopf algebras over H_{p,-1} and their Nichols algebras")
    groups = parser.add_subparsers(dest='group', required=True)
    for group, actions in COMMANDS.items():
        group_parser = groups.add_parser(group)
        action_parsers = group_parser.add_subparsers(dest='action', required=True)
        for action in actions:
            sub = action_parsers.add_parser(action, parents=[common])
            if group == 'hopf':
                sub.add_argument('--algebra', choices=('H', 'A', 'dual', 'D'), default='H')
                sub.add_argument('--input', default=None, help="Hopf algebra JSON to verify instead of building one")
            if group == 'rewrite':
                sub.add_argument('--family', choices=FAMILIES + tuple(EXCLUDED), required=True)
            if group == 'classify':
                sub.add_argument('--execute', action=argparse.BooleanOptionalAction, default=None,
                                 help="compute certificates (default: p <= 3)")
                sub.add_argument('--max-summands', type=int, choices=(1, 2), default=2)
                sub.add_argument('--liftings', action=argparse.BooleanOptionalAction, default=True)
    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run one command and print or write its report.

    Returns:
        Exit code; see the module docstring
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.log_level)
    generator = ReportGenerator()
    handler = COMMANDS[args.group][args.action]
    try:
        report, ok = handler(args)
        text = generator.emit(report, args.format, args.out)
        if not args.out:
            sys.stdout.write(text)
        if not ok:
            raise VerificationFailed(f"{args.group} {args.action}: checks failed")
        return EXIT_OK
    except UsageError as e:
        logger.error(f"Usage: {e}")
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, StepCapExceeded) as e:
        logger.error(f"Cap exceeded: {e}")
        return EXIT_CAP
    except AlgebraError as e:
        logger.error(f"{type(e).__name__}: {e}")
        if args.format == 'json' and not isinstance(e, VerificationFailed):
            sys.stdout.write(generator.render_json(e.to_dict()))
        return EXIT_FAILED
    except (ValueError, KeyError) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(cli_main())
