#!/usr/bin/env python3
"""
Classification Pipeline Runner
Certifies everything for one p in order: Hopf algebras → simples and braidings →
Nichols algebras → liftings → classification report
"""

import os
import sys
import argparse
import logging
from datetime import datetime
from typing import Dict, List, Optional

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from classify import ReportOptions, classification_report, lambda_sets
from hopf import build_A, build_H, double_relations, drinfeld_double, dual_iso_check, verify_hopf
from nichols import quadratic_presentation, verify_presentation
from reports import ReportGenerator
from rewrite import build_lifting, dimension, overlaps_resolvable
from scalar import context_init
from utils.errors import AlgebraError
from utils.logging_setup import setup_logging
from ydmod import Chi, Vij, braiding, braiding_report, enumerate_simples, make_simple
import config

logger = logging.getLogger(__name__)

DOUBLE_MAX_P = 3
LIFTING_MUS = (0, 1)


class ClassificationPipeline:
    """
    Runs the certification steps for one p and keeps a record of each
    """

    def __init__(self, p: int, options: Optional[ReportOptions] = None, out_path: Optional[str] = None):
        self.ctx = context_init(p)
        self.p = p
        self.options = options or ReportOptions()
        self.out_path = out_path or os.path.join(config.OUTPUT_DIR, f'classification_p{p}.json')
        self.generator = ReportGenerator()
        self.sets = lambda_sets(self.ctx)
        self.status: Dict[str, dict] = {}
        self.report: Optional[dict] = None

    def run_hopf(self) -> bool:
        """Verify H, A, the duality map and, for small p, the double"""
        try:
            logger.info("Building and verifying H and A...")
            record = {}
            for h in (build_H(self.ctx), build_A(self.ctx)):
                report = verify_hopf(h)
                record[h.name] = {'passed': report['passed'], 'antipode_order': report['antipode_order']}

            dual_iso_check(self.ctx)
            record['dual_iso'] = True

            if self.p <= DOUBLE_MAX_P:
                d = drinfeld_double(self.ctx)
                relations = double_relations(d)
                record['double'] = {
                    'dim': d.dim,
                    'relations': all(relations.values()),
                    'passed': verify_hopf(d)['passed'],
                }

            ok = all(v['passed'] for k, v in record.items() if isinstance(v, dict))
            ok = ok and record.get('double', {}).get('relations', True)
            self.status['hopf'] = {'ok': ok, **record}
            if ok:
                logger.info("Hopf algebra checks completed successfully")
            else:
                logger.error(f"Hopf algebra checks failed: {record}")
            return ok

        except AlgebraError as e:
            logger.error(f"Hopf algebra checks failed with error: {e}")
            self.status['hopf'] = {'ok': False, 'error': e.to_dict()}
            return False

    def run_census(self) -> bool:
        """Construct every simple module and check every braiding"""
        try:
            logger.info("Running simple-module census...")
            census = enumerate_simples(self.ctx)

            summands = [Chi(k) for k in range(2 * self.p)] + [Vij(i, j) for i, j in sorted(self.sets.lam)]
            failing = []
            for s in summands:
                report = braiding_report(braiding(make_simple(self.ctx, s), check=False))
                if not (report['braid_equation'] and report['invertible']):
                    failing.append(s.label())

            ok = census['relations_ok'] and census['pairwise_distinct'] and not failing
            ok = ok and census['total'] == census['expected_total']
            self.status['census'] = {
                'ok': ok,
                'one_dim': census['one_dim'],
                'two_dim': census['two_dim'],
                'braidings_checked': len(summands),
                'braidings_failing': failing,
            }
            logger.info(f"Census: {census['total']} simples, {len(failing)} failing braidings")
            return ok

        except AlgebraError as e:
            logger.error(f"Census failed with error: {e}")
            self.status['census'] = {'ok': False, 'error': e.to_dict()}
            return False

    def run_nichols(self) -> bool:
        """Verify the quadratic presentations of B(V_{i,j})"""
        if not self.options.executes(self.p):
            logger.info("Nichols certificates skipped (dimensions by formula)")
            self.status['nichols'] = {'ok': True, 'skipped': True}
            return True
        try:
            logger.info("Verifying quadratic Nichols presentations...")
            verified: List[dict] = []
            for i, j in sorted(self.sets.quadratic):
                presentation = quadratic_presentation(self.ctx, i, j)
                c = braiding(make_simple(self.ctx, Vij(i, j)), check=False)
                report = verify_presentation(c, presentation)
                verified.append({'object': Vij(i, j).label(), 'total': report['total']})
                logger.debug(f"V_{{{i},{j}}}: {report['dims']}")
            self.status['nichols'] = {'ok': True, 'verified': verified}
            logger.info(f"Nichols presentations verified: {len(verified)}")
            return True

        except AlgebraError as e:
            logger.error(f"Nichols verification failed with error: {e}")
            self.status['nichols'] = {'ok': False, 'error': e.to_dict()}
            return False

    def run_liftings(self) -> bool:
        """Resolve overlaps and count PBW words of the presented liftings"""
        if not (self.options.executes(self.p) and self.options.liftings):
            logger.info("Lifting checks skipped")
            self.status['liftings'] = {'ok': True, 'skipped': True}
            return True
        try:
            logger.info("Checking lifting presentations...")
            cap = self.options.nichols_cap * 4 * self.p
            instances = [('H', None, None, 0)]
            instances += [('A3', i, j, mu) for i, j in sorted(self.sets.lambda3) for mu in LIFTING_MUS]
            results = []
            for family, i, j, mu in instances:
                lifting = build_lifting(self.ctx, family, i, j, mu=mu)
                pres = lifting.presentation
                resolvable = overlaps_resolvable(pres, limit=1)['resolvable']
                dim = dimension(pres, cap) if resolvable else None
                results.append({
                    'presentation': pres.name,
                    'resolvable': resolvable,
                    'dim': dim,
                    'claimed_dim': lifting.claimed_dim,
                })
            ok = all(r['resolvable'] and r['dim'] == r['claimed_dim'] for r in results)
            self.status['liftings'] = {'ok': ok, 'checked': results}
            logger.info(f"Lifting presentations checked: {len(results)}")
            return ok

        except AlgebraError as e:
            logger.error(f"Lifting checks failed with error: {e}")
            self.status['liftings'] = {'ok': False, 'error': e.to_dict()}
            return False

    def run_report(self) -> bool:
        """Assemble the classification report and write it as JSON"""
        try:
            logger.info("Assembling classification report...")
            self.report = classification_report(self.ctx, self.options)
            self.generator.emit(self.report, 'json', self.out_path)
            self.status['report'] = {
                'ok': True,
                'path': self.out_path,
                'nichols': len(self.report['nichols']),
                'hopf': len(self.report['hopf_classification']) + len(self.report['hopf_semisimple']),
            }
            return True

        except (AlgebraError, OSError) as e:
            logger.error(f"Report step failed with error: {e}")
            self.status['report'] = {'ok': False, 'error': str(e)}
            return False

    def run_pipeline(self) -> bool:
        """Run every step, stopping at the first failure"""
        steps = [
            ("Hopf algebras", self.run_hopf),
            ("Simple modules and braidings", self.run_census),
            ("Nichols algebras", self.run_nichols),
            ("Liftings", self.run_liftings),
            ("Classification report", self.run_report),
        ]
        logger.info("=" * 60)
        logger.info(f"Starting classification pipeline for p={self.p}")
        logger.info("=" * 60)

        start_time = datetime.now()
        for k, (name, step) in enumerate(steps, 1):
            logger.info(f"Step {k}/{len(steps)}: {name}")
            if not step():
                logger.error(f"Pipeline failed at {name} step")
                return False

        logger.info("=" * 60)
        logger.info("Classification pipeline completed successfully!")
        logger.info(f"Total Duration: {datetime.now() - start_time}")
        logger.info("=" * 60)
        return True

    def get_pipeline_status(self) -> Dict:
        """Per-step record of the last run"""
        return {'p': self.p, 'steps': dict(self.status)}


def main(argv=None):
    """Main entry point for the pipeline"""
    parser = argparse.ArgumentParser(description="Run the certification pipeline for one p")
    parser.add_argument('--p', type=int, required=True)
    parser.add_argument('--cap', type=int, default=None, help="largest Nichols total computed")
    parser.add_argument('--out', default=None, help="report file")
    parser.add_argument('--log-level', default=None)
    args = parser.parse_args(argv)

    setup_logging(args.log_level)
    pipeline = ClassificationPipeline(args.p, ReportOptions(cap=args.cap), args.out)
    success = pipeline.run_pipeline()
    status = pipeline.get_pipeline_status()

    if success:
        report = status['steps']['report']
        census = status['steps']['census']
        print(f"\nPipeline completed for p={args.p}")
        print(f"Simples: {census['one_dim']} one-dimensional, {census['two_dim']} two-dimensional")
        print(f"Finite Nichols algebras: {report['nichols']}, Hopf algebras: {report['hopf']}")
        print(f"Report: {report['path']}")
    else:
        print("\nPipeline failed!")
        sys.exit(1)


if __name__ == "__main__":
    main()
