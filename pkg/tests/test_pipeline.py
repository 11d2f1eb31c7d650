#!/usr/bin/env python3
"""
Test the classification pipeline
Runs every step for p = 2 and checks the per-step records and the written report
"""

import unittest
import sys
import os
import tempfile

import ujson

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from classify import ReportOptions
from pipeline.run_classification import ClassificationPipeline


class TestClassificationPipeline(unittest.TestCase):
    """Test ClassificationPipeline end to end"""

    def setUp(self):
        """Set up a temporary output directory"""
        self.tmp = tempfile.TemporaryDirectory()
        self.out_path = os.path.join(self.tmp.name, 'reports', 'p2.json')

    def tearDown(self):
        """Clean up the output directory"""
        self.tmp.cleanup()

    def test_full_run(self):
        """Test every step succeeds at p = 2 and the report is written"""
        pipeline = ClassificationPipeline(2, out_path=self.out_path)
        self.assertTrue(pipeline.run_pipeline())

        steps = pipeline.get_pipeline_status()['steps']
        self.assertEqual(sorted(steps), ['census', 'hopf', 'liftings', 'nichols', 'report'])
        self.assertTrue(all(step['ok'] for step in steps.values()))
        self.assertEqual(steps['hopf']['double']['dim'], 64)
        self.assertEqual((steps['census']['one_dim'], steps['census']['two_dim']), (4, 12))
        self.assertEqual(steps['census']['braidings_failing'], [])
        self.assertEqual(len(steps['nichols']['verified']), 4)
        dims = sorted(r['dim'] for r in steps['liftings']['checked'])
        self.assertEqual(dims, [8, 64, 64, 64, 64])

        with open(self.out_path, encoding='utf-8') as f:
            report = ujson.load(f)
        self.assertEqual(report['p'], 2)
        self.assertEqual(report['simple_modules'], {'one_dim': 4, 'two_dim': 12})

    def test_formula_level_run(self):
        """Test certificates and liftings are skipped when execution is off"""
        options = ReportOptions(execute=False, max_summands=1)
        pipeline = ClassificationPipeline(2, options, self.out_path)
        self.assertTrue(pipeline.run_nichols())
        self.assertTrue(pipeline.run_liftings())
        self.assertTrue(pipeline.run_report())
        steps = pipeline.get_pipeline_status()['steps']
        self.assertTrue(steps['nichols']['skipped'])
        self.assertTrue(steps['liftings']['skipped'])
        self.assertEqual(steps['report']['path'], self.out_path)


if __name__ == '__main__':
    unittest.main()
