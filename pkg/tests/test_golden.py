#!/usr/bin/env python3
"""
Test the classification reports against the golden summaries
"""

import unittest
import sys
import os

import ujson

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from classify import ReportOptions, classification_report, report_summary
from scalar import context_init
import config

GOLDEN_P = (2, 3, 4, 5, 7)


def load_golden(p):
    with open(os.path.join(config.GOLDEN_DIR, f'p{p}.json'), encoding='utf-8') as f:
        return ujson.load(f)


class TestGoldenSummaries(unittest.TestCase):
    """Test report summaries for p in 2..5 and 7 against the stored files"""

    def test_golden(self):
        """Test simple-module counts, index-set sizes and the recorded families"""
        for p in GOLDEN_P:
            with self.subTest(p=p):
                golden = load_golden(p)
                options = ReportOptions(**golden['options'])
                summary = report_summary(classification_report(context_init(p), options))
                self.assertEqual(summary['p'], golden['p'])
                self.assertEqual(summary['simple_modules'], golden['simple_modules'])
                self.assertEqual(summary['index_set_sizes'], golden['index_set_sizes'])
                for reason, objects in golden['families'].items():
                    self.assertEqual(summary['families'].get(reason), objects, reason)
                for reason, size in golden['family_sizes'].items():
                    self.assertEqual(summary['family_sizes'].get(reason), size, reason)

    def test_simple_module_total(self):
        """Test 2p one-dimensional plus 4p^2 - 2p two-dimensional simples"""
        for p in GOLDEN_P:
            with self.subTest(p=p):
                modules = load_golden(p)['simple_modules']
                self.assertEqual(modules['one_dim'] + modules['two_dim'], 4 * p * p)


if __name__ == '__main__':
    unittest.main()
