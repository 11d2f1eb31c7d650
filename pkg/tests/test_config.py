#!/usr/bin/env python3
"""
Test the defaults loader and the logging setup
"""

import unittest
import sys
import os
import logging
import tempfile

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import config
from utils.logging_setup import LOG_FORMAT, setup_logging


class TestDefaults(unittest.TestCase):
    """Test load_defaults and the shipped defaults file"""

    def write(self, tmp, text):
        path = os.path.join(tmp, 'defaults.yaml')
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def test_reads_caps(self):
        """Test a temporary YAML file is read as a mapping"""
        with tempfile.TemporaryDirectory() as tmp:
            data = config.load_defaults(self.write(tmp, "caps:\n  word_cap: 12\n"))
        self.assertEqual(data, {'caps': {'word_cap': 12}})

    def test_missing_file(self):
        """Test a missing file gives an empty mapping"""
        with tempfile.TemporaryDirectory() as tmp:
            self.assertEqual(config.load_defaults(os.path.join(tmp, 'absent.yaml')), {})

    def test_malformed_file(self):
        """Test a non-mapping or unparsable file gives an empty mapping"""
        with tempfile.TemporaryDirectory() as tmp:
            self.assertEqual(config.load_defaults(self.write(tmp, "- just\n- a list\n")), {})
            self.assertEqual(config.load_defaults(self.write(tmp, "caps: [unclosed\n")), {})

    def test_shipped_defaults(self):
        """Test the shipped file supplies the caps and the literal lists"""
        self.assertEqual(config.SUPPORTED_COMPOSITE_P, (4,))
        self.assertEqual(config.REPORT_SCHEMA, 1)
        self.assertEqual(sorted(config.LITERAL_SIMPLES), [4, 5])
        self.assertGreater(config.WORD_CAP, 0)
        self.assertIn('rank1/exterior', config.PROVENANCE)


class TestLoggingSetup(unittest.TestCase):
    """Test setup_logging"""

    def test_level_and_file(self):
        """Test the level is applied and the file handler gets the plain format"""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'run.log')
            setup_logging('WARNING', path)
            root = logging.getLogger()
            self.assertEqual(root.level, logging.WARNING)
            file_handlers = [h for h in root.handlers if isinstance(h, logging.FileHandler)]
            self.assertEqual(len(file_handlers), 1)
            self.assertEqual(file_handlers[0].formatter._fmt, LOG_FORMAT)
            logging.getLogger('hopf').warning('written')
            file_handlers[0].flush()
            with open(path, encoding='utf-8') as f:
                self.assertIn('WARNING', f.read())
            for h in file_handlers:
                root.removeHandler(h)
                h.close()


if __name__ == '__main__':
    unittest.main()
