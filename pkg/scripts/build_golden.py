#!/usr/bin/env python3
"""
Golden File Builder
Regenerates tests/data/golden/p<P>.json from the classification reports
"""

import os
import sys
import argparse
import logging

import ujson

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from classify import ReportOptions, classification_report, report_summary
from scalar import context_init
from utils.logging_setup import setup_logging
import config

logger = logging.getLogger(__name__)

GOLDEN_P = (2, 3, 4, 5, 7)


def build_golden(p: int, out_dir: str) -> str:
    """Write the summary of the quick (formula-level, simple objects) report for p"""
    options = ReportOptions(execute=False, max_summands=1, liftings=False)
    summary = report_summary(classification_report(context_init(p), options))
    summary['options'] = {k: v for k, v in summary['options'].items() if k != 'cap'}
    summary.pop('undetermined')
    path = os.path.join(out_dir, f'p{p}.json')
    with open(path, 'w', encoding='utf-8') as f:
        f.write(ujson.dumps(summary, sort_keys=True, indent=2) + '\n')
    logger.info(f"p={p}: {sum(summary['family_sizes'].values())} objects written to {path}")
    return path


def main():
    parser = argparse.ArgumentParser(description="Regenerate the golden classification summaries")
    parser.add_argument('--p', type=int, action='append', help="p to rebuild; default 2, 3, 4, 5 and 7")
    parser.add_argument('--out-dir', default=config.GOLDEN_DIR)
    args = parser.parse_args()

    setup_logging()
    os.makedirs(args.out_dir, exist_ok=True)
    for p in args.p or GOLDEN_P:
        build_golden(p, args.out_dir)
    print(f"Golden files written to {args.out_dir}")


if __name__ == "__main__":
    main()
