"""Index sets, congruence systems and classification reports over H_{p,-1}"""

from classify.index_sets import IndexSets, lambda_sets
from classify.congruences import (
    PAIR, SIMPLE, SYSTEMS, WITH_CHI, CongruenceSystem, Reading, accepted_solutions, cross_check_verdicts,
    solve_congruence_systems, solve_system, system_by_name,
)
from classify.report import (
    CERTIFIED_P, DEFORMED, EXECUTED, FORMULA, OPEN, QUOTED, TRIVIAL, ClassificationEntry, ReportOptions,
    check_supported, classification_report, hopf_families, nichols_entry, report_summary, simple_lifting, sum_lifting,
    large_prime_check, order_numbers,
)

__all__ = [
    'IndexSets', 'lambda_sets',
    'PAIR', 'SIMPLE', 'SYSTEMS', 'WITH_CHI', 'CongruenceSystem', 'Reading', 'accepted_solutions',
    'cross_check_verdicts', 'solve_congruence_systems', 'solve_system', 'system_by_name',
    'CERTIFIED_P', 'DEFORMED', 'EXECUTED', 'FORMULA', 'OPEN', 'QUOTED', 'TRIVIAL', 'ClassificationEntry',
    'ReportOptions', 'check_supported', 'classification_report', 'hopf_families', 'nichols_entry', 'report_summary',
    'simple_lifting', 'sum_lifting', 'large_prime_check', 'order_numbers',
]
