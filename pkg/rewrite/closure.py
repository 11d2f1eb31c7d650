"""
Bounded ambiguity closure.

Some printed rule sets leave out consequences of the relations. Each round
reduces every ambiguity both ways and adds the oriented difference as a new
rule; afterwards rules whose leading word became reducible are re-reduced.
The number of rounds is capped; a system that has not stabilized by then is
reported as such, never extended further.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import config
from rewrite.diamond import ambiguities, resolve
from rewrite.presentation import Presentation

logger = logging.getLogger(__name__)


@dataclass
class ClosureReport:
    presentation: str
    rounds: int
    stable: bool
    added: List[str] = field(default_factory=list)
    dropped: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            'presentation': self.presentation,
            'rounds': self.rounds,
            'stable': self.stable,
            'added_rules': list(self.added),
            'dropped_rules': list(self.dropped),
        }


def _interreduce(pres: Presentation, report: ClosureReport):
    """Re-reduce rules whose leading word contains another leading word"""
    changed = True
    while changed:
        changed = False
        for lhs in sorted(pres.rules, key=pres.order.key, reverse=True):
            others = [w for w in pres.rules if w != lhs]
            if not any(lhs[k:k + len(w)] == w for w in others for k in range(len(lhs) - len(w) + 1)):
                continue
            rule = pres.remove_rule(lhs)
            relation = dict(rule.rhs)
            relation[lhs] = -pres.ctx.one
            new = pres.orient(pres.normal_form(relation))
            report.dropped.append(rule.name)
            if new is not None:
                pres.add_rule(rule.name + "'", *new)
                report.added.append(pres.rule_text(pres.rules[new[0]]))
            changed = True
            break
    pres.tail_reduce()


def close_ambiguities(pres: Presentation, rounds: Optional[int] = None) -> ClosureReport:
    """
    Add oriented consequences of unresolved ambiguities, in place.

    Args:
        pres: presentation to extend
        rounds: round cap, CLOSURE_ROUNDS by default

    Returns:
        ClosureReport; stable is True when the last round found nothing to add
    """
    rounds = rounds or config.CLOSURE_ROUNDS
    report = ClosureReport(pres.name, 0, False)
    for round_no in range(1, rounds + 1):
        report.rounds = round_no
        found = 0
        for amb in list(ambiguities(pres)):
            diff = pres.normal_form(resolve(pres, amb))
            new = pres.orient(diff)
            if new is None:
                continue
            found += 1
            name = f'{amb.rules[0]}*{amb.rules[1]}'
            pres.add_rule(name, *new)
            report.added.append(pres.rule_text(pres.rules[new[0]]))
        if not found:
            report.stable = True
            break
        logger.warning(f"{pres.name}: closure round {round_no} added {found} rules")
        _interreduce(pres, report)
    if not report.stable:
        logger.warning(f"{pres.name}: not stable after {report.rounds} closure rounds")
    return report
