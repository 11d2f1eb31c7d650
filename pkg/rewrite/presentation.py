"""
Presented algebras as oriented rewriting systems.

Relations are linear combinations of words; each one is reduced by the rules
already present and then oriented at its largest word. normal_form always
rewrites the leftmost reducible factor (the longest rule that starts there),
processing the largest pending word first so that cancellations happen
before further rewriting.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import config
from exactla import vec_add_term
from rewrite.order import Letter, Word, WordOrder
from scalar import ScalarContext, ThetaScalar, context_init, parse, render
from utils.errors import StepCapExceeded

logger = logging.getLogger(__name__)

LinComb = Dict[Word, ThetaScalar]


@dataclass
class Rule:
    name: str
    lhs: Word
    rhs: LinComb


class Presentation:
    """
    Generators, an order and oriented rules.

    Args:
        ctx: scalar context
        name: display name
        letters: the generators, in any order; the order is fixed by their keys
        step_cap: reductions allowed per normal form
    """

    def __init__(self, ctx: ScalarContext, name: str, letters: Sequence[Letter],
                 step_cap: Optional[int] = None):
        self.ctx = ctx
        self.name = name
        self.order = WordOrder(letters)
        self.step_cap = step_cap or config.STEP_CAP
        self.rules: Dict[Word, Rule] = {}
        self.relations: List[Tuple[str, LinComb]] = []
        self._lengths: List[int] = []

    def __repr__(self):
        return f"Presentation({self.name}, {len(self.order)} letters, {len(self.rules)} rules)"

    # building

    def word(self, text: str) -> Word:
        return self.order.word(text)

    def combo(self, terms: Sequence[Tuple[Union[int, ThetaScalar], str]]) -> LinComb:
        """[(coefficient, 'word'), ...] -> linear combination, zero terms dropped"""
        out: LinComb = {}
        for coeff, text in terms:
            s = coeff if isinstance(coeff, ThetaScalar) else self.ctx.from_int(coeff)
            vec_add_term(out, self.word(text), s)
        return out

    def add_rule(self, name: str, lhs: Word, rhs: LinComb):
        """
        Install lhs -> rhs.

        Raises:
            ValueError: when a word of rhs is not smaller than lhs, or lhs already has a rule
        """
        if lhs in self.rules:
            raise ValueError(f"{self.name}: second rule for {self.order.text(lhs)}")
        key = self.order.key(lhs)
        for w in rhs:
            if not self.order.key(w) < key:
                raise ValueError(f"{self.name}: rule {name} does not decrease: "
                                 f"{self.order.text(w)} >= {self.order.text(lhs)}")
        self.rules[lhs] = Rule(name, lhs, dict(rhs))
        self._lengths = sorted({len(w) for w in self.rules}, reverse=True)

    def remove_rule(self, lhs: Word) -> Rule:
        rule = self.rules.pop(lhs)
        self._lengths = sorted({len(w) for w in self.rules}, reverse=True)
        return rule

    def orient(self, combo: LinComb) -> Optional[Tuple[Word, LinComb]]:
        """Leading word and the rewriting of it, or None for the zero combination"""
        if not combo:
            return None
        lead = self.order.leading(combo)
        scale = -combo[lead].inverse()
        return lead, {w: s * scale for w, s in combo.items() if w != lead}

    def add_relation(self, name: str, combo: LinComb) -> Optional[Rule]:
        """
        Reduce a relation by the current rules and orient what is left.

        Returns:
            The new rule, or None when the relation already reduces to zero
        """
        self.relations.append((name, dict(combo)))
        oriented = self.orient(self.normal_form(combo))
        if oriented is None:
            logger.debug(f"{self.name}: relation {name} is a consequence of earlier rules")
            return None
        lhs, rhs = oriented
        self.add_rule(name, lhs, rhs)
        return self.rules[lhs]

    # rewriting

    def find_reducible(self, word: Word) -> Optional[Tuple[int, Rule]]:
        """Leftmost position holding a rule's leading word, longest rule first"""
        n = len(word)
        for pos in range(n):
            for length in self._lengths:
                if pos + length <= n:
                    rule = self.rules.get(word[pos:pos + length])
                    if rule is not None:
                        return pos, rule
        return None

    def is_irreducible(self, word: Word) -> bool:
        return self.find_reducible(word) is None

    def normal_form(self, element: Union[Word, LinComb]) -> LinComb:
        """
        Irreducible form of a word or a linear combination of words.

        Raises:
            StepCapExceeded: after step_cap rewriting steps
        """
        pending: LinComb = {element: self.ctx.one} if isinstance(element, tuple) else dict(element)
        out: LinComb = {}
        steps = 0
        while pending:
            word = self.order.leading(pending)
            coeff = pending.pop(word)
            hit = self.find_reducible(word)
            if hit is None:
                vec_add_term(out, word, coeff)
                continue
            steps += 1
            if steps > self.step_cap:
                raise StepCapExceeded(f"{self.name}: no normal form within {self.step_cap} steps",
                                      word=self.order.text(word), pending=len(pending))
            pos, rule = hit
            prefix, suffix = word[:pos], word[pos + len(rule.lhs):]
            for w, s in rule.rhs.items():
                vec_add_term(pending, prefix + w + suffix, coeff * s)
        return out

    def multiply(self, u: LinComb, v: LinComb) -> LinComb:
        prod: LinComb = {}
        for w1, s in u.items():
            for w2, t in v.items():
                vec_add_term(prod, w1 + w2, s * t)
        return self.normal_form(prod)

    def tail_reduce(self):
        """Bring every right-hand side to normal form"""
        for rule in self.rules.values():
            rule.rhs = self.normal_form(rule.rhs)

    # printing and serialization

    def render(self, combo: LinComb) -> str:
        if not combo:
            return '0'
        items = sorted(combo.items(), key=lambda kv: self.order.key(kv[0]), reverse=True)
        return ' + '.join(f"({render(s)})*{self.order.text(w)}" for w, s in items)

    def rule_text(self, rule: Rule) -> str:
        return f"{self.order.text(rule.lhs)} -> {self.render(rule.rhs)}"

    def to_dict(self) -> dict:
        rules = sorted(self.rules.values(), key=lambda r: self.order.key(r.lhs))
        return {
            'name': self.name,
            'p': self.ctx.p,
            'letters': self.order.to_dict(),
            'rules': [{
                'name': r.name,
                'lhs': self.order.text(r.lhs),
                'rhs': {self.order.text(w): render(s) for w, s in sorted(r.rhs.items())},
            } for r in rules],
        }


def presentation_from_dict(data: dict) -> Presentation:
    """Inverse of Presentation.to_dict"""
    ctx = context_init(int(data['p']))
    letters = [Letter(d['name'], d['weight'], d['potential'], d['rank'],
                      tuple(d['expands']) if d.get('expands') else None) for d in data['letters']]
    pres = Presentation(ctx, data['name'], letters)
    for entry in data['rules']:
        rhs = {pres.word(w): parse(ctx, s) for w, s in entry['rhs'].items()}
        pres.add_rule(entry['name'], pres.word(entry['lhs']), rhs)
    return pres
