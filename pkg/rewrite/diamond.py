"""
Ambiguity checks and PBW enumeration for a rewriting system.

When every overlap and inclusion ambiguity reduces to one normal form the
irreducible words are a basis of the presented algebra, so dimension counts
reduce to a breadth-first walk over words that avoid every leading word.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

import config
from exactla import vec_add_term, vec_sub
from rewrite.order import Word
from rewrite.presentation import LinComb, Presentation, Rule
from utils.errors import CapExceeded, StepCapExceeded

logger = logging.getLogger(__name__)


@dataclass
class Ambiguity:
    """A word with two different first rewritings"""
    kind: str
    word: Word
    left: LinComb
    right: LinComb
    rules: Tuple[str, str]


@dataclass
class PBWBasis:
    words: List[Word]
    finite: bool
    letters: List[str] = field(default_factory=list)

    def __len__(self):
        return len(self.words)

    def to_dict(self) -> dict:
        return {
            'size': len(self.words),
            'finite': self.finite,
            'words': [''.join(self.letters[k] for k in w) or '1' for w in self.words],
        }


def _rewrite_at(word: Word, pos: int, rule: Rule) -> LinComb:
    out: LinComb = {}
    prefix, suffix = word[:pos], word[pos + len(rule.lhs):]
    for w, s in rule.rhs.items():
        vec_add_term(out, prefix + w + suffix, s)
    return out


def ambiguities(pres: Presentation) -> Iterator[Ambiguity]:
    """
    Every overlap l1 = uv, l2 = vw (v nonempty) and every inclusion l1 = u l2 w.

    Yields the ambiguous word with its two one-step rewritings.
    """
    rules = sorted(pres.rules.values(), key=lambda r: pres.order.key(r.lhs))
    for r1 in rules:
        l1 = r1.lhs
        for r2 in rules:
            l2 = r2.lhs
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    word = l1 + l2[k:]
                    yield Ambiguity('overlap', word, _rewrite_at(word, 0, r1),
                                    _rewrite_at(word, len(l1) - k, r2), (r1.name, r2.name))
            if r1 is not r2 and len(l2) <= len(l1):
                for pos in range(len(l1) - len(l2) + 1):
                    if l1[pos:pos + len(l2)] == l2:
                        yield Ambiguity('inclusion', l1, _rewrite_at(l1, 0, r1),
                                        _rewrite_at(l1, pos, r2), (r1.name, r2.name))


def resolve(pres: Presentation, amb: Ambiguity) -> LinComb:
    """Normal form of the difference of the two rewritings; empty when resolvable"""
    return vec_sub(pres.normal_form(amb.left), pres.normal_form(amb.right))


def overlaps_resolvable(pres: Presentation, limit: Optional[int] = None) -> dict:
    """
    Reduce every ambiguity both ways.

    Args:
        pres: the rewriting system
        limit: stop collecting failures after this many

    Returns:
        Report with the ambiguity count and, per failure, the word and both
        normal forms

    Raises:
        StepCapExceeded: when a reduction does not terminate within the cap
    """
    total = 0
    failures = []
    for amb in ambiguities(pres):
        total += 1
        left = pres.normal_form(amb.left)
        right = pres.normal_form(amb.right)
        if vec_sub(left, right):
            failures.append({
                'kind': amb.kind,
                'word': pres.order.text(amb.word),
                'rules': list(amb.rules),
                'left': pres.render(left),
                'right': pres.render(right),
            })
            if limit is not None and len(failures) >= limit:
                break
    logger.info(f"{pres.name}: {total} ambiguities, {len(failures)} unresolved")
    return {
        'presentation': pres.name,
        'ambiguities': total,
        'resolvable': not failures,
        'failures': failures,
    }


def irreducible_words(pres: Presentation, cap: Optional[int] = None) -> PBWBasis:
    """
    Breadth-first enumeration of the words avoiding every leading word.

    A word extends an irreducible word by one letter, so only the suffixes of
    the new word need checking.

    Raises:
        CapExceeded: when more than cap words appear before a length with none
    """
    cap = cap or config.WORD_CAP
    lengths = sorted({len(w) for w in pres.rules})
    letters = range(len(pres.order))
    words: List[Word] = [()]
    level: List[Word] = [()]
    while level:
        nxt = []
        for w in level:
            for g in letters:
                cand = w + (g,)
                if any(cand[-n:] in pres.rules for n in lengths if n <= len(cand)):
                    continue
                nxt.append(cand)
        words.extend(nxt)
        if len(words) > cap:
            raise CapExceeded(f'irreducible words of {pres.name}', len(words), cap)
        level = nxt
    logger.debug(f"{pres.name}: {len(words)} irreducible words")
    return PBWBasis(sorted(words, key=lambda w: (len(w), pres.order.key(w))), True,
                    [letter.name for letter in pres.order.letters])


def dimension(pres: Presentation, cap: Optional[int] = None) -> int:
    """Number of irreducible words; meaningful once overlaps_resolvable passes"""
    return len(irreducible_words(pres, cap))


def random_normal_form(pres: Presentation, element, rng: random.Random) -> LinComb:
    """
    Normal form reached by rewriting a random reducible factor of a random
    pending word at every step.

    Raises:
        StepCapExceeded: after the presentation's step cap
    """
    pending: LinComb = {element: pres.ctx.one} if isinstance(element, tuple) else dict(element)
    out: LinComb = {}
    steps = 0
    while pending:
        word = rng.choice(sorted(pending))
        coeff = pending.pop(word)
        hits = [(pos, pres.rules[word[pos:pos + n]])
                for pos in range(len(word)) for n in range(1, len(word) - pos + 1)
                if word[pos:pos + n] in pres.rules]
        if not hits:
            vec_add_term(out, word, coeff)
            continue
        steps += 1
        if steps > pres.step_cap:
            raise StepCapExceeded(f"{pres.name}: random reduction exceeded {pres.step_cap} steps")
        pos, rule = rng.choice(hits)
        for w, s in _rewrite_at(word, pos, rule).items():
            vec_add_term(pending, w, coeff * s)
    return out
