"""
Monomial order on words over a finite alphabet.

A word is a tuple of letter indices. Letters of weight 0 (the group part
a, b) may sit anywhere; the letters of positive weight form the skeleton of
the word. Words are compared by

    (total weight, total potential, skeleton ranks, group segment lengths,
     group letter ranks)

which is compatible with concatenation and well-founded: within one total
weight there are finitely many skeletons, and segment lengths are compared
lexicographically on tuples of a fixed length.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Letter:
    """
    One generator of a presentation.

    Attributes:
        name: single character used when words are printed or parsed
        weight: filtration degree; 0 for group-like and skew-primitive letters of H
        potential: second comparison key; a y-type letter outranks any number of x's
        rank: position among the letters of the same weight class
        expands: for a composite generator (z := xy), the letters it stands for
    """
    name: str
    weight: int = 1
    potential: int = 0
    rank: int = 0
    expands: Optional[Tuple[str, ...]] = None

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'weight': self.weight,
            'potential': self.potential,
            'rank': self.rank,
            'expands': ''.join(self.expands) if self.expands else None,
        }


class WordOrder:
    """Order key and printing for words over a fixed alphabet"""

    def __init__(self, letters: Sequence[Letter]):
        names = [letter.name for letter in letters]
        if len(set(names)) != len(names) or any(len(n) != 1 for n in names):
            raise ValueError(f"letter names must be distinct single characters, got {names}")
        self.letters = list(letters)
        self.index: Dict[str, int] = {n: k for k, n in enumerate(names)}

    def __len__(self):
        return len(self.letters)

    def key(self, word: Word) -> tuple:
        weight = 0
        potential = 0
        skeleton = []
        segments = [0]
        group = []
        for k in word:
            letter = self.letters[k]
            weight += letter.weight
            potential += letter.potential
            if letter.weight:
                skeleton.append(letter.rank)
                segments.append(0)
            else:
                segments[-1] += 1
                group.append(letter.rank)
        return weight, potential, tuple(skeleton), tuple(segments), tuple(group)

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)

    def leading(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)

    def word(self, text: str) -> Word:
        """'xya' -> indices; '1' or '' is the empty word"""
        if text in ('', '1'):
            return ()
        try:
            return tuple(self.index[c] for c in text)
        except KeyError as exc:
            raise ValueError(f"unknown letter {exc} in word {text!r}") from None

    def text(self, word: Word) -> str:
        return ''.join(self.letters[k].name for k in word) or '1'

    def expand(self, word: Word) -> Word:
        """Replace composite letters by the letters they stand for"""
        out = []
        for k in word:
            letter = self.letters[k]
            if letter.expands:
                out.extend(self.index[c] for c in letter.expands)
            else:
                out.append(k)
        return tuple(out)

    def to_dict(self) -> list:
        return [letter.to_dict() for letter in self.letters]
