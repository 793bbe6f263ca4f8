import re
from enum import Enum
from typing import NamedTuple, Tuple

from ..errors import ConfigurationError, DomainError

_LETTER = re.compile(r"^(\d+)(?:\^\(?(-?\d+)\)?)?$")


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        if a < b:
            return cls.LT
        if a > b:
            return cls.GT
        return cls.EQ


class LoopLetter(NamedTuple):
    """
    The letter i^(d): a color i in 1..n with an integer exponent d

    Letters are ordered by i^(d) < j^(e) iff d > e, or d = e and i < j.
    """

    color: int
    exponent: int = 0

    @property
    def key(self) -> Tuple[int, int]:
        return (-self.exponent, self.color)

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def shift(self, n: int) -> "LoopLetter":
        return LoopLetter(self.color, self.exponent + n)

    def render(self, latex: bool = False) -> str:
        if latex:
            if self.exponent == 0:
                return str(self.color)
            if self.exponent == 1:
                return "\\underline{{{0}}}".format(self.color)
            return "{0}^{{({1})}}".format(self.color, self.exponent)
        if self.exponent == 0:
            return str(self.color)
        return "{0}^({1})".format(self.color, self.exponent)


class WordDegree(NamedTuple):
    """Horizontal degree (root lattice vector) and vertical degree (exponent sum)"""

    hdeg: Tuple[int, ...]
    vdeg: int

    def __add__(self, other):
        return WordDegree(
            tuple(a + b for a, b in zip(self.hdeg, other.hdeg)), self.vdeg + other.vdeg
        )

    def __sub__(self, other):
        return WordDegree(
            tuple(a - b for a, b in zip(self.hdeg, other.hdeg)), self.vdeg - other.vdeg
        )

    @property
    def height(self) -> int:
        return sum(self.hdeg)


def _as_letter(item) -> LoopLetter:
    if isinstance(item, LoopLetter):
        letter = item
    elif isinstance(item, int):
        letter = LoopLetter(item, 0)
    else:
        color, exponent = item
        letter = LoopLetter(int(color), int(exponent))
    if letter.color < 1:
        raise DomainError("Colors are positive integers, got {0}".format(letter.color))
    return letter


class LoopWord:
    """
    A finite word in the loop letters i^(d)

    Words compare lexicographically letter by letter, and a proper prefix is
    smaller than the word itself.

    Parameters
    ----------
    letters : iterable
        LoopLetter instances, (color, exponent) pairs or bare colors (exponent 0)

    Examples
    --------
    >>> LoopWord([(2, 1), 1, 2])
    LoopWord('2^(1) 1 2')
    """

    __slots__ = ("letters", "key", "_hash")

    def __init__(self, letters=()):
        self.letters = tuple(_as_letter(x) for x in letters)
        self.key = tuple(x.key for x in self.letters)
        self._hash = None

    @classmethod
    def _from_letters(cls, letters: tuple) -> "LoopWord":
        obj = cls.__new__(cls)
        obj.letters = letters
        obj.key = tuple(x.key for x in letters)
        obj._hash = None
        return obj

    @classmethod
    def empty(cls) -> "LoopWord":
        return cls._from_letters(())

    @classmethod
    def letter(cls, color: int, exponent: int = 0) -> "LoopWord":
        return cls._from_letters((_as_letter((color, exponent)),))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return LoopWord._from_letters(self.letters[idx])
        return self.letters[idx]

    def __add__(self, other):
        if not isinstance(other, LoopWord):
            return NotImplemented
        return LoopWord._from_letters(self.letters + other.letters)

    def __eq__(self, other):
        if not isinstance(other, LoopWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __bool__(self):
        return bool(self.letters)

    @property
    def colors(self) -> Tuple[int, ...]:
        return tuple(x.color for x in self.letters)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(x.exponent for x in self.letters)

    @property
    def vdeg(self) -> int:
        return sum(x.exponent for x in self.letters)

    def hdeg(self, rank: int) -> Tuple[int, ...]:
        counts = [0] * rank
        for x in self.letters:
            if x.color > rank:
                raise DomainError("Color {0} exceeds rank {1}".format(x.color, rank))
            counts[x.color - 1] += 1
        return tuple(counts)

    def degree(self, rank: int) -> WordDegree:
        return WordDegree(self.hdeg(rank), self.vdeg)

    def shift(self, n: int) -> "LoopWord":
        if n == 0:
            return self
        return LoopWord._from_letters(tuple(x.shift(n) for x in self.letters))

    def exponent_range(self):
        """(min, max) of the letter exponents"""
        exps = self.exponents
        return (min(exps), max(exps)) if exps else (0, 0)

    def render(self, latex: bool = False) -> str:
        if not self.letters:
            return "[]"
        return " ".join(x.render(latex=latex) for x in self.letters)

    def to_json(self) -> list:
        return [[x.color, x.exponent] for x in self.letters]

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "LoopWord('{0}')".format(self.render())


def compare_lex(w: LoopWord, v: LoopWord) -> Ordering:
    """Lexicographic comparison of loop words with the prefix rule"""
    return Ordering.of(w.key, v.key)


def parse_word(text: str) -> LoopWord:
    """
    Parses the rendering `2^(1) 1 2` (also accepts `2^1` and surrounding brackets)

    Parameters
    ----------
    text : str
        Space separated letters

    Returns
    -------
    LoopWord
    """
    text = text.strip().strip("[]").strip()
    if not text:
        return LoopWord.empty()
    letters = []
    for token in text.replace(",", " ").split():
        match = _LETTER.match(token)
        if match is None:
            raise ConfigurationError("Cannot parse loop letter {0!r}".format(token))
        letters.append((int(match.group(1)), int(match.group(2) or 0)))
    return LoopWord(letters)


def word_from_json(data) -> LoopWord:
    return LoopWord([tuple(pair) for pair in data])
