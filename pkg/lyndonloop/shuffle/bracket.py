from dataclasses import dataclass
from typing import Tuple

from ..errors import ConfigurationError, DomainError, TruncationError
from ..qfield import QLaurent, QRat
from ..rootsys import CartanDatum
from ..words import (
    LoopLetter,
    LoopWord,
    WordDegree,
    canonical_factorization,
    costandard_factorization,
    is_lyndon,
    sorted_letters_desc,
)
from .finite import FiniteShuffleElement, finite_monomial_product
from .loop import LoopShuffleElement, monomial_product


class BracketExpr:
    """A q-bracketed product of generators e_{i,d}"""

    def word(self) -> LoopWord:
        raise NotImplementedError

    def expand(self) -> dict:
        """The noncommutative polynomial {tuple of LoopLetter: QLaurent}"""
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def degree(self, rank: int) -> WordDegree:
        return self.word().degree(rank)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class Leaf(BracketExpr):
    letter: LoopLetter

    def word(self) -> LoopWord:
        return LoopWord._from_letters((self.letter,))

    def expand(self) -> dict:
        return {(self.letter,): QLaurent.one()}

    def render(self) -> str:
        return "e_{0}".format(self.letter.render())


@dataclass(frozen=True)
class Bracket(BracketExpr):
    """[left, right]_q = left right - q^exponent right left"""

    left: BracketExpr
    right: BracketExpr
    exponent: int

    def word(self) -> LoopWord:
        return self.left.word() + self.right.word()

    def expand(self) -> dict:
        a, b = self.left.expand(), self.right.expand()
        out = _multiply(a, b)
        for key, c in _multiply(b, a).items():
            _accumulate(out, key, -c.shift(self.exponent))
        return out

    def render(self) -> str:
        return "[{0}, {1}]_{2}".format(self.left.render(), self.right.render(), self.exponent)


@dataclass(frozen=True)
class Product(BracketExpr):
    factors: Tuple[BracketExpr, ...]

    def word(self) -> LoopWord:
        out = LoopWord.empty()
        for f in self.factors:
            out = out + f.word()
        return out

    def expand(self) -> dict:
        out = {(): QLaurent.one()}
        for f in self.factors:
            out = _multiply(out, f.expand())
        return out

    def render(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(f.render() for f in self.factors)


def _accumulate(out: dict, key, value):
    old = out.get(key)
    value = value if old is None else old + value
    if value:
        out[key] = value
    else:
        out.pop(key, None)


def _multiply(a: dict, b: dict) -> dict:
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            _accumulate(out, ka + kb, ca * cb)
    return out


def _bracket_lyndon(cd: CartanDatum, w: LoopWord) -> BracketExpr:
    if len(w) == 1:
        return Leaf(w.letters[0])
    w1, w2 = costandard_factorization(w)
    exponent = cd.pairing(w1.hdeg(cd.rank), w2.hdeg(cd.rank))
    return Bracket(_bracket_lyndon(cd, w1), _bracket_lyndon(cd, w2), exponent)


def bracket_vector(table, w: LoopWord) -> BracketExpr:
    """
    The q-bracketed root vector e_w

    A Lyndon word is bracketed recursively along costandard factorizations,
    e_l = e_{l1} e_{l2} - q^{(hdeg l1, hdeg l2)} e_{l2} e_{l1}; any other word is
    the product of the bracketings of its canonical factors.

    Parameters
    ----------
    table : LoopLyndonTable or CartanDatum
        Supplies the pairing

    w : LoopWord
        Any loop word
    """
    cd = table if isinstance(table, CartanDatum) else table.cd
    if not w:
        return Product(())
    if is_lyndon(w):
        return _bracket_lyndon(cd, w)
    return Product(tuple(_bracket_lyndon(cd, x) for x in canonical_factorization(w)))


def product_vector(table, factors) -> BracketExpr:
    """e_{l1} ... e_{lk} for a sequence of words"""
    return Product(tuple(bracket_vector(table, x) for x in factors))


def phi_finite(cd: CartanDatum, expr: BracketExpr) -> FiniteShuffleElement:
    """
    Evaluates a bracket expression in the finite shuffle algebra

    Raises
    ------
    DomainError
        If a generator carries a nonzero exponent
    """
    out = FiniteShuffleElement.zero(cd)
    for letters, c in expr.expand().items():
        if any(x.exponent != 0 for x in letters):
            raise DomainError("Finite generators carry no exponent")
        out = out + finite_monomial_product(cd, [x.color for x in letters]).scale(c)
    return out


def phi_loop(cd: CartanDatum, expr: BracketExpr, window) -> LoopShuffleElement:
    """
    Evaluates a bracket expression in the loop shuffle algebra, exactly on a window

    Each monomial e_{i_1,d_1} ... e_{i_k,d_k} of the expansion maps to the
    product of the letters [i_a^(d_a)], which is known exactly on any window.

    Parameters
    ----------
    cd : CartanDatum
        The root system

    expr : BracketExpr
        For instance the output of `bracket_vector`

    window : tuple of int
        (m, M)

    Returns
    -------
    LoopShuffleElement

    Raises
    ------
    TruncationError
        If no word of the expression's degree fits in the window
    """
    if window is None:
        raise ConfigurationError("phi_loop needs a window")
    m, big_m = window
    word = expr.word()
    degree = word.degree(cd.rank)
    k = len(word)
    if k and not (k * m <= degree.vdeg <= k * big_m):
        lo, hi = word.exponent_range()
        raise TruncationError(
            "No word of vertical degree {0} has all exponents in [{1}, {2}]".format(
                degree.vdeg, m, big_m
            ),
            window=(min(lo, m), max(hi, big_m)),
        )

    terms = {}
    truncated = False
    for letters, c in expr.expand().items():
        product = monomial_product(cd, letters, window)
        truncated = truncated or product.truncated
        scale = QRat.coerce(c)
        for w, v in product.terms.items():
            value = v * scale
            old = terms.get(w)
            value = value if old is None else old + value
            if value:
                terms[w] = value
            else:
                terms.pop(w, None)

    ceiling = sorted_letters_desc(word)
    return LoopShuffleElement._raw(
        cd, degree, terms, (m, big_m), truncated, ceiling, in_image=True
    )
