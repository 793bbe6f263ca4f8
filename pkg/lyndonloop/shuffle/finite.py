from fractions import Fraction

from ..errors import DomainError, PreconditionError, ZeroElementError
from ..qfield import QLaurent, QRat
from ..rootsys import CartanDatum
from ..words import LoopWord, parse_word
from .series import interleavings


def _coerce_word(w) -> LoopWord:
    if isinstance(w, LoopWord):
        return w
    if isinstance(w, str):
        return parse_word(w)
    return LoopWord(w)


def _render_terms(items) -> str:
    if not items:
        return "0"
    parts = []
    for w, c in items:
        coeff = c.render()
        if coeff == "1":
            parts.append("[{0}]".format(w.render()))
        else:
            parts.append("({0})*[{1}]".format(coeff, w.render()))
    return " + ".join(parts)


class FiniteShuffleElement:
    """
    Element of the finite quantum shuffle algebra

    A finite linear combination of words in the colors, with coefficients in Q(q).
    All words carry exponent 0 and share one degree in Q+.

    Parameters
    ----------
    cd : CartanDatum
        The root system fixing the pairing d_ij

    terms : dict, optional
        Mapping of word to coefficient; words may be given as LoopWord, text or
        sequences of colors

    Examples
    --------
    >>> cd = build("A", 2)
    >>> shuffle_finite(FiniteShuffleElement.word(cd, "1"), FiniteShuffleElement.word(cd, "2"))
    FiniteShuffleElement('(q^-1)*[2 1] + [1 2]')
    """

    __slots__ = ("cd", "terms")

    def __init__(self, cd: CartanDatum, terms=None):
        clean = {}
        hdeg = None
        for w, c in (terms or {}).items():
            w = _coerce_word(w)
            if any(e != 0 for e in w.exponents):
                raise DomainError("Finite shuffle words carry no exponents: {0}".format(w))
            deg = w.hdeg(cd.rank)
            if hdeg is None:
                hdeg = deg
            elif deg != hdeg:
                raise DomainError("Finite shuffle elements must be homogeneous")
            c = QRat.coerce(c)
            if c:
                clean[w] = clean[w] + c if w in clean else c
                if not clean[w]:
                    del clean[w]
        self.cd = cd
        self.terms = clean

    @classmethod
    def _raw(cls, cd: CartanDatum, terms: dict) -> "FiniteShuffleElement":
        obj = cls.__new__(cls)
        obj.cd = cd
        obj.terms = terms
        return obj

    @classmethod
    def word(cls, cd: CartanDatum, w, coeff=1) -> "FiniteShuffleElement":
        return cls(cd, {_coerce_word(w): coeff})

    @classmethod
    def one(cls, cd: CartanDatum) -> "FiniteShuffleElement":
        return cls._raw(cd, {LoopWord.empty(): QRat.one()})

    @classmethod
    def zero(cls, cd: CartanDatum) -> "FiniteShuffleElement":
        return cls._raw(cd, {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def hdeg(self):
        if not self.terms:
            return None
        return next(iter(self.terms)).hdeg(self.cd.rank)

    def coefficient(self, w) -> QRat:
        return self.terms.get(_coerce_word(w), QRat.zero())

    def items(self):
        """Terms sorted from the largest word down"""
        return sorted(self.terms.items(), key=lambda item: item[0].key, reverse=True)

    def leading_term(self):
        """The largest word with nonzero coefficient, and that coefficient"""
        if not self.terms:
            raise ZeroElementError("The zero element has no leading word")
        w = max(self.terms, key=lambda x: x.key)
        return w, self.terms[w]

    def _check_compatible(self, other):
        if not isinstance(other, FiniteShuffleElement):
            raise TypeError("Expected a FiniteShuffleElement, got {0!r}".format(other))
        if other.cd != self.cd:
            raise PreconditionError("Elements over different root systems")

    def __add__(self, other):
        self._check_compatible(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if other.hdeg != self.hdeg:
            raise DomainError("Cannot add elements of different degrees")
        res = dict(self.terms)
        for w, c in other.terms.items():
            v = res[w] + c if w in res else c
            if v:
                res[w] = v
            else:
                res.pop(w, None)
        return FiniteShuffleElement._raw(self.cd, res)

    def __neg__(self):
        return FiniteShuffleElement._raw(self.cd, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "FiniteShuffleElement":
        factor = QRat.coerce(factor)
        if not factor:
            return FiniteShuffleElement.zero(self.cd)
        return FiniteShuffleElement._raw(
            self.cd, {w: c * factor for w, c in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, FiniteShuffleElement):
            return shuffle_finite(self, other)
        if isinstance(other, (int, Fraction, QLaurent, QRat)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QLaurent, QRat)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero
        if not isinstance(other, FiniteShuffleElement):
            return NotImplemented
        return self.cd == other.cd and self.terms == other.terms

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            "degree": list(self.hdeg) if self.terms else None,
            "terms": [{"word": w.render(), "coeff": c.render()} for w, c in self.items()],
        }

    def render(self) -> str:
        return _render_terms(self.items())

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "FiniteShuffleElement('{0}')".format(self.render())


def _shuffle_words(cd: CartanDatum, u: LoopWord, v: LoopWord) -> dict:
    """Sum over splittings A, B of q^lambda_{A,B}, lambda summing d over a in A after b in B"""
    k, l = len(u), len(v)
    out = {}
    for positions in interleavings(k, l):
        in_a = set(positions)
        letters = []
        iu = iv = 0
        seen_b = []
        weight = 0
        for p in range(k + l):
            if p in in_a:
                x = u.letters[iu]
                iu += 1
                for b in seen_b:
                    weight += cd.d_ij(x.color, b)
            else:
                x = v.letters[iv]
                iv += 1
                seen_b.append(x.color)
            letters.append(x)
        w = LoopWord._from_letters(tuple(letters))
        out[w] = out.get(w, QLaurent.zero()) + QLaurent.monomial(weight)
    return out


def shuffle_finite(x: FiniteShuffleElement, y: FiniteShuffleElement) -> FiniteShuffleElement:
    """
    The quantum shuffle product

    Bilinear; on words it sums over all interleavings, weighting each by
    q to the sum of d_{s_a s_b} over letters a of the first word placed after
    letters b of the second.
    """
    x._check_compatible(y)
    cd = x.cd
    res = {}
    for u, a in x.terms.items():
        for v, b in y.terms.items():
            ab = a * b
            for w, c in _shuffle_words(cd, u, v).items():
                value = ab * c
                old = res.get(w)
                value = value if old is None else old + value
                if value:
                    res[w] = value
                else:
                    res.pop(w, None)
    return FiniteShuffleElement._raw(cd, res)


def finite_monomial_product(cd: CartanDatum, colors) -> FiniteShuffleElement:
    """[i_1] * [i_2] * ... * [i_k], the image of e_{i_1} ... e_{i_k}"""
    out = FiniteShuffleElement.one(cd)
    for i in colors:
        out = shuffle_finite(out, FiniteShuffleElement.word(cd, [i]))
    return out
