import logging
from functools import lru_cache

from ..errors import ConfigurationError, DomainError, PreconditionError, TruncationError
from ..qfield import QRat, parse_qrat
from ..rootsys import CartanDatum
from ..words import (
    LoopLetter,
    LoopWord,
    WordDegree,
    max_shuffle,
    parse_word,
    sorted_letters_desc,
)
from .series import expand_pairs, interleavings, placements, shuffle_ratio_series

logger = logging.getLogger(__name__)


def _check_window(window):
    if window is None:
        return None
    m, big_m = (int(x) for x in window)
    if m > big_m:
        raise ConfigurationError("Empty window [{0}, {1}]".format(m, big_m))
    return m, big_m


def _in_window(w: LoopWord, window) -> bool:
    m, big_m = window
    return all(m <= x.exponent <= big_m for x in w.letters)


class LoopShuffleElement:
    """
    Element of the completed loop shuffle algebra, known exactly on a window

    The represented element may have infinite support. What is stored is the
    coefficient of every word of the given degree whose exponents all lie in
    the window [m, M]; a word of that shape missing from `terms` has coefficient
    zero. With `window=None` the element is exact: `terms` is its whole support.

    Parameters
    ----------
    cd : CartanDatum
        The root system fixing the pairing d_ij

    degree : WordDegree
        (hdeg, vdeg) shared by all words

    terms : dict
        Mapping of word to coefficient

    window : tuple of int, optional
        (m, M), or None for an exact element

    truncated : bool
        Whether words outside the window were discarded

    ceiling : LoopWord, optional
        A word known to be at least as large as every word in the support

    in_image : bool
        Whether the element is known to lie in the image of the quantum loop group
    """

    __slots__ = ("cd", "degree", "terms", "window", "truncated", "ceiling", "in_image")

    def __init__(
        self,
        cd: CartanDatum,
        degree,
        terms=None,
        window=None,
        truncated: bool = False,
        ceiling=None,
        in_image: bool = False,
    ):
        hdeg, vdeg = degree
        degree = WordDegree(tuple(hdeg), int(vdeg))
        window = _check_window(window)
        clean = {}
        for w, c in (terms or {}).items():
            if not isinstance(w, LoopWord):
                w = parse_word(w) if isinstance(w, str) else LoopWord(w)
            if w.degree(cd.rank) != degree:
                raise DomainError("{0} does not have degree {1}".format(w, tuple(degree)))
            if window is not None and not _in_window(w, window):
                raise DomainError("{0} lies outside the window {1}".format(w, window))
            c = QRat.coerce(c)
            if c:
                clean[w] = c
        self.cd = cd
        self.degree = degree
        self.terms = clean
        self.window = window
        self.truncated = bool(truncated)
        self.ceiling = ceiling
        self.in_image = in_image

    @classmethod
    def _raw(cls, cd, degree, terms, window, truncated, ceiling=None, in_image=False):
        obj = cls.__new__(cls)
        obj.cd = cd
        obj.degree = degree
        obj.terms = terms
        obj.window = window
        obj.truncated = truncated
        obj.ceiling = ceiling
        obj.in_image = in_image
        return obj

    @classmethod
    def word(cls, cd: CartanDatum, w, coeff=1) -> "LoopShuffleElement":
        """The exact element coeff * [w]"""
        if not isinstance(w, LoopWord):
            w = parse_word(w) if isinstance(w, str) else LoopWord(w)
        return cls(cd, w.degree(cd.rank), {w: coeff}, ceiling=w)

    @classmethod
    def letter(cls, cd: CartanDatum, color: int, exponent: int = 0) -> "LoopShuffleElement":
        """[i^(d)], the image of the generator e_{i,d}"""
        w = LoopWord.letter(color, exponent)
        return cls._raw(
            cd, w.degree(cd.rank), {w: QRat.one()}, None, False, ceiling=w, in_image=True
        )

    @property
    def is_exact(self) -> bool:
        return self.window is None

    @property
    def length(self) -> int:
        return sum(self.degree.hdeg)

    def coefficient(self, w) -> QRat:
        """
        Raises
        ------
        TruncationError
            If the word lies outside the window of a non-exact element
        """
        if not isinstance(w, LoopWord):
            w = parse_word(w) if isinstance(w, str) else LoopWord(w)
        if self.window is not None and not _in_window(w, self.window):
            raise TruncationError(
                "{0} lies outside the window {1}".format(w, self.window), window=self.window
            )
        return self.terms.get(w, QRat.zero())

    def items(self):
        """Stored terms from the largest word down"""
        return sorted(self.terms.items(), key=lambda item: item[0].key, reverse=True)

    def max_stored(self):
        if not self.terms:
            return None
        return max(self.terms, key=lambda x: x.key)

    def restrict(self, window) -> "LoopShuffleElement":
        """The same element known on a narrower window"""
        window = _check_window(window)
        if self.window is not None and not (
            self.window[0] <= window[0] and window[1] <= self.window[1]
        ):
            raise TruncationError(
                "Window {0} is not inside {1}".format(window, self.window), window=self.window
            )
        kept = {w: c for w, c in self.terms.items() if _in_window(w, window)}
        return LoopShuffleElement._raw(
            self.cd,
            self.degree,
            kept,
            window,
            self.truncated or len(kept) < len(self.terms),
            self.ceiling,
            self.in_image,
        )

    def _common_window(self, other):
        if self.window is None:
            return other.window
        if other.window is None:
            return self.window
        m = max(self.window[0], other.window[0])
        big_m = min(self.window[1], other.window[1])
        if m > big_m:
            raise TruncationError("The windows {0} and {1} are disjoint".format(self.window, other.window))
        return m, big_m

    def __add__(self, other):
        if not isinstance(other, LoopShuffleElement):
            return NotImplemented
        if other.cd != self.cd or other.degree != self.degree:
            raise DomainError("Cannot add elements of different degrees")
        window = self._common_window(other)
        res = {}
        for source in (self, other):
            for w, c in source.terms.items():
                if window is not None and not _in_window(w, window):
                    continue
                v = res[w] + c if w in res else c
                if v:
                    res[w] = v
                else:
                    res.pop(w, None)
        ceiling = None
        if self.ceiling is not None and other.ceiling is not None:
            ceiling = max(self.ceiling, other.ceiling, key=lambda x: x.key)
        return LoopShuffleElement._raw(
            self.cd,
            self.degree,
            res,
            window,
            self.truncated or other.truncated or window != self.window or window != other.window,
            ceiling,
            self.in_image and other.in_image,
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "LoopShuffleElement":
        factor = QRat.coerce(factor)
        terms = {w: c * factor for w, c in self.terms.items()} if factor else {}
        return LoopShuffleElement._raw(
            self.cd,
            self.degree,
            terms,
            self.window,
            self.truncated,
            self.ceiling,
            self.in_image,
        )

    def __eq__(self, other):
        if not isinstance(other, LoopShuffleElement):
            return NotImplemented
        return (
            self.cd == other.cd
            and self.degree == other.degree
            and self.window == other.window
            and self.terms == other.terms
        )

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            "degree": {"hdeg": list(self.degree.hdeg), "vdeg": self.degree.vdeg},
            "window": list(self.window) if self.window is not None else None,
            "truncated": self.truncated,
            "terms": [{"word": w.render(), "coeff": c.render()} for w, c in self.items()],
        }

    @classmethod
    def from_dict(cls, cd: CartanDatum, data: dict) -> "LoopShuffleElement":
        degree = (tuple(data["degree"]["hdeg"]), data["degree"]["vdeg"])
        terms = {parse_word(t["word"]): parse_qrat(t["coeff"]) for t in data["terms"]}
        return cls(
            cd, degree, terms, window=data.get("window"), truncated=data.get("truncated", False)
        )

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            coeff = c.render()
            if coeff == "1":
                parts.append("[{0}]".format(w.render()))
            else:
                parts.append("({0})*[{1}]".format(coeff, w.render()))
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        repr_str = ""
        repr_str += "Module: lyndonloop"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Class: LoopShuffleElement"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Degree: {0}, {1}".format(list(self.degree.hdeg), self.degree.vdeg)
        repr_str += "\n"
        repr_str += "Window: {0}".format("exact" if self.window is None else list(self.window))
        repr_str += "\n"
        repr_str += "Truncated: {0}".format(self.truncated)
        repr_str += "\n"
        repr_str += "Stored terms: {0}".format(len(self.terms))
        repr_str += "\n"
        for w, c in self.items()[:10]:
            repr_str += "  [{0}]: {1}".format(w.render(), c.render())
            repr_str += "\n"

        return repr_str


def _shift_bound(k: int, l: int, d_x: int, d_y: int, window) -> int:
    """Largest total shift the second factor's letters can receive into the window"""
    m, big_m = window
    return max(0, min(l * big_m - d_y, d_x - k * m))


def _feasible(x, y, window) -> bool:
    m, big_m = window
    r_max = _shift_bound(x.length, y.length, x.degree.vdeg, y.degree.vdeg, window)
    if x.window is not None and not (x.window[0] <= m and big_m + r_max <= x.window[1]):
        return False
    if y.window is not None and not (y.window[0] <= m - r_max and big_m <= y.window[1]):
        return False
    return True


def certifiable_window(x: "LoopShuffleElement", y: "LoopShuffleElement"):
    """
    The widest window on which x * y is known exactly from the stored terms

    In x * y the letters of x only move up (lower exponent) and those of y only
    move down, by a total amount R bounded through the window and the vertical
    degrees. So x must be known on [m, M + R] and y on [m - R, M].

    Returns
    -------
    tuple or None
        (m, M), None when no window qualifies

    Raises
    ------
    PreconditionError
        If both factors are exact, in which case every window is certifiable
    """
    windows = [w.window for w in (x, y) if w.window is not None]
    if not windows:
        raise PreconditionError("Both factors are exact, a window must be requested")
    lo = max(w[0] for w in windows)
    hi = min(w[1] for w in windows)
    best = None
    for m in range(lo, hi + 1):
        for big_m in range(hi, m - 1, -1):
            if best is not None and big_m - m <= best[1] - best[0]:
                break
            if _feasible(x, y, (m, big_m)):
                best = (m, big_m)
                break
    return best


def _shuffle_pair(cd: CartanDatum, u: LoopWord, v: LoopWord, window):
    """[u] * [v] on the window, as {word: QLaurent} and a truncation flag"""
    k, l = len(u), len(v)
    out = {}
    truncated = False
    for positions in interleavings(k, l):
        in_a = set(positions)
        colors, base, pairs = [], [], []
        iu = iv = 0
        earlier_b = []
        for p in range(k + l):
            if p in in_a:
                x = u.letters[iu]
                iu += 1
                for pb, cb in earlier_b:
                    pairs.append((pb, p, shuffle_ratio_series(cd.d_ij(x.color, cb))))
            else:
                x = v.letters[iv]
                iv += 1
                earlier_b.append((p, x.color))
            colors.append(x.color)
            base.append(x.exponent)
        expanded, cut = expand_pairs(tuple(base), pairs, window)
        truncated = truncated or cut
        for exps, c in expanded.items():
            w = LoopWord._from_letters(tuple(LoopLetter(i, e) for i, e in zip(colors, exps)))
            old = out.get(w)
            value = c if old is None else old + c
            if value:
                out[w] = value
            else:
                out.pop(w, None)
    return out, truncated


def shuffle_loop(x: LoopShuffleElement, y: LoopShuffleElement, window=None) -> LoopShuffleElement:
    """
    The loop shuffle product, exact on a certified window

    Every pair of a letter a of the first word placed after a letter b of the
    second contributes the series zeta(z_a / z_b) / zeta(z_b / z_a) in z_b / z_a,
    which raises the exponent of b and lowers the exponent of a by the same amount.

    Parameters
    ----------
    x, y : LoopShuffleElement
        The factors

    window : tuple of int, optional
        (m, M) for the result; defaults to the widest certifiable window. Required
        when both factors are exact.

    Returns
    -------
    LoopShuffleElement

    Raises
    ------
    TruncationError
        If the requested window cannot be certified from the factors' windows;
        the exception carries the certifiable window
    """
    if x.cd != y.cd:
        raise PreconditionError("Elements over different root systems")
    cd = x.cd
    window = _check_window(window)
    if window is None:
        window = certifiable_window(x, y)
        if window is None:
            raise TruncationError("No window of the product can be certified", window=None)
    elif not _feasible(x, y, window):
        suggestion = None
        if not (x.is_exact and y.is_exact):
            suggestion = certifiable_window(x, y)
        raise TruncationError(
            "Window {0} cannot be certified from the factors".format(window), window=suggestion
        )

    degree = x.degree + y.degree
    res = {}
    truncated = x.truncated or y.truncated
    for u, a in x.terms.items():
        for v, b in y.terms.items():
            ab = a * b
            terms, cut = _shuffle_pair(cd, u, v, window)
            truncated = truncated or cut
            for w, c in terms.items():
                value = ab * c
                old = res.get(w)
                value = value if old is None else old + value
                if value:
                    res[w] = value
                else:
                    res.pop(w, None)

    ceiling = None
    if x.ceiling is not None and y.ceiling is not None:
        ceiling = max_shuffle(x.ceiling, y.ceiling)
    logger.debug("Loop shuffle of degree %s on %s: %d terms", tuple(degree), window, len(res))
    return LoopShuffleElement._raw(
        cd, degree, res, window, truncated, ceiling, x.in_image and y.in_image
    )


@lru_cache(maxsize=4096)
def _monomial_terms(cd: CartanDatum, letters: tuple, window: tuple):
    k = len(letters)
    out = {}
    truncated = False
    for perm in placements(k):
        colors = tuple(letters[f].color for f in perm)
        base = tuple(letters[f].exponent for f in perm)
        pairs = []
        for p in range(k):
            for p2 in range(p + 1, k):
                if perm[p] > perm[p2]:
                    delta = cd.d_ij(colors[p], colors[p2])
                    pairs.append((p, p2, shuffle_ratio_series(delta)))
        expanded, cut = expand_pairs(base, pairs, window)
        truncated = truncated or cut
        for exps, c in expanded.items():
            w = LoopWord._from_letters(tuple(LoopLetter(i, e) for i, e in zip(colors, exps)))
            old = out.get(w)
            value = c if old is None else old + c
            if value:
                out[w] = value
            else:
                out.pop(w, None)
    return tuple(out.items()), truncated


def monomial_product(cd: CartanDatum, letters, window) -> LoopShuffleElement:
    """
    [i_1^(d_1)] * ... * [i_k^(d_k)] on a window

    The product of single letters is a sum over all arrangements of the factors,
    with one ratio series for every pair of factors placed out of order. The
    result is exact on any window.

    Parameters
    ----------
    letters : sequence
        LoopLetter instances or (color, exponent) pairs

    window : tuple of int
        (m, M)
    """
    window = _check_window(window)
    if window is None:
        raise PreconditionError("A window is required")
    letters = tuple(LoopWord(letters).letters)
    word = LoopWord._from_letters(letters)
    degree = word.degree(cd.rank)
    if not letters:
        return LoopShuffleElement._raw(
            cd, degree, {word: QRat.one()}, window, False, word, in_image=True
        )
    terms, truncated = _monomial_terms(cd, letters, window)
    return LoopShuffleElement._raw(
        cd,
        degree,
        {w: QRat.coerce(c) for w, c in terms},
        window,
        truncated,
        sorted_letters_desc(word),
        in_image=True,
    )


def zero_element(cd: CartanDatum, degree, window) -> LoopShuffleElement:
    """The zero element of a degree, known on a window"""
    hdeg, vdeg = degree
    return LoopShuffleElement._raw(
        cd, WordDegree(tuple(hdeg), int(vdeg)), {}, _check_window(window), False, None, True
    )


