import logging

from sympy.utilities.iterables import multiset_permutations

from ..errors import TruncationError
from ..lyndon import enumerate_standard_words
from ..rootsys import CartanDatum
from ..words import LoopWord
from .bracket import bracket_vector, phi_loop
from .finite import finite_monomial_product
from .linalg import pivot_columns

logger = logging.getLogger(__name__)


def words_of_degree(hdeg) -> list:
    """Every word with exponents 0 and the given color content, in decreasing order"""
    colors = [i + 1 for i, k in enumerate(hdeg) for _ in range(k)]
    words = [LoopWord(p) for p in multiset_permutations(colors)] if colors else [LoopWord()]
    return sorted(words, key=lambda w: w.key, reverse=True)


def finite_good_words(cd: CartanDatum, alpha) -> list:
    """
    All good words of a degree in the finite shuffle algebra, smallest first

    The images of e_{i_1} ... e_{i_k} over all words of the degree span the image
    in that degree; eliminating their coefficient rows with the words in
    decreasing order leaves exactly the leading words of the span as pivots.
    """
    columns = words_of_degree(alpha)
    rows = [finite_monomial_product(cd, w.colors).terms for w in columns]
    good = pivot_columns(rows, columns)
    return sorted(good, key=lambda w: w.key)


def _outside(w, window) -> bool:
    m, big_m = window
    return any(not m <= x.exponent <= big_m for x in w.letters)


def good_word_linear_test(table, w: LoopWord, window) -> bool:
    """
    Decides whether a loop word is the leading word of an image element

    The rows are the images of e_v for the standard words v >= w of the degree of
    w inside the window, restricted to the words >= w; w is good when it is a
    pivot column once the larger words are eliminated first.

    A pivot is certified by the same argument as `leading_word`: a combination
    vanishing on the larger words of the window could only have a larger leading
    word outside the window, and that word would be standard.

    Parameters
    ----------
    table : LoopLyndonTable
        The Lyndon table

    w : LoopWord
        The candidate

    window : tuple of int
        (m, M), the exponent range the images are computed on

    Raises
    ------
    TruncationError
        If w leaves the window, or a standard word above w that could spoil the
        pivot lies outside it
    """
    cd = table.cd
    m, big_m = (int(x) for x in window)
    if _outside(w, (m, big_m)):
        lo, hi = w.exponent_range()
        raise TruncationError(
            "{0} lies outside the window".format(w), window=(min(m, lo), max(big_m, hi))
        )
    degree = tuple(w.degree(cd.rank))
    rows_words = [
        v for v, _ in enumerate_standard_words(table, degree, window=(m, big_m)) if v >= w
    ]
    elements = [phi_loop(cd, bracket_vector(table, v), (m, big_m)) for v in rows_words]
    columns = sorted(
        {u for e in elements for u in e.terms if u >= w}, key=lambda u: u.key, reverse=True
    )
    if w not in columns:
        logger.debug("%s carries no coefficient in any row", w)
        return False
    if w not in pivot_columns([e.terms for e in elements], columns):
        return False

    ceiling = max((e.ceiling for e in elements), key=lambda u: u.key)
    escaped = [
        u
        for u, _ in enumerate_standard_words(table, degree, upper=ceiling)
        if u > w and _outside(u, (m, big_m))
    ]
    if escaped:
        for u in escaped:
            lo, hi = u.exponent_range()
            m, big_m = min(m, lo), max(big_m, hi)
        raise TruncationError(
            "Standard words above {0} leave the window".format(w), window=(m, big_m)
        )
    return True
