import logging

from sympy.utilities.iterables import multiset_permutations

from ..errors import ConfigurationError
from ..qfield import QRat
from ..shuffle import LoopShuffleElement, inverse_zeta_series
from ..shuffle.loop import _check_window
from ..shuffle.series import expand_pairs
from ..words import LoopLetter, LoopWord, WordDegree
from .function import MAX_VARIABLES, SymRatFunction
from .polynomial import ColoredLaurentPoly

logger = logging.getLogger(__name__)


def color_sequences(profile) -> list:
    """Every color sequence with the given content, as tuples of 1-based colors"""
    colors = [c + 1 for c, k in enumerate(profile) for _ in range(k)]
    if not colors:
        return [()]
    return [tuple(p) for p in multiset_permutations(colors)]


def expansion_numerator(R: SymRatFunction, colors) -> ColoredLaurentPoly:
    """
    The numerator P over the positions of a color sequence

    Position a of `colors` carries the next unused variable of its color. With
    the variables so placed, R equals P / prod_{a<b} (z_a - z_b): the cross-color
    denominator is reoriented along positions, which costs the sign of the color
    inversions, and the same-color differences are multiplied into both sides.
    P is returned with a single block of len(colors) slots.
    """
    colors = tuple(colors)
    num = R.numerator
    n = len(colors)
    if tuple(colors.count(c) for c in R.cd.colors) != num.profile:
        raise ConfigurationError(
            "Color sequence {0} does not match profile {1}".format(colors, num.profile)
        )
    seen = {}
    position = [0] * n
    for p, c in enumerate(colors):
        idx = seen.get(c, 0)
        seen[c] = idx + 1
        position[num.slot(c, idx + 1)] = p

    inversions = sum(1 for a in range(n) for b in range(a + 1, n) if colors[a] > colors[b])
    placed = num.permute(position)
    poly = ColoredLaurentPoly._raw((n,), placed.terms)
    if inversions % 2:
        poly = -poly
    for a in range(n):
        for b in range(a + 1, n):
            if colors[a] == colors[b]:
                poly = poly.times_linear(a, b)
    return poly


def iota(R: SymRatFunction, window, max_variables: int = MAX_VARIABLES) -> LoopShuffleElement:
    """
    The embedding of the Feigin-Odesskii shuffle algebra into the loop shuffle
    algebra, exact on a window

    For every color sequence, P / prod_{a<b} (z_a - q^(-d_ab) z_b) is expanded
    in the region |z_1| << ... << |z_k|, each factor as
    -sum_r q^(d_ab (r + 1)) z_a^r z_b^(-r-1), and the coefficient of
    z_1^d_1 ... z_k^d_k is the coefficient of the word i_1^(d_1) ... i_k^(d_k).

    Parameters
    ----------
    R : SymRatFunction
        A homogeneous function

    window : tuple of int
        (m, M); every word with all exponents inside is computed exactly

    max_variables : int
        Refuse inputs with more variables than this

    Returns
    -------
    LoopShuffleElement
        Exact on the window, with `truncated` set when words outside were dropped
    """
    window = _check_window(window)
    if window is None:
        raise ConfigurationError("iota needs a window")
    cd = R.cd
    n = R.n_variables
    if n > max_variables:
        raise ConfigurationError(
            "The function has {0} variables, above the cap of {1}".format(n, max_variables)
        )
    if R.is_zero:
        raise ConfigurationError("iota of the zero function has no degree")
    degree = WordDegree(tuple(R.profile), R.vdeg)

    out = {}
    truncated = False
    for colors in color_sequences(R.profile):
        P = expansion_numerator(R, colors)
        pairs = [
            (a, b, inverse_zeta_series(cd.d_ij(colors[a], colors[b])))
            for a in range(n)
            for b in range(a + 1, n)
        ]
        for exps, coeff in P.terms.items():
            base = tuple(e - c for c, e in enumerate(exps))
            expanded, cut = expand_pairs(base, pairs, window)
            truncated = truncated or cut
            for final, c in expanded.items():
                w = LoopWord._from_letters(
                    tuple(LoopLetter(i, d) for i, d in zip(colors, final))
                )
                value = coeff * QRat.coerce(c)
                old = out.get(w)
                value = value if old is None else old + value
                if value:
                    out[w] = value
                else:
                    out.pop(w, None)
    logger.debug("iota of profile %s on %s: %d words", R.profile, window, len(out))
    return LoopShuffleElement._raw(cd, degree, out, window, truncated)
