import logging

from ..errors import TruncationError, ZeroElementError
from ..lyndon import enumerate_standard_words
from .finite import FiniteShuffleElement

logger = logging.getLogger(__name__)


def _outside(w, window) -> bool:
    m, big_m = window
    return any(not m <= x.exponent <= big_m for x in w.letters)


def leading_word(x, table=None):
    """
    The largest word with nonzero coefficient, and its coefficient

    For an element known on a window the stored maximum is certified in one of
    two ways. Either it equals the ceiling, a word bounding the whole support
    from above (for a product of letters, their decreasing arrangement). Or the
    element lies in the image of the quantum loop group, in which case its true
    leading word is standard; when every standard word strictly between the
    stored maximum and the ceiling lies inside the window, none of them occurs.

    Parameters
    ----------
    x : LoopShuffleElement or FiniteShuffleElement
        The element

    table : LoopLyndonTable, optional
        Needed for the second certificate

    Returns
    -------
    (LoopWord, QRat)

    Raises
    ------
    ZeroElementError
        If the element is zero
    TruncationError
        If the window does not certify the answer; `window` on the exception is a
        wider window worth retrying with, when one is known
    """
    if isinstance(x, FiniteShuffleElement):
        return x.leading_term()

    top = x.max_stored()
    if x.is_exact:
        if top is None:
            raise ZeroElementError("The zero element has no leading word")
        return top, x.terms[top]

    if x.ceiling is not None and top is not None and top == x.ceiling:
        return top, x.terms[top]

    if x.ceiling is None or not x.in_image or table is None:
        raise TruncationError(
            "The stored maximum {0} cannot be certified without a ceiling, image "
            "membership and a Lyndon table".format(top),
            window=None,
        )

    candidates = enumerate_standard_words(table, tuple(x.degree), upper=x.ceiling)
    escaped = [
        w for w, _ in candidates if (top is None or w > top) and _outside(w, x.window)
    ]
    if escaped:
        m, big_m = x.window
        for w in escaped:
            lo, hi = w.exponent_range()
            m, big_m = min(m, lo), max(big_m, hi)
        logger.debug(
            "%d standard words above the stored maximum escape window %s",
            len(escaped),
            x.window,
        )
        raise TruncationError(
            "Standard words such as {0} lie above the stored maximum but outside "
            "the window {1}".format(escaped[0], x.window),
            window=(m, big_m),
        )
    if top is None:
        raise ZeroElementError("The element vanishes")
    return top, x.terms[top]


def certified_leading_word(build, table, window, max_attempts: int = 4):
    """
    Calls `build(window)` and takes the leading word, widening the window on
    truncation errors that suggest a wider one

    Parameters
    ----------
    build : callable
        window -> LoopShuffleElement

    table : LoopLyndonTable
        Passed to `leading_word`

    window : tuple of int
        The first window tried

    Returns
    -------
    (LoopWord, QRat, tuple)
        The leading word, its coefficient and the window that certified it
    """
    window = tuple(window)
    for _ in range(max_attempts):
        try:
            element = build(window)
            w, c = leading_word(element, table)
            return w, c, window
        except TruncationError as exc:
            if exc.window is None:
                raise
            wider = (min(window[0], exc.window[0]), max(window[1], exc.window[1]))
            if wider == window:
                raise
            logger.debug("Widening window %s to %s", window, wider)
            window = wider
    raise TruncationError(
        "No certificate after {0} attempts".format(max_attempts), window=window
    )
