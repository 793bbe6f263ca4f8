import logging
from typing import Optional, Tuple

import pandas as pd

from ..errors import ConsistencyError, DomainError, PreconditionError
from ..rootsys import CartanDatum, height
from ..words import (
    LoopWord,
    Ordering,
    canonical_factorization,
    compare_lex,
    costandard_factorization,
)

logger = logging.getLogger(__name__)

MODES = ("pruned", "oracle")


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _floor_ceil(d: int, k: int) -> Tuple[int, int]:
    return d // k, -((-d) // k)


class LoopLyndonTable:
    """
    The bijection between loop roots (alpha, d) and standard Lyndon loop words

    Only the fundamental domain 1 <= d <= |alpha| is stored; other vertical
    degrees are obtained by shifting every exponent by the number of periods.

    Parameters
    ----------
    cd : CartanDatum
        The root system

    mode : str
        `pruned` restricts each part (g, d_k) of a decomposition to
        floor(d / |alpha|) |g| <= d_k <= ceil(d / |alpha|) |g|; `oracle`
        searches the full range |d_k| <= |alpha| |g| and is used to cross-check

    Examples
    --------
    >>> table = LoopLyndonTable(build("A", 2))
    >>> table.word((1, 1), 1).render()
    '2^(1) 1'
    """

    def __init__(self, cd: CartanDatum, mode: str = "pruned"):
        if mode not in MODES:
            raise ValueError("mode must be one of {0}".format(MODES))
        self.cd = cd
        self.mode = mode
        self.fundamental = {}
        for alpha in sorted(cd.positive_roots, key=height):
            for d in range(1, height(alpha) + 1):
                w = self.compute(alpha, d)
                self.fundamental[(alpha, d)] = w
        logger.debug(
            "Built %s loop Lyndon table with %d entries", cd.name, len(self.fundamental)
        )

    def _range(self, alpha, d: int, gamma) -> range:
        k, g = height(alpha), height(gamma)
        if self.mode == "oracle":
            return range(-k * g + min(d, 0), k * g + max(d, 0) + 1)
        lo, hi = _floor_ceil(d, k)
        return range(lo * g, hi * g + 1)

    def compute(self, alpha, d: int) -> LoopWord:
        """
        Runs the recursion for (alpha, d) directly, without using periodicity
        for (alpha, d) itself
        """
        alpha = tuple(alpha)
        if height(alpha) == 1:
            return LoopWord.letter(alpha.index(1) + 1, d)
        best = None
        for gamma in self.cd.positive_roots:
            if height(gamma) >= height(alpha):
                break
            rest = _sub(alpha, gamma)
            if not self.cd.is_positive_root(rest):
                continue
            rest_range = self._range(alpha, d, rest)
            for d1 in self._range(alpha, d, gamma):
                d2 = d - d1
                if d2 not in rest_range:
                    continue
                w1 = self.word(gamma, d1)
                w2 = self.word(rest, d2)
                if w1 < w2:
                    cand = w1 + w2
                    if best is None or cand > best:
                        best = cand
        if best is None:
            raise ConsistencyError("No Lyndon decomposition found for {0}".format((alpha, d)))
        return best

    def word(self, alpha, d: int) -> LoopWord:
        """l(alpha, d) via the fundamental domain and exponent shifts"""
        alpha = tuple(alpha)
        k = height(alpha)
        if k == 1:
            if not self.cd.is_positive_root(alpha):
                raise DomainError("{0} is not a positive root".format(alpha))
            return LoopWord.letter(alpha.index(1) + 1, d)
        periods, rep = divmod(d - 1, k)
        try:
            base = self.fundamental[(alpha, rep + 1)]
        except KeyError:
            raise DomainError(
                "{0} is not a positive root of {1}".format(alpha, self.cd.name)
            )
        return base.shift(periods)

    def degree_of(self, w: LoopWord) -> Tuple[tuple, int]:
        return w.hdeg(self.cd.rank), w.vdeg

    def is_standard_lyndon(self, w: LoopWord) -> bool:
        if not w:
            return False
        alpha, d = self.degree_of(w)
        if not self.cd.is_positive_root(alpha):
            return False
        return self.word(alpha, d) == w

    def lookup(self, w: LoopWord) -> Optional[Tuple[tuple, int]]:
        """The loop root of a standard Lyndon word, or None"""
        if self.is_standard_lyndon(w):
            return self.degree_of(w)
        return None

    def __eq__(self, other):
        if not isinstance(other, LoopLyndonTable):
            return NotImplemented
        return self.cd == other.cd and self.fundamental == other.fundamental

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for (alpha, d), w in self.fundamental.items():
            rows.append(
                {
                    "root": alpha,
                    "height": height(alpha),
                    "d": d,
                    "word": w.render(),
                }
            )
        df = pd.DataFrame(rows)
        df["order"] = df["root"].map(self.cd.positive_roots.index)
        return df.sort_values(["order", "d"]).drop(columns="order").reset_index(drop=True)

    def __repr__(self):
        repr_str = ""
        repr_str += "Module: lyndonloop"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Class: LoopLyndonTable"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Type: {0}".format(self.cd.name)
        repr_str += "\n"
        repr_str += "Mode: {0}".format(self.mode)
        repr_str += "\n"
        repr_str += "Fundamental entries: {0}".format(len(self.fundamental))
        repr_str += "\n"

        return repr_str

    def __str__(self):
        return self.__repr__()


def loop_standard_lyndon(table: LoopLyndonTable, alpha, d: int) -> LoopWord:
    return table.word(alpha, d)


def lyndon_table(table: LoopLyndonTable) -> pd.DataFrame:
    """
    Gets the fundamental domain of a loop Lyndon table as a dataframe

    Returns
    -------
        One row per (root, d) with 1 <= d <= |root|
    """
    return table.to_frame()


def loop_order_compare(table: LoopLyndonTable, x, y) -> Ordering:
    """
    Compares loop roots through their words: (a, d) < (b, e) iff l(a, -d) < l(b, -e)

    Parameters
    ----------
    table : LoopLyndonTable
        The Lyndon table

    x, y : tuple
        Pairs (root, d)
    """
    (alpha, d), (beta, e) = x, y
    return compare_lex(table.word(alpha, -d), table.word(beta, -e))


def minimal_costandard_split(table: LoopLyndonTable, alpha, d: int):
    """
    Degrees of the two costandard factors of l(alpha, d)

    Returns
    -------
        ((gamma1, d1), (gamma2, d2)); both factors are standard Lyndon words

    Raises
    ------
    PreconditionError
        If alpha is a simple root
    """
    alpha = table.cd.check_positive_root(alpha)
    if height(alpha) < 2:
        raise PreconditionError("A simple root has no costandard split")
    w1, w2 = costandard_factorization(table.word(alpha, d))
    parts = []
    for w in (w1, w2):
        degree = table.lookup(w)
        if degree is None:
            raise ConsistencyError("Costandard factor {0} is not standard".format(w))
        parts.append(degree)
    return tuple(parts)


def enumerate_standard_words(table: LoopLyndonTable, degree, upper=None, window=None) -> list:
    """
    Standard words of a given degree, in decreasing order

    A standard word is a concatenation l1 l2 ... lk of standard Lyndon loop words
    with l1 >= l2 >= ... >= lk.

    Parameters
    ----------
    table : LoopLyndonTable
        The Lyndon table

    degree : tuple
        (hdeg, vdeg)

    upper : LoopWord, optional
        Only words w <= upper are returned

    window : tuple, optional
        (m, M): only words with every exponent in [m, M] are returned

    Returns
    -------
    list of (LoopWord, tuple of factors)
    """
    if upper is None and window is None:
        raise PreconditionError("Standard words of a degree need an upper bound or a window")
    hdeg, vdeg = degree
    hdeg = tuple(hdeg)
    total = height(hdeg)
    if total == 0:
        return [(LoopWord.empty(), ())] if vdeg == 0 else []

    candidates = []
    for gamma in table.cd.positive_roots:
        if any(g > h for g, h in zip(gamma, hdeg)):
            continue
        g = height(gamma)
        lo, hi = None, None
        if upper is not None:
            e_u = upper.letters[0].exponent
            lo = (e_u - 1) * g + 1
            hi = vdeg - (total - g) * (e_u - 1)
        if window is not None:
            m, big_m = window
            wlo, whi = m * g, big_m * g
            lo = wlo if lo is None else max(lo, wlo)
            hi = whi if hi is None else min(hi, whi)
        for f in range(lo, hi + 1):
            w = table.word(gamma, f)
            if upper is not None and w > upper:
                continue
            if window is not None and not all(window[0] <= x.exponent <= window[1] for x in w):
                continue
            candidates.append((w, gamma, f))
    candidates.sort(key=lambda c: c[0].key, reverse=True)

    results = []

    def extend(start, rem_h, rem_v, chosen):
        if not any(rem_h):
            if rem_v == 0:
                results.append(tuple(chosen))
            return
        for idx in range(start, len(candidates)):
            w, gamma, f = candidates[idx]
            if any(g > h for g, h in zip(gamma, rem_h)):
                continue
            chosen.append(w)
            extend(idx, _sub(rem_h, gamma), rem_v - f, chosen)
            chosen.pop()

    extend(0, hdeg, vdeg, [])

    out = []
    for factors in results:
        w = LoopWord.empty()
        for x in factors:
            w = w + x
        if upper is not None and w > upper:
            continue
        out.append((w, factors))
    out.sort(key=lambda item: item[0].key, reverse=True)
    return out


def is_standard(table: LoopLyndonTable, w: LoopWord) -> bool:
    """Every factor of the canonical factorization of `w` is a standard Lyndon word"""
    if not w:
        return True
    return all(table.is_standard_lyndon(x) for x in canonical_factorization(w))
