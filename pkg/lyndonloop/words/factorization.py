from typing import List, Tuple

from ..errors import PreconditionError
from .word import LoopWord


def _lyndon_key(key: tuple) -> bool:
    return all(key[i:] > key for i in range(1, len(key)))


def is_lyndon(w: LoopWord) -> bool:
    """
    Checks whether a word is strictly smaller than all of its proper suffixes

    Raises
    ------
    PreconditionError
        If the word is empty
    """
    if not w:
        raise PreconditionError("The empty word is not a Lyndon word")
    return _lyndon_key(w.key)


def costandard_factorization(w: LoopWord) -> Tuple[LoopWord, LoopWord]:
    """
    Splits a Lyndon word as w = l1 l2 with l2 its longest proper Lyndon suffix

    Parameters
    ----------
    w : LoopWord
        A Lyndon word with at least two letters

    Returns
    -------
        A tuple (l1, l2); both factors are Lyndon and l1 < w < l2
    """
    if len(w) < 2:
        raise PreconditionError("A single letter has no costandard factorization")
    if not is_lyndon(w):
        raise PreconditionError("{0} is not a Lyndon word".format(w))
    key = w.key
    for i in range(1, len(w)):
        if _lyndon_key(key[i:]):
            return w[:i], w[i:]
    # the last letter is always Lyndon
    raise AssertionError("unreachable")


def canonical_factorization(w: LoopWord) -> List[LoopWord]:
    """
    Factorizes a word into a non-increasing sequence of Lyndon words (Duval)

    Parameters
    ----------
    w : LoopWord
        Any nonempty word

    Returns
    -------
    list of LoopWord
    """
    if not w:
        raise PreconditionError("The empty word has no canonical factorization")
    s = w.key
    n = len(s)
    factors = []
    i = 0
    while i < n:
        j = i + 1
        k = i
        while j < n and s[k] <= s[j]:
            if s[k] < s[j]:
                k = i
            else:
                k += 1
            j += 1
        while i <= k:
            factors.append(w[i : i + j - k])
            i += j - k
    return factors


def shift_exponents(w: LoopWord, n: int) -> LoopWord:
    """Adds `n` to every exponent"""
    return w.shift(n)


def concatenate(words) -> LoopWord:
    out = ()
    for w in words:
        out += w.letters
    return LoopWord._from_letters(out)


def max_shuffle(u: LoopWord, v: LoopWord) -> LoopWord:
    """
    The lexicographically largest interleaving of two words

    At every step the letter is taken from the word whose remaining suffix is
    larger, so a remaining suffix that is a proper prefix of the other loses.
    """
    i = j = 0
    ku, kv = u.key, v.key
    out = []
    while i < len(ku) and j < len(kv):
        if ku[i:] > kv[j:]:
            out.append(u.letters[i])
            i += 1
        else:
            out.append(v.letters[j])
            j += 1
    out.extend(u.letters[i:])
    out.extend(v.letters[j:])
    return LoopWord._from_letters(tuple(out))


def sorted_letters_desc(w: LoopWord) -> LoopWord:
    """The lexicographically largest arrangement of the letters of `w`"""
    return LoopWord._from_letters(tuple(sorted(w.letters, key=lambda x: x.key, reverse=True)))
