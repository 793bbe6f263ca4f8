import pandas as pd

from ..rootsys import CartanDatum, height
from ..words import LoopWord


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


class FiniteLyndonTable:
    """
    Standard Lyndon words of the positive roots of a finite root system

    The word of a simple root alpha_i is [i]; for higher roots it is the largest
    concatenation l(g1) l(g2) over decompositions alpha = g1 + g2 into positive
    roots with l(g1) < l(g2).

    Parameters
    ----------
    cd : CartanDatum
        The root system

    Examples
    --------
    >>> table = FiniteLyndonTable(build("B", 2))
    >>> table.word((1, 2)).render()
    '1 2 2'
    """

    def __init__(self, cd: CartanDatum):
        self.cd = cd
        self.map = {}
        for alpha in sorted(cd.positive_roots, key=height):
            self.map[alpha] = self._compute(alpha)

    def _compute(self, alpha) -> LoopWord:
        if height(alpha) == 1:
            return LoopWord.letter(alpha.index(1) + 1)
        best = None
        for gamma in self.map:
            rest = _sub(alpha, gamma)
            if rest not in self.map:
                continue
            w1, w2 = self.map[gamma], self.map[rest]
            if w1 < w2:
                cand = w1 + w2
                if best is None or cand > best:
                    best = cand
        return best

    def word(self, alpha) -> LoopWord:
        alpha = self.cd.check_positive_root(alpha)
        return self.map[alpha]

    def words(self) -> dict:
        return dict(self.map)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {"root": alpha, "height": height(alpha), "word": w.render()}
                for alpha, w in self.map.items()
            ]
        )

    def __repr__(self):
        repr_str = ""
        repr_str += "Module: lyndonloop"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Class: FiniteLyndonTable"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Type: {0}".format(self.cd.name)
        repr_str += "\n"
        for alpha, w in self.map.items():
            repr_str += "{0}: {1}".format(alpha, w.render())
            repr_str += "\n"

        return repr_str

    def __str__(self):
        return self.__repr__()


def finite_standard_lyndon(cd: CartanDatum, alpha) -> LoopWord:
    """
    The standard Lyndon word l(alpha) of a positive root

    Parameters
    ----------
    cd : CartanDatum
        The root system

    alpha : tuple of int
        Coefficients of a positive root over the simple roots

    Returns
    -------
    LoopWord
        A word with all exponents zero
    """
    return FiniteLyndonTable(cd).word(alpha)
