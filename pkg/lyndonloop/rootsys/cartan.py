from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from ..errors import ConfigurationError, DomainError, PreconditionError

Root = Tuple[int, ...]

TYPE_LETTERS = ("A", "B", "C", "D", "E", "F", "G")
CLASSICAL_TYPES = ("A", "B", "C", "D")


def _check_rank(type_letter: str, rank: int):
    if type_letter not in TYPE_LETTERS:
        raise ConfigurationError("Unknown Cartan type: {0!r}".format(type_letter))
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }[type_letter]
    if not valid:
        raise ConfigurationError(
            "Invalid rank {0} for type {1}".format(rank, type_letter)
        )


def _symmetrized(type_letter: str, n: int):
    """Symmetrizers d_i and the symmetric matrix d_ij = (alpha_i, alpha_j)"""
    if type_letter == "F":
        return [2, 2, 1, 1], [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if type_letter == "G":
        return [1, 3], [[2, -3], [-3, 6]]

    if type_letter == "B":
        sym = [2] * (n - 1) + [1]
    elif type_letter == "C":
        sym = [1] * (n - 1) + [2]
    else:
        sym = [1] * n

    edges = []
    if type_letter in ("A", "B", "C"):
        edges = [(i, i + 1) for i in range(n - 1)]
    elif type_letter == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif type_letter == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]

    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = 2 * sym[i]
    for i, j in edges:
        val = -max(sym[i], sym[j])
        mat[i][j] = mat[j][i] = val
    return sym, mat


class CartanDatum:
    """
    Finite root system data: Cartan matrix, symmetrized pairing and positive roots

    Roots are integer tuples of coefficients over the simple roots, and colors
    (simple root indices) run over 1..n.

    Parameters
    ----------
    type_letter : str
        One of A, B, C, D, E, F, G

    rank : int
        Rank of the root system

    symmetrizers : sequence of int
        Minimal d_i with (alpha_i, alpha_i) = 2 d_i

    symmetric : sequence of sequence of int
        The matrix d_ij = (alpha_i, alpha_j)

    order : tuple of int, optional
        Records the permutation relating this labelling to the standard one
    """

    def __init__(
        self,
        type_letter: str,
        rank: int,
        symmetrizers: Sequence[int],
        symmetric,
        order=None,
    ):
        self.type_letter = type_letter
        self.rank = rank
        self.symmetrizers = tuple(int(x) for x in symmetrizers)
        self.d = np.array(symmetric, dtype=np.int64)
        if self.d.shape != (rank, rank) or not np.array_equal(self.d, self.d.T):
            raise ConfigurationError("The symmetrized Cartan matrix must be square and symmetric")
        self.a = self.d // np.array(self.symmetrizers, dtype=np.int64)[:, None]
        if not np.array_equal(self.a * np.array(self.symmetrizers)[:, None], self.d):
            raise ConfigurationError("Symmetrizers do not divide the symmetrized matrix")
        self.order = tuple(order) if order is not None else tuple(range(1, rank + 1))

        self._d = tuple(tuple(int(x) for x in row) for row in self.d)
        self._a = tuple(tuple(int(x) for x in row) for row in self.a)
        self._roots = _generate_positive_roots(self._a, rank)
        self._root_set = frozenset(self._roots)
        self.labels = max(self._roots, key=sum)
        self._two_rho = tuple(
            int(x) for x in np.sum(np.array(self._roots, dtype=np.int64), axis=0)
        )

    @property
    def n(self) -> int:
        return self.rank

    @property
    def name(self) -> str:
        return "{0}{1}".format(self.type_letter, self.rank)

    @property
    def colors(self) -> range:
        return range(1, self.rank + 1)

    @property
    def is_classical(self) -> bool:
        return self.type_letter in CLASSICAL_TYPES and self.order == tuple(
            range(1, self.rank + 1)
        )

    def d_ij(self, i: int, j: int) -> int:
        """(alpha_i, alpha_j) for colors i, j in 1..n"""
        return self._d[i - 1][j - 1]

    def a_ij(self, i: int, j: int) -> int:
        return self._a[i - 1][j - 1]

    def d_i(self, i: int) -> int:
        return self.symmetrizers[i - 1]

    def simple_root(self, i: int) -> Root:
        if i not in self.colors:
            raise DomainError("Color {0} is not in 1..{1}".format(i, self.rank))
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def zero_root(self) -> Root:
        return (0,) * self.rank

    @property
    def positive_roots(self) -> list:
        return list(self._roots)

    def is_positive_root(self, alpha) -> bool:
        return tuple(alpha) in self._root_set

    def is_root(self, alpha) -> bool:
        alpha = tuple(alpha)
        return alpha in self._root_set or tuple(-x for x in alpha) in self._root_set

    def check_positive_root(self, alpha) -> Root:
        alpha = tuple(int(x) for x in alpha)
        if alpha not in self._root_set:
            raise DomainError("{0} is not a positive root of {1}".format(alpha, self.name))
        return alpha

    def pairing(self, alpha, beta) -> int:
        """Symmetric bilinear form sum k_i l_j d_ij"""
        total = 0
        for i, k in enumerate(alpha):
            if k:
                row = self._d[i]
                total += k * sum(row[j] * l for j, l in enumerate(beta) if l)
        return total

    def coroot_pairing(self, alpha, i: int) -> int:
        """<alpha, alpha_i^vee> = sum_j k_j a_ij"""
        row = self._a[i - 1]
        return sum(row[j] * k for j, k in enumerate(alpha))

    @property
    def highest_root(self) -> Root:
        return self.labels

    def theta_coroot_pairing(self, alpha) -> int:
        """<alpha, theta^vee> = 2 (alpha, theta) / (theta, theta)"""
        num = 2 * self.pairing(alpha, self.labels)
        den = self.pairing(self.labels, self.labels)
        if num % den:
            raise DomainError("{0} does not pair integrally with theta".format(alpha))
        return num // den

    @property
    def two_rho(self) -> Root:
        return self._two_rho

    @property
    def rho(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self._two_rho)

    @property
    def rho_vee(self) -> Root:
        """rho^vee as a coweight: the sum of all fundamental coweights"""
        return (1,) * self.rank

    def coweight_pairing(self, alpha, mu) -> int:
        """(alpha, mu) for mu given in the basis of fundamental coweights"""
        return sum(k * m for k, m in zip(alpha, mu))

    def length_pairing_2rho(self, mu) -> int:
        """
        Length of the translation by a dominant coweight, (2 rho, mu)

        Raises
        ------
        PreconditionError
            If mu is not dominant
        """
        mu = tuple(mu)
        if len(mu) != self.rank:
            raise PreconditionError("Coweight must have {0} coordinates".format(self.rank))
        if any(m < 0 for m in mu):
            raise PreconditionError("Coweight {0} is not dominant".format(mu))
        return sum(self.coweight_pairing(alpha, mu) for alpha in self._roots)

    def permuted(self, order: Sequence[int]) -> "CartanDatum":
        """
        Relabels the simple roots so that the new color c is the old color order[c-1]

        The total order on colors used by words is always 1 < 2 < ... < n, so a
        permutation here expresses a different order of the original simple roots.
        """
        order = tuple(int(x) for x in order)
        if sorted(order) != list(range(1, self.rank + 1)):
            raise ConfigurationError("{0} is not a permutation of 1..{1}".format(order, self.rank))
        idx = [c - 1 for c in order]
        sym = [self.symmetrizers[i] for i in idx]
        mat = [[self._d[i][j] for j in idx] for i in idx]
        composed = tuple(self.order[i] for i in idx)
        return CartanDatum(self.type_letter, self.rank, sym, mat, order=composed)

    def to_dict(self) -> dict:
        return {
            "type": self.type_letter,
            "rank": self.rank,
            "order": list(self.order),
            "a": self.a.tolist(),
            "d": self.d.tolist(),
            "symmetrizers": list(self.symmetrizers),
            "labels": list(self.labels),
            "positive_roots": [list(r) for r in self._roots],
        }

    def __eq__(self, other):
        if not isinstance(other, CartanDatum):
            return NotImplemented
        return (
            self.type_letter == other.type_letter
            and self._d == other._d
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.type_letter, self._d, self.order))

    def __repr__(self):
        repr_str = ""
        repr_str += "Module: lyndonloop"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Class: CartanDatum"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Type: {0}".format(self.name)
        repr_str += "\n"
        repr_str += "Positive roots: {0}".format(len(self._roots))
        repr_str += "\n"
        repr_str += "Highest root: {0}".format(self.labels)
        repr_str += "\n"
        repr_str += "Cartan matrix:"
        repr_str += "\n"
        repr_str += str(self.a)
        repr_str += "\n"

        return repr_str

    def __str__(self):
        return self.__repr__()


def _generate_positive_roots(a, n) -> list:
    """
    Breadth-first closure from the simple roots

    alpha + alpha_i is a root iff p - <alpha, alpha_i^vee> > 0, where p is the
    length of the alpha_i-string below alpha.
    """
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for alpha in layer:
            for i in range(n):
                p = 0
                lower = list(alpha)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(a[i][j] * alpha[j] for j in range(n))
                if p - pairing > 0:
                    beta = tuple(x + (1 if k == i else 0) for k, x in enumerate(alpha))
                    if beta not in roots:
                        nxt.add(beta)
        roots.update(nxt)
        layer = list(nxt)
    return sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))


def build(type_letter: str, rank: int) -> CartanDatum:
    """
    Builds the Cartan datum of a finite type with the simple roots labelled 1 < ... < n

    Parameters
    ----------
    type_letter : str
        One of A, B, C, D, E, F, G (case insensitive)

    rank : int
        Rank; D needs n >= 4, B and C n >= 2, E 6..8, F 4 and G 2

    Returns
    -------
    CartanDatum

    Examples
    --------
    >>> build("B", 2).highest_root
    (1, 2)
    """
    type_letter = str(type_letter).upper()
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise ConfigurationError("Rank must be an integer, got {0!r}".format(rank))
    _check_rank(type_letter, rank)
    sym, mat = _symmetrized(type_letter, rank)
    return CartanDatum(type_letter, rank, sym, mat)
