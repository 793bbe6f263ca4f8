from typing import NamedTuple, Tuple

from ..errors import DomainError
from ..rootsys import CartanDatum, height


class AffineRoot(NamedTuple):
    """An element (lambda, d) of Q x Z, lambda given by its simple-root coefficients"""

    finite_part: Tuple[int, ...]
    d: int

    def __neg__(self):
        return AffineRoot(tuple(-x for x in self.finite_part), -self.d)

    def to_dict(self) -> dict:
        return {"alpha": list(self.finite_part), "d": self.d}

    def render(self) -> str:
        return "({0}, {1})".format(list(self.finite_part), self.d)


def affine_simple_root(cd: CartanDatum, i: int) -> AffineRoot:
    """alpha_i for i in 1..n, and alpha_0 = (-theta, 1)"""
    if i == 0:
        return AffineRoot(tuple(-x for x in cd.highest_root), 1)
    return AffineRoot(cd.simple_root(i), 0)


def affine_indices(cd: CartanDatum) -> range:
    return range(0, cd.rank + 1)


def is_positive_affine(cd: CartanDatum, x: AffineRoot) -> bool:
    """
    Positive real affine roots: Delta+ x Z>=0 and Delta- x Z>0
    """
    lam, d = x
    if cd.is_positive_root(lam):
        return d >= 0
    if cd.is_positive_root(tuple(-k for k in lam)):
        return d > 0
    return False


def is_real_affine_root(cd: CartanDatum, x: AffineRoot) -> bool:
    return cd.is_root(x.finite_part)


def _coroot_pairing(cd: CartanDatum, x: AffineRoot, y: AffineRoot) -> int:
    """<x, y^vee> = 2 (x, y) / (y, y) for a real root y"""
    num = 2 * cd.pairing(x.finite_part, y.finite_part)
    den = cd.pairing(y.finite_part, y.finite_part)
    if den == 0 or num % den:
        raise DomainError("{0} does not pair integrally with {1}".format(x, y))
    return num // den


def affine_cartan_entry(cd: CartanDatum, i: int, j: int) -> int:
    """<alpha_j, alpha_i^vee> over the affine index set"""
    return _coroot_pairing(cd, affine_simple_root(cd, j), affine_simple_root(cd, i))


def apply_simple(cd: CartanDatum, i: int, x: AffineRoot) -> AffineRoot:
    """
    The simple reflection s_i on Q x Z

    s_i (lambda, d) = (lambda - <lambda, alpha_i^vee> alpha_i, d) for i in 1..n, and
    s_0 (lambda, d) = (lambda - <lambda, theta^vee> theta, d + <lambda, theta^vee>)

    Parameters
    ----------
    cd : CartanDatum
        The finite root system

    i : int
        Affine index in 0..n

    x : AffineRoot
        The element acted on
    """
    lam, d = tuple(x[0]), x[1]
    if i == 0:
        k = cd.theta_coroot_pairing(lam)
        theta = cd.highest_root
        return AffineRoot(tuple(a - k * t for a, t in zip(lam, theta)), d + k)
    if i not in cd.colors:
        raise DomainError("Affine index {0} is not in 0..{1}".format(i, cd.rank))
    k = cd.coroot_pairing(lam, i)
    lam = list(lam)
    lam[i - 1] -= k
    return AffineRoot(tuple(lam), d)


def apply_word(cd: CartanDatum, indices, x: AffineRoot) -> AffineRoot:
    """Applies s_{i_1} s_{i_2} ... s_{i_r}, so the last index acts first"""
    for i in reversed(list(indices)):
        x = apply_simple(cd, i, x)
    return x


def apply_translation(cd: CartanDatum, mu, x: AffineRoot) -> AffineRoot:
    """
    The translation by a coweight mu: (lambda, d) -> (lambda, d - (lambda, mu))

    Parameters
    ----------
    mu : tuple of int
        Coordinates in the basis of fundamental coweights
    """
    lam, d = tuple(x[0]), x[1]
    return AffineRoot(lam, d - cd.coweight_pairing(lam, mu))


def apply_rho_vee(cd: CartanDatum, x: AffineRoot, power: int = 1) -> AffineRoot:
    """The translation by rho^vee, applied `power` times (negative powers invert)"""
    lam, d = tuple(x[0]), x[1]
    return AffineRoot(lam, d - power * height(lam))
