import logging
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import NamedTuple

from ..errors import ConfigurationError, DomainError, PreconditionError
from ..qfield import QRat
from ..rootsys import CartanDatum
from ..words import WordDegree
from .polynomial import ColoredLaurentPoly

logger = logging.getLogger(__name__)

MAX_VARIABLES = 5


class WheelOutcome(NamedTuple):
    """Result of a wheel check; false only when the specialization does not vanish"""

    holds: bool
    applicable: bool

    def __bool__(self):
        return self.holds


def _cross_pairs(profile) -> int:
    return sum(
        profile[i] * profile[j] for i in range(len(profile)) for j in range(i + 1, len(profile))
    )


class SymRatFunction:
    """
    A color-symmetric rational function r / prod (z_{ia} - z_{i'a'})

    The denominator runs over all pairs of variables of different colors, each
    factor written with the smaller color first; it is fixed by the profile and
    never stored.

    Parameters
    ----------
    cd : CartanDatum
        The root system

    numerator : ColoredLaurentPoly
        The symmetric Laurent polynomial r

    check_wheel : bool
        Whether to insist on the wheel conditions, as for elements of the
        positive shuffle algebra
    """

    __slots__ = ("cd", "numerator")

    def __init__(self, cd: CartanDatum, numerator: ColoredLaurentPoly, check_wheel: bool = False):
        if len(numerator.profile) != cd.rank:
            raise DomainError(
                "Profile {0} does not match rank {1}".format(numerator.profile, cd.rank)
            )
        if not numerator.is_symmetric():
            raise PreconditionError("The numerator must be symmetric in each color")
        self.cd = cd
        self.numerator = numerator
        if check_wheel and not satisfies_wheel(self):
            raise PreconditionError("The numerator violates the wheel conditions")

    @classmethod
    def _raw(cls, cd: CartanDatum, numerator: ColoredLaurentPoly) -> "SymRatFunction":
        obj = cls.__new__(cls)
        obj.cd = cd
        obj.numerator = numerator
        return obj

    @classmethod
    def one(cls, cd: CartanDatum) -> "SymRatFunction":
        return cls._raw(cd, ColoredLaurentPoly.constant(cd.zero_root()))

    @property
    def profile(self) -> tuple:
        return self.numerator.profile

    @property
    def n_variables(self) -> int:
        return self.numerator.n_variables

    @property
    def vdeg(self) -> int:
        """
        Total homogeneous degree

        Raises
        ------
        PreconditionError
            If the numerator is not homogeneous or zero
        """
        degrees = self.numerator.degrees()
        if len(degrees) != 1:
            raise PreconditionError("The function has no single degree")
        return degrees.pop() - _cross_pairs(self.profile)

    @property
    def degree(self) -> WordDegree:
        return WordDegree(self.profile, self.vdeg)

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __add__(self, other):
        if not isinstance(other, SymRatFunction):
            return NotImplemented
        return SymRatFunction._raw(self.cd, self.numerator + other.numerator)

    def __sub__(self, other):
        if not isinstance(other, SymRatFunction):
            return NotImplemented
        return SymRatFunction._raw(self.cd, self.numerator - other.numerator)

    def scale(self, factor) -> "SymRatFunction":
        return SymRatFunction._raw(self.cd, self.numerator.scale(factor))

    def __mul__(self, other):
        if isinstance(other, SymRatFunction):
            return fo_mult(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymRatFunction):
            return NotImplemented
        return self.cd == other.cd and self.numerator == other.numerator

    __hash__ = None

    def denominator_render(self) -> str:
        num = self.numerator
        factors = []
        for s in range(num.n_variables):
            for t in range(s + 1, num.n_variables):
                if num.slot_colors()[s] != num.slot_colors()[t]:
                    factors.append(
                        "({0} - {1})".format(num.variable_name(s), num.variable_name(t))
                    )
        return "*".join(factors) or "1"

    def render(self) -> str:
        return "({0})/({1})".format(self.numerator.render(), self.denominator_render())

    def to_dict(self) -> dict:
        out = self.numerator.to_dict()
        out["type"] = self.cd.name
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        repr_str = ""
        repr_str += "Module: lyndonloop"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Class: SymRatFunction"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Type: {0}".format(self.cd.name)
        repr_str += "\n"
        repr_str += "Profile: {0}".format(list(self.profile))
        repr_str += "\n"
        repr_str += "Numerator: {0}".format(self.numerator.render())
        repr_str += "\n"
        repr_str += "Denominator: {0}".format(self.denominator_render())
        repr_str += "\n"

        return repr_str


def _embed(poly: ColoredLaurentPoly, profile: tuple, offsets) -> dict:
    """Places the variables of `poly` into a larger profile, color c starting at offsets[c]"""
    targets = []
    for c, k in enumerate(poly.profile):
        start = sum(profile[:c]) + offsets[c]
        targets.extend(range(start, start + k))
    n = sum(profile)
    out = {}
    for e, coeff in poly.terms.items():
        new = [0] * n
        for s, x in enumerate(e):
            new[targets[s]] = x
        out[tuple(new)] = coeff
    return out


def _vandermonde(poly: ColoredLaurentPoly, slots_by_color) -> ColoredLaurentPoly:
    for slots in slots_by_color:
        for a, b in zip_pairs(slots):
            poly = poly.times_linear(a, b)
    return poly


def zip_pairs(slots):
    slots = list(slots)
    for x in range(len(slots)):
        for y in range(x + 1, len(slots)):
            yield slots[x], slots[y]


def fo_mult(F: SymRatFunction, G: SymRatFunction, max_variables: int = MAX_VARIABLES):
    """
    The symmetrized product of the Feigin-Odesskii shuffle algebra

    F * G = 1 / (k! l!) Sym[F(z_{i,1..k_i}) G(z_{i,k_i+1..}) prod zeta_ij(z_ia / z_jb)]
    with the product over a variable of F and one of G. Cross factors between
    different colors are absorbed into the output denominator, and the remaining
    same-color poles cancel in the symmetrization: after clearing the
    Vandermonde of each color the sum becomes antisymmetric and is divided by
    that Vandermonde exactly.

    Parameters
    ----------
    F, G : SymRatFunction
        The factors

    max_variables : int
        Refuse products with more variables than this

    Returns
    -------
    SymRatFunction

    Raises
    ------
    ConfigurationError
        If the product has too many variables
    """
    if F.cd != G.cd:
        raise PreconditionError("Factors over different root systems")
    cd = F.cd
    k, l = F.profile, G.profile
    profile = tuple(a + b for a, b in zip(k, l))
    n = sum(profile)
    if n > max_variables:
        raise ConfigurationError(
            "The product has {0} variables, above the cap of {1}".format(n, max_variables)
        )

    f_terms = _embed(F.numerator, profile, [0] * cd.rank)
    g_terms = _embed(G.numerator, profile, list(k))
    out = {}
    for e1, c1 in f_terms.items():
        for e2, c2 in g_terms.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            value = c1 * c2
            old = out.get(key)
            out[key] = value if old is None else old + value
    numerator = ColoredLaurentPoly(profile, {e: c for e, c in out.items() if c})

    blocks = [range(sum(profile[:c]), sum(profile[:c]) + profile[c]) for c in range(cd.rank)]
    f_slots = [list(b)[: k[c]] for c, b in enumerate(blocks)]
    g_slots = [list(b)[k[c]:] for c, b in enumerate(blocks)]

    for ci in range(cd.rank):
        for cj in range(cd.rank):
            shift = QRat.q_power(-cd.d_ij(ci + 1, cj + 1))
            for a in f_slots[ci]:
                for b in g_slots[cj]:
                    numerator = numerator.times_linear(a, b, shift)

    sign = 1
    for i in range(cd.rank):
        for j in range(i):
            if (k[i] * l[j]) % 2:
                sign = -sign
    numerator = _vandermonde(numerator, f_slots)
    numerator = _vandermonde(numerator, g_slots)

    anti = ColoredLaurentPoly(profile)
    for perm, s in numerator.color_permutations():
        anti = anti + numerator.permute(perm).scale(s)

    for block in blocks:
        for a, b in zip_pairs(block):
            anti = anti.divide_linear(a, b)

    norm = 1
    for x in list(k) + list(l):
        norm *= factorial(x)
    result = anti.scale(QRat(Fraction(sign, norm)))
    logger.debug("FO product of profiles %s and %s: %d terms", k, l, len(result.terms))
    return SymRatFunction._raw(cd, result)


def upsilon_monomial(cd: CartanDatum, letters, max_variables: int = MAX_VARIABLES):
    """
    The image of e_{i_1,d_1} ... e_{i_k,d_k}: the product of the single-variable
    functions z_{i,1}^d in the given order

    Parameters
    ----------
    letters : sequence of (int, int)
        (color, exponent) pairs; LoopLetter instances work too
    """
    out = SymRatFunction.one(cd)
    for color, d in letters:
        if color not in cd.colors:
            raise DomainError("Color {0} is not in 1..{1}".format(color, cd.rank))
        profile = tuple(1 if c == color else 0 for c in cd.colors)
        single = SymRatFunction._raw(cd, ColoredLaurentPoly(profile, {(d,): 1}))
        out = fo_mult(out, single, max_variables=max_variables)
    return out


def _specialize(poly: ColoredLaurentPoly, assignment: dict) -> dict:
    """
    Substitutes z_s -> w q^p for the slots in `assignment` (slot -> p); the result
    is keyed by (power of w, exponents of the free slots)
    """
    out = {}
    free = [s for s in range(poly.n_variables) if s not in assignment]
    for e, c in poly.terms.items():
        w_power = sum(e[s] for s in assignment)
        q_power = sum(e[s] * p for s, p in assignment.items())
        key = (w_power, tuple(e[s] for s in free))
        value = c * QRat.q_power(q_power)
        old = out.get(key)
        value = value if old is None else old + value
        if value:
            out[key] = value
        else:
            out.pop(key, None)
    return out


def wheel_check(cd: CartanDatum, r: ColoredLaurentPoly, i: int, j: int, symmetric=None):
    """
    The wheel condition for the colors i != j

    z_{i,1}, ..., z_{i,1-a_ij} go to w, w q_i^2, ..., w q_i^(-2 a_ij) and z_{j,1}
    to w q_i^(-a_ij), with q_i = q^(d_i); the condition holds when the result
    vanishes identically. For a symmetric polynomial one choice of slots
    suffices, otherwise every choice is tried.

    Returns
    -------
    WheelOutcome
        With applicable=False (and holds=True) when there are too few variables
    """
    if i == j:
        raise DomainError("The wheel condition needs two distinct colors")
    n = 1 - cd.a_ij(i, j)
    if r.profile[i - 1] < n or r.profile[j - 1] < 1:
        return WheelOutcome(holds=True, applicable=False)
    if symmetric is None:
        symmetric = r.is_symmetric()
    i_slots = list(r.color_slots(i))
    j_slots = list(r.color_slots(j))
    if symmetric:
        choices = [(tuple(i_slots[:n]), j_slots[0])]
    else:
        choices = [(c, t) for c in permutations(i_slots, n) for t in j_slots]
    step = cd.d_ij(i, i)
    for chosen, t in choices:
        assignment = {s: step * idx for idx, s in enumerate(chosen)}
        assignment[t] = -cd.d_ij(i, j)
        if _specialize(r, assignment):
            return WheelOutcome(holds=False, applicable=True)
    return WheelOutcome(holds=True, applicable=True)


def satisfies_wheel(F: SymRatFunction) -> bool:
    """All wheel conditions of the numerator, over every ordered pair of colors"""
    return all(
        wheel_check(F.cd, F.numerator, i, j, symmetric=True)
        for i in F.cd.colors
        for j in F.cd.colors
        if i != j
    )
