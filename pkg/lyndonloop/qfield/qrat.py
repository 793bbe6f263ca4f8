from fractions import Fraction
from math import lcm
from numbers import Rational

import sympy

from ..errors import ConfigurationError, PoleError
from .laurent import QLaurent, parse_laurent

_Q = sympy.Symbol("q")


def _to_zz_poly(p: QLaurent):
    """Integer-cleared sympy polynomial of a Laurent polynomial with min exponent 0"""
    denom = 1
    for _, c in p.items():
        denom = lcm(denom, c.denominator)
    top = p.max_exp
    coeffs = [0] * (top + 1)
    for e, c in p.items():
        coeffs[top - e] = int(c * denom)
    return sympy.Poly.from_list(coeffs, _Q, domain="ZZ"), denom


def _from_zz_poly(poly, denom: int) -> QLaurent:
    coeffs = poly.all_coeffs()
    top = len(coeffs) - 1
    return QLaurent({top - i: Fraction(int(c), denom) for i, c in enumerate(coeffs)})


def _reduce(num: QLaurent, den: QLaurent):
    if den.is_zero:
        raise ZeroDivisionError("Denominator of a rational function cannot be zero")
    if num.is_zero:
        return QLaurent.zero(), QLaurent.one()

    if den.is_monomial:
        ((e, c),) = den.items()
        return num.shift(-e).scale(1 / c), QLaurent.one()

    num_shift = num.min_exp
    num0 = num.shift(-num_shift)
    den0 = den.shift(-den.min_exp)
    num_shift -= den.min_exp

    p_num, d_num = _to_zz_poly(num0)
    p_den, d_den = _to_zz_poly(den0)
    g = p_num.gcd(p_den)
    if g.degree() > 0:
        p_num = p_num.exquo(g)
        p_den = p_den.exquo(g)
    num0 = _from_zz_poly(p_num, d_num)
    den0 = _from_zz_poly(p_den, d_den)

    lead = den0.coefficient(0)
    return num0.shift(num_shift).scale(1 / lead), den0.scale(1 / lead)


class QRat:
    """
    Exact element of the field of rational functions Q(q)

    The representation is canonical: the denominator is a polynomial with constant
    term 1 and the numerator shares no polynomial factor with it. Two elements are
    equal iff their representations are identical.

    Parameters
    ----------
    num : QLaurent, int or Fraction
        The numerator

    den : QLaurent, int or Fraction, optional
        The denominator, defaults to 1
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = QLaurent.coerce(num)
        den = QLaurent.coerce(den)
        if den.is_one:
            self.num, self.den = num, den
        else:
            self.num, self.den = _reduce(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: QLaurent, den: QLaurent) -> "QRat":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "QRat":
        return cls._raw(QLaurent.zero(), QLaurent.one())

    @classmethod
    def one(cls) -> "QRat":
        return cls._raw(QLaurent.one(), QLaurent.one())

    @classmethod
    def q_power(cls, exp: int, coeff=1) -> "QRat":
        return cls._raw(QLaurent.monomial(exp, coeff), QLaurent.one())

    @classmethod
    def coerce(cls, value) -> "QRat":
        if isinstance(value, QRat):
            return value
        if isinstance(value, QLaurent):
            return cls._raw(value, QLaurent.one())
        if isinstance(value, (int, Rational)):
            return cls._raw(QLaurent.constant(value), QLaurent.one())
        raise TypeError("Cannot convert {0!r} to QRat".format(value))

    @classmethod
    def from_str(cls, text: str) -> "QRat":
        return parse_qrat(text)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_laurent(self) -> bool:
        return self.den.is_one

    def as_laurent(self) -> QLaurent:
        if not self.den.is_one:
            raise ValueError("{0} is not a Laurent polynomial".format(self))
        return self.num

    def __bool__(self):
        return not self.num.is_zero

    def __add__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.den == other.den:
            if self.den.is_one:
                return QRat._raw(self.num + other.num, self.den)
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return QRat.zero()
        if self.den.is_one and other.den.is_one:
            return QRat._raw(self.num * other.num, self.den)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero:
            raise ZeroDivisionError("Division by zero in Q(q)")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("Division by zero in Q(q)")
        if self.is_zero:
            return QRat.zero()
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return QRat._raw(self.num ** n, self.den ** n)

    def __eq__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def evaluate(self, q0) -> Fraction:
        """
        Exact rational value at q = q0

        Raises
        ------
        PoleError
            If the denominator vanishes at q0
        """
        den = self.den.evaluate(q0)
        if den == 0:
            raise PoleError("{0} has a pole at q = {1}".format(self, q0))
        return self.num.evaluate(q0) / den

    def render(self) -> str:
        if self.den.is_one:
            return self.num.render()
        return "({0})/({1})".format(self.num.render(), self.den.render())

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "QRat('{0}')".format(self.render())


def parse_qrat(text: str) -> QRat:
    """
    Parses `(num)/(den)` or a bare Laurent polynomial

    Parameters
    ----------
    text : str
        Text as produced by `QRat.render`

    Returns
    -------
    QRat
    """
    text = text.strip()
    if text.startswith("(") and text.endswith(")") and ")/(" in text:
        num, den = text[1:-1].split(")/(", 1)
        den = parse_laurent(den)
        if den.is_zero:
            raise ConfigurationError("Zero denominator in {0!r}".format(text))
        return QRat(parse_laurent(num), den)
    return QRat.coerce(parse_laurent(text))


def field_ops(a, b, op: str) -> QRat:
    """
    Applies one of the field operations `add`, `sub`, `mul`, `div`

    Raises
    ------
    ZeroDivisionError
        When dividing by zero
    """
    a, b = QRat.coerce(a), QRat.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ConfigurationError("Unknown field operation: {0}".format(op))


def evaluate_at(a, q0) -> Fraction:
    """Exact evaluation of `a` at the rational point `q0`"""
    return QRat.coerce(a).evaluate(q0)
