import re
from fractions import Fraction
from numbers import Rational

from ..errors import ConfigurationError, PoleError

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<num>\d+)(?:/(?P<den>\d+))?\s*(?P<star>\*)?\s*)?"
    r"(?P<q>q(?:\^(?P<exp>-?\d+))?)?"
)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError("Coefficients must be integers or fractions, got {0!r}".format(value))


class QLaurent:
    """
    Sparse Laurent polynomial in q with rational coefficients

    Parameters
    ----------
    terms : dict, optional
        Mapping of integer exponent to coefficient. Zero coefficients are dropped.

    Examples
    --------
    >>> QLaurent({-2: 3, 0: -1, 5: 1})
    QLaurent('3*q^-2 - 1 + q^5')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[int(exp)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "QLaurent":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls._raw({})

    @classmethod
    def one(cls) -> "QLaurent":
        return cls._raw({0: Fraction(1)})

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "QLaurent":
        """Returns `coeff * q^exp`"""
        return cls({exp: coeff})

    @classmethod
    def constant(cls, coeff) -> "QLaurent":
        return cls({0: coeff})

    @classmethod
    def coerce(cls, value) -> "QLaurent":
        if isinstance(value, QLaurent):
            return value
        return cls.constant(value)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("The zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("The zero polynomial has no exponents")
        return max(self._terms)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def coefficient(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def shift(self, n: int) -> "QLaurent":
        """Multiplies by q^n"""
        if n == 0:
            return self
        return QLaurent._raw({e + n: c for e, c in self._terms.items()})

    def scale(self, factor) -> "QLaurent":
        factor = _as_fraction(factor)
        if not factor:
            return QLaurent.zero()
        return QLaurent._raw({e: c * factor for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> "QLaurent":
        """Returns p(q^k)"""
        if k == 0:
            return QLaurent.constant(sum(self._terms.values(), Fraction(0)))
        return QLaurent._raw({e * k: c for e, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, QLaurent):
            if isinstance(other, (int, Rational)):
                other = QLaurent.constant(other)
            else:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        res = dict(self._terms)
        for e, c in other._terms.items():
            v = res.get(e)
            if v is None:
                res[e] = c
            else:
                v = v + c
                if v:
                    res[e] = v
                else:
                    del res[e]
        return QLaurent._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QLaurent):
            if isinstance(other, (int, Rational)):
                other = QLaurent.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QLaurent):
            if isinstance(other, (int, Rational)):
                return self.scale(other)
            return NotImplemented
        if not self._terms or not other._terms:
            return QLaurent.zero()
        if len(other._terms) == 1:
            ((e2, c2),) = other._terms.items()
            return QLaurent._raw({e + e2: c * c2 for e, c in self._terms.items()})
        res = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                res[e] = res.get(e, 0) + c1 * c2
        return QLaurent._raw({e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial:
                raise ValueError("Only monomials have Laurent polynomial inverses")
            ((e, c),) = self._terms.items()
            return QLaurent._raw({e * n: Fraction(1) / c ** (-n)})
        res = QLaurent.one()
        base = self
        while n:
            if n & 1:
                res = res * base
            base = base * base
            n >>= 1
        return res

    def __eq__(self, other):
        if isinstance(other, QLaurent):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == QLaurent.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, q0) -> Fraction:
        """
        Exact value at a rational point

        Parameters
        ----------
        q0 : int or Fraction
            The value substituted for q

        Returns
        -------
        Fraction
        """
        q0 = _as_fraction(q0)
        if q0 == 0 and any(e < 0 for e in self._terms):
            raise PoleError("Negative powers of q have a pole at q = 0")
        return sum((c * q0 ** e for e, c in self._terms.items()), Fraction(0))

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms):
            coeff = self._terms[exp]
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if exp == 0:
                body = str(mag)
            else:
                power = "q" if exp == 1 else "q^{0}".format(exp)
                body = power if mag == 1 else "{0}*{1}".format(mag, power)
            if not parts:
                parts.append("-" + body if negative else body)
            else:
                parts.append(("- " if negative else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "QLaurent('{0}')".format(self.render())


def parse_laurent(text: str) -> QLaurent:
    """
    Parses the textual format `3*q^-2 - 1 + q^5`

    Parameters
    ----------
    text : str
        A Laurent polynomial as produced by `QLaurent.render`

    Returns
    -------
    QLaurent
    """
    text = text.strip()
    if text == "0":
        return QLaurent.zero()
    terms = {}
    pos = 0
    first = True
    while pos < len(text):
        match = _TERM.match(text, pos)
        if match is None or match.end() == pos:
            raise ConfigurationError("Cannot parse Laurent polynomial: {0!r}".format(text))
        has_coeff = match.group("num") is not None
        has_q = match.group("q") is not None
        if not has_coeff and not has_q:
            raise ConfigurationError("Cannot parse Laurent polynomial: {0!r}".format(text))
        if match.group("star") and not has_q:
            raise ConfigurationError("Dangling '*' in {0!r}".format(text))
        if not first and match.group("sign") is None:
            raise ConfigurationError("Missing operator in {0!r}".format(text))
        coeff = Fraction(1)
        if has_coeff:
            coeff = Fraction(int(match.group("num")), int(match.group("den") or 1))
        if match.group("sign") == "-":
            coeff = -coeff
        exp = 0
        if has_q:
            exp = int(match.group("exp")) if match.group("exp") is not None else 1
        terms[exp] = terms.get(exp, 0) + coeff
        pos = match.end()
        first = False
    return QLaurent(terms)
