from itertools import permutations, product

from ..errors import ConsistencyError, DomainError
from ..qfield import QRat, parse_qrat


def _accumulate(out: dict, key, value):
    old = out.get(key)
    value = value if old is None else old + value
    if value:
        out[key] = value
    else:
        out.pop(key, None)


class ColoredLaurentPoly:
    """
    Sparse Laurent polynomial in colored variables z_{i,a}, 1 <= a <= k_i

    The variables are laid out color by color: slot 0 .. k_1 - 1 hold z_{1,1} ..
    z_{1,k_1}, the next k_2 slots hold color 2, and so on. Exponent vectors have
    one entry per slot.

    Parameters
    ----------
    profile : tuple of int
        The counts k_i, one per color

    terms : dict, optional
        Mapping of exponent tuple to coefficient (QRat or anything it accepts)
    """

    __slots__ = ("profile", "terms")

    def __init__(self, profile, terms=None):
        profile = tuple(int(k) for k in profile)
        if any(k < 0 for k in profile):
            raise DomainError("Profiles count variables, got {0}".format(profile))
        n = sum(profile)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise DomainError(
                    "Exponent vector {0} does not match profile {1}".format(exps, profile)
                )
            _accumulate(clean, exps, QRat.coerce(c))
        self.profile = profile
        self.terms = clean

    @classmethod
    def _raw(cls, profile: tuple, terms: dict) -> "ColoredLaurentPoly":
        obj = cls.__new__(cls)
        obj.profile = profile
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, profile, value=1) -> "ColoredLaurentPoly":
        profile = tuple(profile)
        return cls(profile, {(0,) * sum(profile): value})

    @property
    def n_variables(self) -> int:
        return sum(self.profile)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def slot(self, color: int, index: int) -> int:
        """Slot of z_{color,index}, both 1-based"""
        if not 1 <= index <= self.profile[color - 1]:
            raise DomainError("z_{0},{1} is not a variable of {2}".format(color, index, self.profile))
        return sum(self.profile[: color - 1]) + index - 1

    def color_slots(self, color: int) -> range:
        start = sum(self.profile[: color - 1])
        return range(start, start + self.profile[color - 1])

    def slot_colors(self) -> tuple:
        return tuple(c + 1 for c, k in enumerate(self.profile) for _ in range(k))

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __add__(self, other):
        if not isinstance(other, ColoredLaurentPoly):
            return NotImplemented
        if other.profile != self.profile:
            raise DomainError("Cannot add polynomials of different profiles")
        out = dict(self.terms)
        for e, c in other.terms.items():
            _accumulate(out, e, c)
        return ColoredLaurentPoly._raw(self.profile, out)

    def __neg__(self):
        return ColoredLaurentPoly._raw(self.profile, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "ColoredLaurentPoly":
        factor = QRat.coerce(factor)
        if not factor:
            return ColoredLaurentPoly._raw(self.profile, {})
        return ColoredLaurentPoly._raw(
            self.profile, {e: c * factor for e, c in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, ColoredLaurentPoly):
            return self.scale(other)
        if other.profile != self.profile:
            raise DomainError("Cannot multiply polynomials of different profiles")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _accumulate(out, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return ColoredLaurentPoly._raw(self.profile, out)

    def times_linear(self, a: int, b: int, coeff_b=None) -> "ColoredLaurentPoly":
        """Multiplies by z_a - c z_b for slots a, b, with c = coeff_b (default 1)"""
        c_b = QRat.one() if coeff_b is None else QRat.coerce(coeff_b)
        out = {}
        for e, c in self.terms.items():
            ea = list(e)
            ea[a] += 1
            _accumulate(out, tuple(ea), c)
            eb = list(e)
            eb[b] += 1
            _accumulate(out, tuple(eb), -(c * c_b))
        return ColoredLaurentPoly._raw(self.profile, out)

    def permute(self, perm) -> "ColoredLaurentPoly":
        """The polynomial with slot s renamed to perm[s]"""
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(e)
            for s, x in enumerate(e):
                new[perm[s]] = x
            _accumulate(out, tuple(new), c)
        return ColoredLaurentPoly._raw(self.profile, out)

    def color_permutations(self):
        """Every slot permutation preserving colors, with its sign"""
        blocks = [list(self.color_slots(c)) for c in range(1, len(self.profile) + 1)]
        for choice in product(*(permutations(b) for b in blocks)):
            perm = [0] * self.n_variables
            sign = 1
            for block, image in zip(blocks, choice):
                for s, t in zip(block, image):
                    perm[s] = t
                sign *= _sign(image, block)
            yield tuple(perm), sign

    def is_symmetric(self) -> bool:
        """Invariance under the permutations of each color block"""
        for c in range(1, len(self.profile) + 1):
            block = list(self.color_slots(c))
            for s, t in zip(block, block[1:]):
                perm = list(range(self.n_variables))
                perm[s], perm[t] = t, s
                if self.permute(perm).terms != self.terms:
                    return False
        return True

    def divide_linear(self, a: int, b: int) -> "ColoredLaurentPoly":
        """
        Exact quotient by z_a - z_b

        Raises
        ------
        ConsistencyError
            If the division leaves a remainder
        """
        if not self.terms:
            return self
        n = self.n_variables
        lows = [min(e[s] for e in self.terms) for s in range(n)]
        groups = {}
        for e, c in self.terms.items():
            e = [x - lo for x, lo in zip(e, lows)]
            power = e[a]
            e[a] = 0
            groups.setdefault(power, {})[tuple(e)] = c

        quotient = {}
        current = {}
        for power in range(max(groups), 0, -1):
            nxt = dict(groups.get(power, {}))
            for e, c in current.items():
                eb = list(e)
                eb[b] += 1
                _accumulate(nxt, tuple(eb), c)
            current = nxt
            for e, c in current.items():
                full = list(e)
                full[a] = power - 1
                quotient[tuple(x + lo for x, lo in zip(full, lows))] = c

        remainder = dict(groups.get(0, {}))
        for e, c in current.items():
            eb = list(e)
            eb[b] += 1
            _accumulate(remainder, tuple(eb), c)
        if remainder:
            raise ConsistencyError("Polynomial is not divisible by z_{0} - z_{1}".format(a, b))
        return ColoredLaurentPoly._raw(self.profile, quotient)

    def __eq__(self, other):
        if not isinstance(other, ColoredLaurentPoly):
            return NotImplemented
        return self.profile == other.profile and self.terms == other.terms

    __hash__ = None

    def variable_name(self, s: int) -> str:
        colors = self.slot_colors()
        c = colors[s]
        return "z{0}{1}".format(c, s - self.color_slots(c).start + 1)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                self.variable_name(s) if x == 1 else "{0}^{1}".format(self.variable_name(s), x)
                for s, x in enumerate(e)
                if x
            )
            coeff = c.render()
            if not mono:
                parts.append(coeff if c.is_laurent else "({0})".format(coeff))
            elif coeff == "1":
                parts.append(mono)
            else:
                parts.append("({0})*{1}".format(coeff, mono))
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {
            "profile": list(self.profile),
            "terms": [
                {"exponents": list(e), "coeff": c.render()}
                for e, c in sorted(self.terms.items(), reverse=True)
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ColoredLaurentPoly":
        return cls(
            data["profile"],
            {tuple(t["exponents"]): parse_qrat(t["coeff"]) for t in data["terms"]},
        )

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "ColoredLaurentPoly({0}, '{1}')".format(list(self.profile), self.render())


def _sign(image, block) -> int:
    """Sign of the permutation taking block[k] to image[k]"""
    pos = {x: k for k, x in enumerate(block)}
    seq = [pos[x] for x in image]
    sign = 1
    seen = [False] * len(seq)
    for start in range(len(seq)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = seq[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
