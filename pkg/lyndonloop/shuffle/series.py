from functools import lru_cache
from itertools import combinations, permutations

from ..errors import ConfigurationError
from ..qfield import QLaurent
from ..reporting import ReportBuilder, VerificationReport


class PairSeries:
    """
    Coefficients c(0), c(1), ... of a power series in a single ratio z_b / z_a

    Parameters
    ----------
    name : str
        Label used in error messages and reprs

    delta : int
        The pairing exponent the coefficients depend on

    func : callable
        r -> QLaurent

    last : int, optional
        Index of the last nonzero coefficient, None for an infinite series
    """

    __slots__ = ("name", "delta", "last", "_func", "_cache")

    def __init__(self, name: str, delta: int, func, last=None):
        self.name = name
        self.delta = delta
        self.last = last
        self._func = func
        self._cache = {}

    def coefficient(self, r: int) -> QLaurent:
        if r < 0 or (self.last is not None and r > self.last):
            return QLaurent.zero()
        value = self._cache.get(r)
        if value is None:
            value = self._cache[r] = self._func(r)
        return value

    def __repr__(self):
        return "PairSeries({0}, delta={1})".format(self.name, self.delta)


def _ratio_coefficient(delta: int, r: int) -> QLaurent:
    if r == 0:
        return QLaurent.monomial(delta)
    if delta == 0:
        return QLaurent.zero()
    return QLaurent({delta * (r + 1): 1, delta * (r - 1): -1})


@lru_cache(maxsize=None)
def shuffle_ratio_series(delta: int) -> PairSeries:
    """
    Expansion of zeta_ij(z_a / z_b) / zeta_ji(z_b / z_a) in powers of z_b / z_a

    The coefficients are q^delta for r = 0 and q^(delta (r + 1)) - q^(delta (r - 1))
    for r >= 1, with delta = d_ij. For delta = 0 the ratio is 1.
    """
    return PairSeries(
        "shuffle-ratio",
        delta,
        lambda r: _ratio_coefficient(delta, r),
        last=0 if delta == 0 else None,
    )


@lru_cache(maxsize=None)
def finite_ratio_series(delta: int) -> PairSeries:
    """The constant term q^delta alone, which is the finite shuffle weight"""
    return PairSeries("finite-ratio", delta, lambda r: QLaurent.monomial(delta), last=0)


@lru_cache(maxsize=None)
def inverse_zeta_series(delta: int) -> PairSeries:
    """
    1 / (z_a - q^-delta z_b) = -sum_r q^(delta (r + 1)) z_a^r z_b^(-r-1) for |z_a| << |z_b|

    Only the coefficients are stored; the caller accounts for the z_b^-1 factor.
    """
    return PairSeries(
        "inverse-zeta", delta, lambda r: QLaurent.monomial(delta * (r + 1), -1)
    )


def expand_pairs(base, pairs, window):
    """
    Multiplies out a product of pair series and keeps the words inside a window

    Every pair (p, p2, series) with p < p2 contributes sum_r series(r) with the
    exponent at position p raised by r and the one at p2 lowered by r. Raising
    an earlier position only ever increases the prefix sums of the exponent
    vector, so a state whose prefix sums already exceed what a word with all
    exponents in the window allows is discarded.

    Parameters
    ----------
    base : tuple of int
        Exponents before any shift

    pairs : list of (int, int, PairSeries)
        The series, applied in order

    window : tuple of int
        (m, M), the inclusive exponent range of the retained words

    Returns
    -------
    (dict, bool)
        Mapping of final exponent tuple to coefficient, and whether anything was
        discarded because it fell outside the window
    """
    m, big_m = window
    if m > big_m:
        raise ConfigurationError("Empty window [{0}, {1}]".format(m, big_m))
    k = len(base)
    total = sum(base)

    cap = [0] * (k + 1)
    prefix = 0
    truncated = False
    for t in range(1, k):
        prefix += base[t - 1]
        cap[t] = min(t * big_m, total - (k - t) * m) - prefix
        if cap[t] < 0:
            return {}, True

    states = {tuple([0] * k): QLaurent.one()}
    for p, p2, series in pairs:
        if p >= p2:
            raise ValueError("Pairs must be ordered (earlier, later)")
        nxt = {}
        for shift, coeff in states.items():
            sums = _prefix_sums(shift)
            slack = min(cap[t] - sums[t] for t in range(p + 1, p2 + 1))
            top = slack if series.last is None else min(slack, series.last)
            if series.last is None or series.last > slack:
                truncated = True
            for r in range(top + 1):
                c = series.coefficient(r)
                if not c:
                    continue
                new = list(shift)
                new[p] += r
                new[p2] -= r
                new = tuple(new)
                value = coeff * c
                old = nxt.get(new)
                value = value if old is None else old + value
                if value:
                    nxt[new] = value
                else:
                    nxt.pop(new, None)
        states = nxt
        if not states:
            break

    out = {}
    for shift, coeff in states.items():
        exps = tuple(b + s for b, s in zip(base, shift))
        if all(m <= e <= big_m for e in exps):
            out[exps] = coeff
        else:
            truncated = True
    return out, truncated


def _prefix_sums(shift) -> list:
    sums = [0]
    acc = 0
    for s in shift:
        acc += s
        sums.append(acc)
    return sums


def interleavings(k: int, l: int):
    """Positions of the first word in every interleaving of words of lengths k and l"""
    return combinations(range(k + l), k)


def placements(k: int):
    """Every arrangement of k factors; entry p is the factor sitting at position p"""
    return permutations(range(k))


def _divide_series(num: list, den: list, order: int) -> list:
    """Power series num / den up to x^order; den[0] must be a monomial"""
    inv = den[0] ** -1
    out = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else QLaurent.zero()
        for j in range(1, min(n, len(den) - 1) + 1):
            acc = acc - den[j] * out[n - j]
        out.append(acc * inv)
    return out


def shuffle_power_series_check(deltas=range(-3, 4), order: int = 8) -> VerificationReport:
    """
    Compares the closed-form ratio coefficients with long division of
    (1 - q^-delta x) by (q^-delta - x)
    """
    builder = ReportBuilder("power-series", deltas=list(deltas), order=order)
    for delta in deltas:
        num = [QLaurent.one(), QLaurent.monomial(-delta, -1)]
        den = [QLaurent.monomial(-delta), QLaurent.constant(-1)]
        direct = _divide_series(num, den, order)
        series = shuffle_ratio_series(delta)
        for r, value in enumerate(direct):
            closed = series.coefficient(r)
            builder.check(
                closed == value,
                delta=delta,
                r=r,
                closed=closed.render(),
                division=value.render(),
            )
    return builder.finish()
