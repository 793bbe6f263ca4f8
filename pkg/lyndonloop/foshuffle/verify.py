import logging
from itertools import permutations, product

import numpy as np

from ..errors import ConfigurationError
from ..qfield import QRat, q_binomial
from ..reporting import ReportBuilder, VerificationReport
from ..rootsys import CartanDatum
from ..shuffle import monomial_product, rank, shuffle_loop
from ..shuffle.loop import _shift_bound
from ..words import LoopLetter, LoopWord
from .function import MAX_VARIABLES, SymRatFunction, fo_mult, satisfies_wheel, upsilon_monomial
from .iota import color_sequences, expansion_numerator, iota

logger = logging.getLogger(__name__)


def _word(colors, exps) -> LoopWord:
    return LoopWord._from_letters(tuple(LoopLetter(i, d) for i, d in zip(colors, exps)))


def window_words(profile, vdeg: int, window):
    """Every loop word of the degree with all exponents in the window"""
    m, big_m = window
    k = sum(profile)
    for colors in color_sequences(profile):
        if not k:
            if vdeg == 0:
                yield LoopWord()
            continue
        for head in product(range(m, big_m + 1), repeat=k - 1):
            last = vdeg - sum(head)
            if m <= last <= big_m:
                yield _word(colors, head + (last,))


def verify_composition(cd: CartanDatum, letters, window=(-3, 3)) -> VerificationReport:
    """
    iota(Upsilon(e_{i_1,d_1} ... e_{i_k,d_k})) agrees with the product of the
    letters in the loop shuffle algebra on every word of the window
    """
    letters = [tuple(x) for x in letters]
    builder = ReportBuilder("composition", type=cd.name, letters=letters, window=tuple(window))
    R = upsilon_monomial(cd, letters)
    via_fo = iota(R, window)
    direct = monomial_product(cd, letters, window)
    for w in set(via_fo.terms) | set(direct.terms):
        a = via_fo.terms.get(w, QRat.zero())
        b = direct.terms.get(w, QRat.zero())
        builder.check(a == b, word=w.render(), iota=a.render(), phi=b.render())
    if not builder.checked:
        builder.note("both sides vanish on the window")
    logger.info("Composition check of %s: %d words", letters, builder.checked)
    return builder.finish()


def _gamma(x, colors, exps):
    return x.terms.get(_word(colors, exps), QRat.zero())


def _check_exchange(builder, x, words, window):
    """
    gamma(.. i^(r-1) j^(s) ..) - q^-d gamma(.. i^(r) j^(s-1) ..) equals
    q^-d gamma(.. j^(s) i^(r-1) ..) - gamma(.. j^(s-1) i^(r) ..), d = d_ij
    """
    cd = x.cd
    m, big_m = window
    for u in words:
        colors, exps = u.colors, u.exponents
        for p in range(len(u) - 1):
            i, j = colors[p], colors[p + 1]
            r, s = exps[p] + 1, exps[p + 1]
            if not (m <= r <= big_m and m <= s - 1 <= big_m):
                continue
            swapped = colors[:p] + (j, i) + colors[p + 2:]

            def at(cols, a, b):
                return _gamma(x, cols, exps[:p] + (a, b) + exps[p + 2:])

            t = QRat.q_power(-cd.d_ij(i, j))
            lhs = at(colors, r - 1, s) - at(colors, r, s - 1) * t
            rhs = at(swapped, s, r - 1) * t - at(swapped, s - 1, r)
            builder.check(
                lhs == rhs,
                constraint="exchange",
                word=u.render(),
                position=p,
                lhs=lhs.render(),
                rhs=rhs.render(),
            )


def _check_serre(builder, x, words, window):
    """The loop Serre combination with an empty prefix vanishes"""
    cd = x.cd
    seen = set()
    for u in words:
        colors, exps = u.colors, u.exponents
        for i in cd.colors:
            for j in cd.colors:
                if i == j:
                    continue
                n = 1 - cd.a_ij(i, j)
                if len(u) < n + 1:
                    continue
                head = colors[: n + 1]
                if head.count(i) != n or head.count(j) != 1:
                    continue
                pos = head.index(j)
                s = tuple(sorted(e for c, e in zip(head, exps[: n + 1]) if c == i))
                t = exps[pos]
                key = (i, j, s, t, u[n + 1:])
                if key in seen:
                    continue
                seen.add(key)
                tail_colors, tail_exps = colors[n + 1:], exps[n + 1:]
                total = QRat.zero()
                for order in permutations(s):
                    for k in range(n + 1):
                        cols = (i,) * k + (j,) + (i,) * (n - k) + tail_colors
                        es = order[:k] + (t,) + order[k:] + tail_exps
                        c = _gamma(x, cols, es) * q_binomial(n, k, cd.d_i(i))
                        total = total + (c if k % 2 == 0 else -c)
                builder.check(
                    total.is_zero,
                    constraint="serre",
                    i=i,
                    j=j,
                    modes=s,
                    t=t,
                    suffix=u[n + 1:].render(),
                    total=total.render(),
                )


def _prefix_floor(P, k):
    """Smallest prefix sums over the monomials of P, after the z_b^-1 shifts"""
    floors = [None] * k
    for exps in P.terms:
        base = [e - c for c, e in enumerate(exps)]
        acc = 0
        for t in range(1, k):
            acc += base[t - 1]
            if floors[t] is None or acc < floors[t]:
                floors[t] = acc
    return floors


def _check_boundedness(builder, x, R, words):
    k = R.n_variables
    floors = {}
    for u in words:
        colors = u.colors
        if colors not in floors:
            floors[colors] = _prefix_floor(expansion_numerator(R, colors), k)
        low = floors[colors]
        acc = 0
        for t in range(1, k):
            acc += u.exponents[t - 1]
            if low[t] is not None and acc < low[t]:
                value = x.terms.get(u, QRat.zero())
                builder.check(
                    value.is_zero,
                    constraint="boundedness",
                    word=u.render(),
                    prefix=t,
                    floor=low[t],
                    value=value.render(),
                )
                break


def _check_cleared(builder, x, R, window):
    """
    Multiplying the expansion back by prod_{a<b} (z_a - q^-d z_b) returns the
    numerator P; the identity is checked wherever every shifted index stays in
    the window, and outside the support of P it says the alternating sum vanishes
    """
    cd = x.cd
    m, big_m = window
    k = R.n_variables
    if k < 2:
        return 0
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    target_sum = x.degree.vdeg + len(pairs)
    outside = 0
    for colors in color_sequences(R.profile):
        P = expansion_numerator(R, colors)
        weights = {
            (a, b): QRat.q_power(-cd.d_ij(colors[a], colors[b]), -1) for a, b in pairs
        }
        lo, hi = m + k - 1, big_m
        for head in product(range(lo, hi + 1), repeat=k - 1):
            last = target_sum - sum(head)
            if not lo <= last <= hi:
                continue
            d = head + (last,)
            total = QRat.zero()
            for eps in product((0, 1), repeat=len(pairs)):
                drop = [0] * k
                coeff = QRat.one()
                for (a, b), e in zip(pairs, eps):
                    if e:
                        drop[b] += 1
                        coeff = coeff * weights[(a, b)]
                    else:
                        drop[a] += 1
                total = total + coeff * _gamma(x, colors, tuple(a - b for a, b in zip(d, drop)))
            expected = P.terms.get(d, QRat.zero())
            if d not in P.terms:
                outside += 1
            builder.check(
                total == expected,
                constraint="cleared",
                colors=colors,
                exponents=d,
                total=total.render(),
                expected=expected.render(),
            )
    return outside


def verify_image_constraints(
    R: SymRatFunction, window=(-4, 4), max_variables: int = 4
) -> VerificationReport:
    """
    The coefficients gamma of iota(R) satisfy the linear constraints cutting out
    the image of iota: the four-term exchange relation between adjacent letters,
    the loop Serre combinations (sampled with an empty prefix), the vanishing
    below the prefix-sum floor, and the cleared-denominator identity, which
    reduces to vanishing of the alternating sum away from the numerator support

    Parameters
    ----------
    R : SymRatFunction
        A homogeneous element satisfying the wheel conditions

    window : tuple of int
        (m, M), the words on which gamma is computed

    max_variables : int
        Refuse larger profiles
    """
    if R.n_variables > max_variables:
        raise ConfigurationError(
            "Constraint checks are capped at {0} variables".format(max_variables)
        )
    window = tuple(int(x) for x in window)
    builder = ReportBuilder(
        "image-constraints", type=R.cd.name, profile=R.profile, window=window
    )
    x = iota(R, window, max_variables=max_variables)
    words = list(window_words(R.profile, x.degree.vdeg, window))
    _check_exchange(builder, x, words, window)
    _check_serre(builder, x, words, window)
    _check_boundedness(builder, x, R, words)
    outside = _check_cleared(builder, x, R, window)
    if R.n_variables < 2:
        builder.note("a single variable leaves the constraints vacuous")
    else:
        builder.note("{0} cleared sums lie outside the numerator support".format(outside))
    logger.info("Image constraints of profile %s: %d instances", R.profile, builder.checked)
    return builder.finish()


def verify_iota_homomorphism(F: SymRatFunction, G: SymRatFunction, window=(-3, 3)):
    """
    iota(F * G) = iota(F) * iota(G) on the window; the factors are expanded on
    the wider windows the loop shuffle product needs for exactness
    """
    m, big_m = (int(x) for x in window)
    builder = ReportBuilder("iota-homomorphism", type=F.cd.name, window=(m, big_m))
    H = fo_mult(F, G)
    bound = _shift_bound(F.n_variables, G.n_variables, F.vdeg, G.vdeg, (m, big_m))
    left = iota(F, (m, big_m + bound))
    right = iota(G, (m - bound, big_m))
    shuffled = shuffle_loop(left, right, (m, big_m))
    direct = iota(H, (m, big_m))
    for w in set(shuffled.terms) | set(direct.terms):
        a = direct.terms.get(w, QRat.zero())
        b = shuffled.terms.get(w, QRat.zero())
        builder.check(a == b, word=w.render(), product=a.render(), shuffle=b.render())
    return builder.finish()


def _random_letters(rng, cd: CartanDatum, length: int, modes: int):
    colors = rng.integers(1, cd.rank + 1, size=length)
    exps = rng.integers(-modes, modes + 1, size=length)
    return [(int(c), int(d)) for c, d in zip(colors, exps)]


def verify_wheel_closure(
    cd: CartanDatum,
    samples: int = 20,
    max_letters: int = 4,
    seed: int = 0,
    modes: int = 2,
) -> VerificationReport:
    """
    Products of random monomial images satisfy the wheel conditions, add their
    degrees, and associate with the image of the concatenated monomial
    """
    if max_letters > MAX_VARIABLES:
        raise ConfigurationError("At most {0} letters".format(MAX_VARIABLES))
    builder = ReportBuilder(
        "wheel-closure", type=cd.name, samples=samples, max_letters=max_letters, seed=seed
    )
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        length = int(rng.integers(2, max_letters + 1))
        letters = _random_letters(rng, cd, length, modes)
        cut = int(rng.integers(1, length))
        F = upsilon_monomial(cd, letters[:cut])
        G = upsilon_monomial(cd, letters[cut:])
        H = fo_mult(F, G)
        builder.check(satisfies_wheel(H), letters=letters, cut=cut, issue="wheel")
        builder.check(H.degree == F.degree + G.degree, letters=letters, cut=cut, issue="grading")
        builder.check(
            H == upsilon_monomial(cd, letters), letters=letters, cut=cut, issue="associativity"
        )
    return builder.finish()


def verify_iota_injectivity(
    cd: CartanDatum, hdeg, vdeg: int = 0, modes=(-1, 0, 1), window=(-3, 3)
) -> VerificationReport:
    """
    On the span of the monomial images of a degree, iota keeps the rank: the
    images iota(Upsilon(x)) are as independent as the functions Upsilon(x)

    The monomials are all letter sequences of the color content with exponents
    in `modes` adding up to vdeg.
    """
    hdeg = tuple(hdeg)
    if sum(hdeg) > 3:
        raise ConfigurationError("Injectivity is checked up to three variables")
    builder = ReportBuilder("iota-injectivity", type=cd.name, hdeg=hdeg, vdeg=vdeg)
    monomials = []
    for colors in color_sequences(hdeg):
        for exps in product(modes, repeat=len(colors)):
            if sum(exps) == vdeg:
                monomials.append(list(zip(colors, exps)))
    functions = [upsilon_monomial(cd, x) for x in monomials]
    fo_rows = [f.numerator.terms for f in functions]
    fo_columns = sorted({e for row in fo_rows for e in row})
    images = [iota(f, window) for f in functions]
    loop_rows = [x.terms for x in images]
    loop_columns = sorted({w for row in loop_rows for w in row}, key=lambda w: w.key, reverse=True)
    fo_rank = rank(fo_rows, fo_columns)
    loop_rank = rank(loop_rows, loop_columns)
    builder.check(
        fo_rank == loop_rank, monomials=len(monomials), fo_rank=fo_rank, loop_rank=loop_rank
    )
    builder.note("rank {0} on {1} monomials".format(fo_rank, len(monomials)))
    return builder.finish()
