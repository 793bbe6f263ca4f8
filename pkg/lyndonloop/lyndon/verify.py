import logging
from functools import partial

import numpy as np

from ..errors import UnsupportedClosedFormError
from ..reporting import ReportBuilder, VerificationReport, parallel_map
from ..rootsys import height
from ..words import costandard_factorization, is_lyndon
from .closed_forms import appendix_closed_form
from .finite import FiniteLyndonTable
from .loop import LoopLyndonTable

logger = logging.getLogger(__name__)


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _vdeg_range(alpha, window: int) -> range:
    k = height(alpha)
    return range(-window * k, window * k + 1)


def _convexity_pair(table: LoopLyndonTable, vdeg_bound: int, pair):
    alpha, beta = pair
    total = _add(alpha, beta)
    checked, rows = 0, []
    for d in _vdeg_range(alpha, vdeg_bound):
        w_a = table.word(alpha, d)
        for e in _vdeg_range(beta, vdeg_bound):
            w_b = table.word(beta, e)
            if not w_a < w_b:
                continue
            w_ab = table.word(total, d + e)
            checked += 1
            if not w_a < w_ab < w_b:
                rows.append(
                    {
                        "alpha": alpha,
                        "d": d,
                        "beta": beta,
                        "e": e,
                        "word_alpha": w_a.render(),
                        "word_sum": w_ab.render(),
                        "word_beta": w_b.render(),
                    }
                )
    return checked, rows


def verify_convexity(
    table: LoopLyndonTable,
    height_bound=None,
    vdeg_bound: int = 2,
    workers=None,
    progress: bool = False,
) -> VerificationReport:
    """
    Checks l(a, d) < l(a + b, d + e) < l(b, e) whenever l(a, d) < l(b, e)

    Parameters
    ----------
    table : LoopLyndonTable
        The Lyndon table

    height_bound : int, optional
        Only sums a + b of at most this height are examined

    vdeg_bound : int
        Vertical degrees range over |d| <= vdeg_bound |a| and |e| <= vdeg_bound |b|

    workers : int, optional
        Size of the worker pool, see `parallel_map`
    """
    builder = ReportBuilder(
        "convexity", type=table.cd.name, height_bound=height_bound, vdeg_bound=vdeg_bound
    )
    cd = table.cd
    pairs = []
    for alpha in cd.positive_roots:
        for beta in cd.positive_roots:
            total = _add(alpha, beta)
            if not cd.is_positive_root(total):
                continue
            if height_bound is not None and height(total) > height_bound:
                continue
            pairs.append((alpha, beta))

    results = parallel_map(
        partial(_convexity_pair, table, vdeg_bound),
        pairs,
        workers=workers,
        progress=progress,
        desc="convexity",
    )
    for checked, rows in results:
        builder.checked += checked
        for row in rows:
            builder.violation(**row)
    logger.info("Convexity on %s: %d instances", cd.name, builder.checked)
    return builder.finish()


def verify_exponent_bounds(table: LoopLyndonTable, window: int = 2) -> VerificationReport:
    """
    Every exponent of l(a, d) is floor(d / |a|) or ceil(d / |a|)

    Words are recomputed over the full range of part degrees, since a pruned
    table only ever produces exponents within these bounds.
    """
    oracle = table if table.mode == "oracle" else LoopLyndonTable(table.cd, mode="oracle")
    builder = ReportBuilder("exponent-bounds", type=table.cd.name, window=window)
    for alpha in table.cd.positive_roots:
        k = height(alpha)
        for d in _vdeg_range(alpha, window):
            allowed = {d // k, -((-d) // k)}
            w = oracle.compute(alpha, d)
            builder.check(
                set(w.exponents) <= allowed, alpha=alpha, d=d, word=w.render()
            )
    return builder.finish()


def verify_monotone(table: LoopLyndonTable, window: int = 2) -> VerificationReport:
    """Checks l(a, d) < l(a, d - 1)"""
    builder = ReportBuilder("monotone", type=table.cd.name, window=window)
    for alpha in table.cd.positive_roots:
        for d in _vdeg_range(alpha, window):
            w0, w1 = table.word(alpha, d), table.word(alpha, d - 1)
            builder.check(w0 < w1, alpha=alpha, d=d, word=w0.render(), previous=w1.render())
    return builder.finish()


def verify_periodicity(table: LoopLyndonTable, window: int = 2) -> VerificationReport:
    """
    The recursion evaluated directly at (a, d + |a|) gives l(a, d) with every
    exponent raised by one
    """
    builder = ReportBuilder("periodicity", type=table.cd.name, window=window)
    for alpha in table.cd.positive_roots:
        k = height(alpha)
        for d in _vdeg_range(alpha, window):
            direct = table.compute(alpha, d + k)
            shifted = table.word(alpha, d).shift(1)
            builder.check(
                direct == shifted,
                alpha=alpha,
                d=d,
                direct=direct.render(),
                shifted=shifted.render(),
            )
    return builder.finish()


def verify_bijectivity(table: LoopLyndonTable, window: int = 2) -> VerificationReport:
    """The words l(a, d) over |d| <= window |a| are Lyndon, of degree (a, d), and distinct"""
    builder = ReportBuilder("bijectivity", type=table.cd.name, window=window)
    seen = {}
    rank = table.cd.rank
    for alpha in table.cd.positive_roots:
        for d in _vdeg_range(alpha, window):
            w = table.word(alpha, d)
            builder.check(is_lyndon(w), alpha=alpha, d=d, word=w.render(), issue="not Lyndon")
            builder.check(
                w.degree(rank) == (alpha, d), alpha=alpha, d=d, word=w.render(), issue="degree"
            )
            other = seen.get(w)
            builder.check(
                other is None, alpha=alpha, d=d, word=w.render(), issue="repeated {0}".format(other)
            )
            seen[w] = (alpha, d)
    return builder.finish()


def verify_finite_match(table: LoopLyndonTable) -> VerificationReport:
    """The loop table at d = 0 coincides with the finite table"""
    builder = ReportBuilder("finite-match", type=table.cd.name)
    finite = FiniteLyndonTable(table.cd)
    for alpha, w in finite.words().items():
        loop = table.word(alpha, 0)
        builder.check(loop == w, alpha=alpha, finite=w.render(), loop=loop.render())
    return builder.finish()


def verify_closed_forms(table: LoopLyndonTable) -> VerificationReport:
    """
    Compares the recursion with the closed forms on the whole fundamental domain

    Raises
    ------
    UnsupportedClosedFormError
        If the root system is not classical
    """
    cd = table.cd
    if not cd.is_classical:
        raise UnsupportedClosedFormError("No closed forms are available for {0}".format(cd.name))
    builder = ReportBuilder("closed-forms", type=cd.name)
    for (alpha, d), w in table.fundamental.items():
        closed = appendix_closed_form(cd, alpha, d)
        builder.check(
            closed == w, alpha=alpha, d=d, algorithm=w.render(), closed_form=closed.render()
        )
    return builder.finish()


def verify_minimal_splits(table: LoopLyndonTable, window: int = 1) -> VerificationReport:
    """
    For the costandard split l(a, d) = l1 l2, no other pair of standard Lyndon
    words l1' < l2' of the same total degree satisfies l1 < l1' < l2' < l2
    """
    cd = table.cd
    builder = ReportBuilder("minimal-splits", type=cd.name, window=window)
    for alpha in cd.positive_roots:
        if height(alpha) < 2:
            continue
        for d in _vdeg_range(alpha, window):
            w1, w2 = costandard_factorization(table.word(alpha, d))
            builder.check(
                table.is_standard_lyndon(w1) and table.is_standard_lyndon(w2),
                alpha=alpha,
                d=d,
                issue="costandard factor not standard",
            )
            for gamma in cd.positive_roots:
                rest = _sub(alpha, gamma)
                if not cd.is_positive_root(rest):
                    continue
                bound = (window + 1) * height(alpha) * height(gamma) + abs(d)
                for d1 in range(-bound, bound + 1):
                    v1, v2 = table.word(gamma, d1), table.word(rest, d - d1)
                    if not v1 < v2:
                        continue
                    builder.check(
                        not (w1 < v1 < v2 < w2),
                        alpha=alpha,
                        d=d,
                        split=(w1.render(), w2.render()),
                        competitor=(v1.render(), v2.render()),
                    )
    return builder.finish()


def _random_parts(cd, rng, hdeg, vdeg, max_parts):
    """Random decomposition of (hdeg, vdeg) into loop roots; None if it fails"""
    parts = []
    rem = tuple(hdeg)
    roots = cd.positive_roots
    while any(rem):
        if len(parts) == max_parts - 1 and cd.is_positive_root(rem):
            parts.append(rem)
            rem = cd.zero_root()
            break
        fits = [r for r in roots if all(a <= b for a, b in zip(r, rem))]
        choice = fits[rng.integers(len(fits))]
        parts.append(choice)
        rem = _sub(rem, choice)
    if len(parts) > max_parts:
        return None
    cuts = sorted(rng.integers(-2 * height(hdeg), 2 * height(hdeg) + 1, size=len(parts) - 1))
    vdegs = list(np.diff([0] + [int(c) for c in cuts] + [0]))
    vdegs[-1] += vdeg
    return list(zip(parts, (int(v) for v in vdegs)))


def verify_min_max(
    table: LoopLyndonTable, samples: int = 200, max_parts: int = 3, seed: int = 0
) -> VerificationReport:
    """
    For loop roots with equal sums on both sides, the smallest word on one side
    is at most the largest word on the other side
    """
    cd = table.cd
    builder = ReportBuilder("min-max", type=cd.name, samples=samples, seed=seed)
    rng = np.random.default_rng(seed)
    roots = cd.positive_roots
    drawn = 0
    while drawn < samples:
        k = int(rng.integers(1, max_parts + 1))
        left = [
            (roots[rng.integers(len(roots))], int(rng.integers(-4, 5))) for _ in range(k)
        ]
        hdeg = left[0][0]
        for alpha, _ in left[1:]:
            hdeg = _add(hdeg, alpha)
        vdeg = sum(d for _, d in left)
        right = _random_parts(cd, rng, hdeg, vdeg, max_parts + 2)
        if right is None:
            continue
        drawn += 1
        low = min(table.word(a, d) for a, d in left)
        high = max(table.word(a, d) for a, d in right)
        builder.check(low <= high, left=left, right=right)
    return builder.finish()
