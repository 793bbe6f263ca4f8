from itertools import combinations_with_replacement

import pandas as pd

from ..reporting import ReportBuilder, VerificationReport
from .cartan import CartanDatum, Root


def positive_roots(cd: CartanDatum) -> list:
    """Positive roots ordered by height, then by coefficients with alpha_1 first"""
    return cd.positive_roots


def pairing(cd: CartanDatum, alpha, beta) -> int:
    return cd.pairing(alpha, beta)


def highest_root(cd: CartanDatum) -> Root:
    return cd.highest_root


def height(alpha) -> int:
    return int(sum(alpha))


def rho(cd: CartanDatum) -> dict:
    """
    Half-sum data of the positive roots

    Returns
    -------
    dict
        `two_rho` (integer coefficients of 2 rho), `rho` (fractions) and
        `rho_vee` (coweight coordinates of rho^vee)
    """
    return {"two_rho": cd.two_rho, "rho": cd.rho, "rho_vee": cd.rho_vee}


def length_pairing_2rho(cd: CartanDatum, mu) -> int:
    return cd.length_pairing_2rho(mu)


def root_table(cd: CartanDatum) -> pd.DataFrame:
    """
    Gets the positive roots as a dataframe

    Returns
    -------
        Returns a dataframe with one row per positive root, its height and norm
    """
    rows = []
    for alpha in cd.positive_roots:
        rows.append(
            {
                "root": alpha,
                "height": height(alpha),
                "norm": cd.pairing(alpha, alpha),
                "rho_vee": cd.coweight_pairing(alpha, cd.rho_vee),
            }
        )
    return pd.DataFrame(rows)


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def verify_root_claim(cd: CartanDatum) -> VerificationReport:
    """
    Checks the four-root exchange property

    For positive roots with alpha + beta = alpha' + beta', either
    alpha' - alpha or alpha' - beta lies in the root system or is zero, with the
    complementary difference for beta'.
    """
    builder = ReportBuilder("root-claim", type=cd.name)
    roots = cd.positive_roots
    by_sum = {}
    for alpha, beta in combinations_with_replacement(roots, 2):
        total = tuple(a + b for a, b in zip(alpha, beta))
        by_sum.setdefault(total, []).append((alpha, beta))

    zero = cd.zero_root()

    def ok_gamma(g):
        return g == zero or cd.is_root(g)

    for pairs in by_sum.values():
        for alpha, beta in pairs:
            for a2, b2 in pairs:
                for x, y in ((a2, b2), (b2, a2)):
                    first = ok_gamma(_sub(x, alpha))
                    second = ok_gamma(_sub(x, beta))
                    builder.check(
                        first or second,
                        alpha=alpha,
                        beta=beta,
                        alpha_prime=x,
                        beta_prime=y,
                    )
    return builder.finish()
