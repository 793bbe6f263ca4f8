from functools import lru_cache

from ..errors import PreconditionError
from .laurent import QLaurent


def q_int(n: int, d: int = 1) -> QLaurent:
    """
    Symmetric quantum integer [n] in the variable q^d

    Returns q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
    """
    if n < 0:
        raise PreconditionError("Quantum integers are only defined here for n >= 0")
    return QLaurent({d * (n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, d: int = 1) -> QLaurent:
    """
    Symmetric quantum binomial coefficient in the variable q^d

    Parameters
    ----------
    n, k : int
        Top and bottom entries, 0 <= k <= n

    d : int
        Symmetrizer, the binomial is taken in q_i = q^d

    Returns
    -------
    QLaurent
    """
    if k < 0 or k > n:
        return QLaurent.zero()
    if k == 0 or k == n:
        return QLaurent.one()
    return q_binomial(n - 1, k, d).shift(-d * k) + q_binomial(n - 1, k - 1, d).shift(
        d * (n - k)
    )
