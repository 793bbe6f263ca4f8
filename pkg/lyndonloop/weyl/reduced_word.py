import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from ..errors import ConsistencyError
from ..lyndon import LoopLyndonTable, loop_order_compare
from ..reporting import ReportBuilder, VerificationReport
from ..rootsys import CartanDatum, height
from ..words import Ordering
from .affine import (
    AffineRoot,
    affine_cartan_entry,
    affine_indices,
    affine_simple_root,
    apply_rho_vee,
    apply_simple,
    is_positive_affine,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedWordData:
    """
    A reduced decomposition of the translation by rho^vee, tau s_{i_{1-l}} ... s_{i_0}

    Parameters
    ----------
    cd : CartanDatum
        The finite root system

    tau : dict
        Diagram automorphism of the affine Dynkin diagram, index -> index

    indices : tuple of int
        i_{1-l}, ..., i_0
    """

    cd: CartanDatum
    tau: Dict[int, int]
    indices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.indices)

    def index(self, k: int) -> int:
        """i_k of the bi-infinite sequence with i_{k+l} = tau(i_k)"""
        period, offset = divmod(k, self.length)
        # k = period * l + offset with offset in [0, l); shift into [1-l, 0]
        if offset:
            period += 1
            offset -= self.length
        i = self.indices[offset - 1 + self.length]
        steps = period % self._tau_order()
        for _ in range(steps):
            i = self.tau[i]
        return i

    def _tau_order(self) -> int:
        order = 1
        for i in self.tau:
            j, k = self.tau[i], 1
            while j != i:
                j, k = self.tau[j], k + 1
            order = max(order, k)
        return order

    def to_dict(self) -> dict:
        return {
            "type": self.cd.name,
            "tau": {str(k): v for k, v in self.tau.items()},
            "indices": list(self.indices),
            "length": self.length,
        }

    def __repr__(self):
        repr_str = ""
        repr_str += "Module: lyndonloop"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Class: ReducedWordData"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Type: {0}".format(self.cd.name)
        repr_str += "\n"
        repr_str += "Length: {0}".format(self.length)
        repr_str += "\n"
        repr_str += "Indices (i_{{1-l}} .. i_0): {0}".format(list(self.indices))
        repr_str += "\n"
        repr_str += "tau: {0}".format(self.tau)
        repr_str += "\n"

        return repr_str

    def __str__(self):
        return self.__repr__()


def ordered_fundamental_set(table: LoopLyndonTable) -> list:
    """
    The affine roots (alpha, d) with 0 <= d < |alpha|, increasing for
    (alpha, d) < (beta, e) iff l(alpha, -d) < l(beta, -e)
    """
    items = []
    for alpha in table.cd.positive_roots:
        for d in range(height(alpha)):
            items.append(AffineRoot(alpha, d))
    return sorted(items, key=lambda x: table.word(x.finite_part, -x.d).key)


def _simple_index(cd: CartanDatum, x: AffineRoot):
    for i in affine_indices(cd):
        if affine_simple_root(cd, i) == x:
            return i
    return None


def recover_reduced_word(table: LoopLyndonTable) -> ReducedWordData:
    """
    Reads off the reduced decomposition of rho^vee whose beta sequence realizes
    the Lyndon order

    The ordered set L = (beta_0, beta_-1, ..., beta_{1-l}) is inverted one root at
    a time: alpha_{i_k} = s_{i_{k+1}} ... s_{i_0} (beta_k).

    Raises
    ------
    ConsistencyError
        If a recovered root is not an affine simple root, or tau is not a diagram
        automorphism
    """
    cd = table.cd
    ordered = ordered_fundamental_set(table)
    found = []  # i_0, i_{-1}, ...
    for beta in ordered:
        x = beta
        for i in found:
            x = apply_simple(cd, i, x)
        i = _simple_index(cd, x)
        if i is None:
            raise ConsistencyError(
                "{0} maps to {1}, which is not an affine simple root".format(beta, x)
            )
        found.append(i)
    indices = tuple(reversed(found))
    logger.debug("Recovered reduced word of length %d for %s", len(indices), cd.name)

    tau = {}
    for j in affine_indices(cd):
        x = affine_simple_root(cd, j)
        for i in indices:
            x = apply_simple(cd, i, x)
        x = apply_rho_vee(cd, x)
        image = _simple_index(cd, x)
        if image is None:
            raise ConsistencyError("tau does not map alpha_{0} to a simple root".format(j))
        tau[j] = image

    if sorted(tau.values()) != list(affine_indices(cd)):
        raise ConsistencyError("tau is not a permutation of the affine indices")
    for i in affine_indices(cd):
        for j in affine_indices(cd):
            if affine_cartan_entry(cd, tau[i], tau[j]) != affine_cartan_entry(cd, i, j):
                raise ConsistencyError("tau is not a diagram automorphism")

    return ReducedWordData(cd=cd, tau=tau, indices=indices)


def beta_root(rw: ReducedWordData, k: int) -> AffineRoot:
    """
    beta_k = s_{i_1} ... s_{i_{k-1}} (-alpha_{i_k}) for k > 0, and
    s_{i_0} s_{i_-1} ... s_{i_{k+1}} (alpha_{i_k}) for k <= 0
    """
    cd = rw.cd
    if k > 0:
        x = -affine_simple_root(cd, rw.index(k))
        for m in range(k - 1, 0, -1):
            x = apply_simple(cd, rw.index(m), x)
        return x
    x = affine_simple_root(cd, rw.index(k))
    for m in range(k + 1, 1):
        x = apply_simple(cd, rw.index(m), x)
    return x


def beta_sequence(rw: ReducedWordData, start: int, stop: int) -> list:
    """beta_k for start <= k <= stop"""
    if start > stop:
        raise ValueError("start must not exceed stop")
    return [beta_root(rw, k) for k in range(start, stop + 1)]


def terminal_set(rw: ReducedWordData) -> set:
    """The roots s_{i_0} ... s_{i_{k+1}} (alpha_{i_k}) for 0 >= k > -l"""
    return {beta_root(rw, k) for k in range(1 - rw.length, 1)}


def _in_half(cd: CartanDatum, beta: AffineRoot, k: int) -> bool:
    """beta_k lies in Delta+ x Z>=0 for k <= 0 and in Delta+ x Z<0 for k > 0"""
    if not cd.is_positive_root(beta.finite_part):
        return False
    return is_positive_affine(cd, -beta if k > 0 else beta)


def verify_weyl_order(
    rw: ReducedWordData, table: LoopLyndonTable, count: int = 10
) -> VerificationReport:
    """
    Checks ... < beta_2 < beta_1 < beta_0 < beta_-1 < ... for the Lyndon order

    The chain runs over beta_k with 1 - count <= k <= count; every beta_k is a positive
    loop root with d < 0 exactly when k > 0, all are distinct, and
    beta_{k+l} is the translation of beta_k by rho^vee.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    cd = rw.cd
    builder = ReportBuilder("weyl-order", type=cd.name, count=count)
    ks = list(range(count, -count, -1))
    betas = {k: beta_root(rw, k) for k in ks}

    for k in ks:
        beta = betas[k]
        builder.check(
            _in_half(cd, beta, k),
            k=k,
            beta=beta.render(),
            issue="outside its half of Delta+ x Z",
        )
        builder.check(
            beta_root(rw, k + rw.length) == apply_rho_vee(cd, beta),
            k=k,
            beta=beta.render(),
            issue="periodicity",
        )

    builder.check(
        len(set(betas.values())) == len(betas), issue="beta sequence is not injective"
    )

    for k in ks[:-1]:
        lower, upper = betas[k], betas[k - 1]
        if not (cd.is_positive_root(lower.finite_part) and cd.is_positive_root(upper.finite_part)):
            continue
        order = loop_order_compare(table, tuple(lower), tuple(upper))
        builder.check(
            order == Ordering.LT,
            k=k,
            lower=lower.render(),
            upper=upper.render(),
            issue="order",
        )
    return builder.finish()


def verify_reduced_word(rw: ReducedWordData, window: int = 3) -> VerificationReport:
    """
    Terminal set equals {(alpha, d): 0 <= d < |alpha|}, the length equals
    (2 rho, rho^vee), and beta is injective and sign-correct on |k| <= window * l
    """
    cd = rw.cd
    builder = ReportBuilder("reduced-word", type=cd.name, window=window)
    expected = {
        AffineRoot(alpha, d) for alpha in cd.positive_roots for d in range(height(alpha))
    }
    got = terminal_set(rw)
    builder.check(
        got == expected,
        issue="terminal set",
        missing=sorted(expected - got),
        extra=sorted(got - expected),
    )
    builder.check(
        rw.length == cd.length_pairing_2rho(cd.rho_vee),
        issue="length",
        length=rw.length,
    )
    span = window * rw.length
    seen = set()
    for k in range(-span, span + 1):
        beta = beta_root(rw, k)
        builder.check(_in_half(cd, beta, k), k=k, beta=beta.render(), issue="sign")
        builder.check(beta not in seen, k=k, beta=beta.render(), issue="repeated")
        seen.add(beta)
    return builder.finish()
