from .cartan import CLASSICAL_TYPES, TYPE_LETTERS, CartanDatum, Root, build  # noqa
from .roots import (  # noqa
    height,
    highest_root,
    length_pairing_2rho,
    pairing,
    positive_roots,
    rho,
    root_table,
    verify_root_claim,
)
