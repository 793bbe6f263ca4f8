from .closed_forms import appendix_closed_form, dictionary_tree, emit_dictionary  # noqa
from .finite import FiniteLyndonTable, finite_standard_lyndon  # noqa
from .loop import (  # noqa
    LoopLyndonTable,
    enumerate_standard_words,
    is_standard,
    loop_order_compare,
    loop_standard_lyndon,
    lyndon_table,
    minimal_costandard_split,
)
from .verify import (  # noqa
    verify_bijectivity,
    verify_closed_forms,
    verify_convexity,
    verify_exponent_bounds,
    verify_finite_match,
    verify_min_max,
    verify_minimal_splits,
    verify_monotone,
    verify_periodicity,
)
