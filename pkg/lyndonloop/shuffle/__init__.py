from .bracket import (  # noqa
    Bracket,
    BracketExpr,
    Leaf,
    Product,
    bracket_vector,
    phi_finite,
    phi_loop,
    product_vector,
)
from .finite import FiniteShuffleElement, finite_monomial_product, shuffle_finite  # noqa
from .good import finite_good_words, good_word_linear_test, words_of_degree  # noqa
from .leading import certified_leading_word, leading_word  # noqa
from .linalg import pivot_columns, rank, row_echelon  # noqa
from .loop import (  # noqa
    LoopShuffleElement,
    certifiable_window,
    monomial_product,
    shuffle_loop,
    zero_element,
)
from .series import (  # noqa
    PairSeries,
    expand_pairs,
    inverse_zeta_series,
    shuffle_power_series_check,
    shuffle_ratio_series,
)
from .verify import (  # noqa
    verify_finite_image_constraints,
    verify_finite_leading_words,
    verify_good_subwords,
    verify_loop_leading_words,
    verify_pbw_triangularity,
    verify_serre_images,
)
