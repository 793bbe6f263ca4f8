from .affine import (  # noqa
    AffineRoot,
    affine_cartan_entry,
    affine_simple_root,
    apply_rho_vee,
    apply_simple,
    apply_translation,
    apply_word,
    is_positive_affine,
)
from .reduced_word import (  # noqa
    ReducedWordData,
    beta_root,
    beta_sequence,
    ordered_fundamental_set,
    recover_reduced_word,
    terminal_set,
    verify_reduced_word,
    verify_weyl_order,
)
