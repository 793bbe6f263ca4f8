from .function import (  # noqa
    MAX_VARIABLES,
    SymRatFunction,
    WheelOutcome,
    fo_mult,
    satisfies_wheel,
    upsilon_monomial,
    wheel_check,
)
from .iota import color_sequences, expansion_numerator, iota  # noqa
from .polynomial import ColoredLaurentPoly  # noqa
from .verify import (  # noqa
    verify_composition,
    verify_image_constraints,
    verify_iota_homomorphism,
    verify_iota_injectivity,
    verify_wheel_closure,
    window_words,
)
