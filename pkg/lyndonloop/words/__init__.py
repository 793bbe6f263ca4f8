from .factorization import (  # noqa
    canonical_factorization,
    concatenate,
    costandard_factorization,
    is_lyndon,
    max_shuffle,
    shift_exponents,
    sorted_letters_desc,
)
from .word import (  # noqa
    LoopLetter,
    LoopWord,
    Ordering,
    WordDegree,
    compare_lex,
    parse_word,
    word_from_json,
)
