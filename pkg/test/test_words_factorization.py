import pytest
from hypothesis import given
from hypothesis import strategies as st

import lyndonloop as ll

W = ll.words.parse_word

letters = st.tuples(st.integers(1, 2), st.integers(-1, 1))
words = st.lists(letters, min_size=1, max_size=6).map(ll.words.LoopWord)


def test_letter_order():
    a = ll.words.LoopLetter(2, 1)
    b = ll.words.LoopLetter(1, 0)
    assert a < b
    assert ll.words.LoopLetter(1, 0) < ll.words.LoopLetter(2, 0)


def test_compare_lex():
    LT = ll.words.Ordering.LT
    assert ll.words.compare_lex(W("1^(1)"), W("1")) == LT
    assert ll.words.compare_lex(W("1"), W("1 2")) == LT
    assert ll.words.compare_lex(W("1^(1) 2"), W("2^(1) 1")) == LT
    assert ll.words.compare_lex(W("1 2"), W("1 2")) == ll.words.Ordering.EQ


def test_parse_and_render():
    w = W("2^(1) 1 2")
    assert w.render() == "2^(1) 1 2"
    assert w.to_json() == [[2, 1], [1, 0], [2, 0]]
    assert ll.words.word_from_json(w.to_json()) == w
    assert W("[2^1 1]") == W("2^(1) 1")
    assert W("2^(-1)").exponents == (-1,)
    assert w.render(latex=True) == "\\underline{2} 1 2"
    with pytest.raises(ll.errors.ConfigurationError):
        W("x 1")


def test_degrees():
    w = W("2^(1) 1 2")
    assert w.hdeg(2) == (1, 2)
    assert w.vdeg == 1
    assert w.degree(2) == ll.words.WordDegree((1, 2), 1)
    with pytest.raises(ll.errors.DomainError):
        w.hdeg(1)


def test_is_lyndon():
    assert ll.words.is_lyndon(W("1 1 2"))
    assert not ll.words.is_lyndon(W("1 2 1"))
    assert ll.words.is_lyndon(W("2^(1) 1"))
    with pytest.raises(ll.errors.PreconditionError):
        ll.words.is_lyndon(ll.words.LoopWord.empty())


def test_costandard_factorization():
    f = ll.words.costandard_factorization
    assert f(W("1 1 2")) == (W("1"), W("1 2"))
    assert f(W("1 2 2")) == (W("1 2"), W("2"))
    assert f(W("2^(1) 1 2")) == (W("2^(1)"), W("1 2"))
    with pytest.raises(ll.errors.PreconditionError):
        f(W("1"))
    with pytest.raises(ll.errors.PreconditionError):
        f(W("2 1"))


def test_canonical_factorization():
    f = ll.words.canonical_factorization
    assert f(W("2 1 2")) == [W("2"), W("1 2")]
    assert f(W("1 2")) == [W("1 2")]
    assert f(W("1 1^(1)")) == [W("1"), W("1^(1)")]


def test_shift_exponents():
    w = W("2^(1) 1")
    assert ll.words.shift_exponents(w, 1) == W("2^(2) 1^(1)")
    assert ll.words.shift_exponents(w, 0) == w
    assert ll.words.shift_exponents(ll.words.shift_exponents(w, 3), -3) == w


def test_max_shuffle():
    assert ll.words.max_shuffle(W("1"), W("1 2")) == W("1 2 1")
    assert ll.words.max_shuffle(W("2"), W("1")) == W("2 1")
    assert ll.words.sorted_letters_desc(W("1 2^(1) 2")) == W("2 1 2^(1)")


@given(words)
def test_canonical_factorization_properties(w):
    factors = ll.words.canonical_factorization(w)
    assert ll.words.concatenate(factors) == w
    assert all(ll.words.is_lyndon(f) for f in factors)
    assert all(a >= b for a, b in zip(factors, factors[1:]))
    assert ll.words.canonical_factorization(ll.words.concatenate(factors)) == factors


@given(words, words)
def test_lyndon_products(u, v):
    if ll.words.is_lyndon(u) and ll.words.is_lyndon(v) and u < v:
        assert ll.words.is_lyndon(u + v)
        assert u + v < v + u


@given(words, words)
def test_largest_factor_decides_order(u, v):
    fu = ll.words.canonical_factorization(u)[0]
    fv = ll.words.canonical_factorization(v)[0]
    if fu > fv:
        assert u > v


@given(words, words, words)
def test_compare_lex_total_order(u, v, w):
    LT, GT = ll.words.Ordering.LT, ll.words.Ordering.GT
    c = ll.words.compare_lex
    assert (c(u, v) == LT) == (c(v, u) == GT)
    if c(u, v) == LT and c(v, w) == LT:
        assert c(u, w) == LT


@given(words, st.integers(-3, 3))
def test_shift_preserves_lyndon(w, n):
    assert ll.words.is_lyndon(w) == ll.words.is_lyndon(ll.words.shift_exponents(w, n))
