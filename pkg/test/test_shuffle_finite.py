import pytest

import lyndonloop as ll

QLaurent = ll.qfield.QLaurent
QRat = ll.qfield.QRat


@pytest.fixture
def a2():
    return ll.rootsys.build("A", 2)


def _e(cd, text):
    return ll.shuffle.FiniteShuffleElement.word(cd, text)


def test_shuffle_of_letters(a2):
    x = ll.shuffle.shuffle_finite(_e(a2, "1"), _e(a2, "2"))
    assert x.render() == "(q^-1)*[2 1] + [1 2]"
    assert x.coefficient("1 2") == QRat.one()
    assert x.coefficient("2 1") == QRat.q_power(-1)

    y = _e(a2, "1") * _e(a2, "1")
    assert y == ll.shuffle.FiniteShuffleElement.word(a2, "1 1", QLaurent({0: 1, 2: 1}))


def test_monomial_product_is_associative(a2):
    left = (_e(a2, "1") * _e(a2, "2")) * _e(a2, "1")
    right = _e(a2, "1") * (_e(a2, "2") * _e(a2, "1"))
    assert left == right
    assert left == ll.shuffle.finite_monomial_product(a2, [1, 2, 1])


def test_unit_and_zero(a2):
    x = _e(a2, "1 2")
    assert ll.shuffle.FiniteShuffleElement.one(a2) * x == x
    assert (x - x).is_zero
    assert x - x == 0
    with pytest.raises(ll.errors.ZeroElementError):
        ll.shuffle.FiniteShuffleElement.zero(a2).leading_term()


def test_homogeneity(a2):
    with pytest.raises(ll.errors.DomainError):
        ll.shuffle.FiniteShuffleElement(a2, {"1": 1, "2": 1})

    with pytest.raises(ll.errors.DomainError):
        _e(a2, "1^(1)")

    with pytest.raises(ll.errors.DomainError):
        _e(a2, "1") + _e(a2, "2")


def test_leading_term(a2):
    x = _e(a2, "1") * _e(a2, "2")
    w, c = ll.shuffle.leading_word(x)
    assert w.render() == "2 1"
    assert c == QRat.q_power(-1)


def test_phi_finite_bracket(a2):
    expr = ll.shuffle.bracket_vector(a2, ll.words.parse_word("1 2"))
    assert expr.render() == "[e_1, e_2]_-1"
    x = ll.shuffle.phi_finite(a2, expr)
    assert x == ll.shuffle.FiniteShuffleElement.word(a2, "1 2", QLaurent({0: 1, -2: -1}))
    assert x.to_dict()["terms"] == [{"word": "1 2", "coeff": "-q^-2 + 1"}]


def test_finite_good_words():
    b2 = ll.rootsys.build("B", 2)
    good = ll.shuffle.finite_good_words(b2, (1, 2))
    assert good[0].render() == "1 2 2"
    a2 = ll.rootsys.build("A", 2)
    assert [w.render() for w in ll.shuffle.finite_good_words(a2, (1, 1))] == ["1 2", "2 1"]


def test_words_of_degree():
    words = ll.shuffle.words_of_degree((1, 2))
    assert [w.render() for w in words] == ["2 2 1", "2 1 2", "1 2 2"]


def test_linear_algebra():
    rows = [{"a": QRat.one(), "b": QRat.one()}, {"a": QRat.one(), "b": QRat.one()}]
    assert ll.shuffle.rank(rows, ["a", "b"]) == 1
    assert ll.shuffle.pivot_columns(rows, ["a", "b"]) == ["a"]
