import pytest

import lyndonloop as ll

QLaurent = ll.qfield.QLaurent
QRat = ll.qfield.QRat
W = ll.words.parse_word


@pytest.fixture
def a2():
    return ll.rootsys.build("A", 2)


def _letter(cd, color, exponent=0):
    return ll.shuffle.LoopShuffleElement.letter(cd, color, exponent)


def test_product_of_letters(a2):
    x = ll.shuffle.shuffle_loop(_letter(a2, 1), _letter(a2, 2), window=(-1, 1))
    assert x.coefficient("1 2") == QRat.one()
    assert x.coefficient("2 1") == QRat.q_power(-1)
    assert x.coefficient("2^(1) 1^(-1)") == QRat(QLaurent({-2: 1, 0: -1}))
    assert x.coefficient("1^(1) 2^(-1)") == QRat.zero()
    assert x.degree == ll.words.WordDegree((1, 1), 0)
    assert x.in_image


def test_monomial_product_matches_shuffle(a2):
    direct = ll.shuffle.monomial_product(a2, [(1, 0), (2, 0)], (-1, 1))
    product = ll.shuffle.shuffle_loop(_letter(a2, 1), _letter(a2, 2), window=(-1, 1))
    assert direct == product


def test_same_color_letters(a2):
    x = ll.shuffle.monomial_product(a2, [(1, 0), (1, 0)], (-1, 1))
    assert x.coefficient("1 1") == QRat(QLaurent({0: 1, 2: 1}))
    # only the swapped arrangement reaches the shifted word
    assert x.coefficient("1^(1) 1^(-1)") == QRat(QLaurent({4: 1, 0: -1}))


def test_coefficient_outside_window(a2):
    x = ll.shuffle.monomial_product(a2, [(1, 0), (2, 0)], (-1, 1))
    with pytest.raises(ll.errors.TruncationError):
        x.coefficient("2^(2) 1^(-2)")


def test_exact_factors_need_a_window(a2):
    with pytest.raises(ll.errors.PreconditionError):
        ll.shuffle.shuffle_loop(_letter(a2, 1), _letter(a2, 2))


def test_uncertifiable_window(a2):
    x = ll.shuffle.monomial_product(a2, [(1, 0), (2, 0)], (-1, 1))
    with pytest.raises(ll.errors.TruncationError) as err:
        ll.shuffle.shuffle_loop(x, _letter(a2, 1), window=(-5, 5))
    assert err.value.window == (-1, 0)

    y = ll.shuffle.shuffle_loop(x, _letter(a2, 1))
    assert y.window == (-1, 0)
    assert ll.shuffle.certifiable_window(x, _letter(a2, 1)) == (-1, 0)


def test_associativity_on_window(a2):
    window = (-1, 1)
    wide = ll.shuffle.monomial_product(a2, [(1, 0), (2, 0)], (-3, 3))
    left = ll.shuffle.shuffle_loop(wide, _letter(a2, 1), window=window)
    direct = ll.shuffle.monomial_product(a2, [(1, 0), (2, 0), (1, 0)], window)
    assert left.terms == direct.terms


def test_element_validation(a2):
    with pytest.raises(ll.errors.DomainError):
        ll.shuffle.LoopShuffleElement(a2, ((1, 0), 0), {"2": 1})

    with pytest.raises(ll.errors.DomainError):
        ll.shuffle.LoopShuffleElement(a2, ((1, 0), 2), {"1^(2)": 1}, window=(-1, 1))

    with pytest.raises(ll.errors.ConfigurationError):
        ll.shuffle.LoopShuffleElement(a2, ((1, 0), 0), {"1": 1}, window=(1, -1))


def test_restrict_and_zero(a2):
    x = ll.shuffle.monomial_product(a2, [(1, 0), (2, 0)], (-1, 1))
    narrow = x.restrict((0, 0))
    assert set(narrow.terms) == {W("1 2"), W("2 1")}
    assert narrow.truncated
    with pytest.raises(ll.errors.TruncationError):
        narrow.restrict((-1, 1))

    zero = ll.shuffle.zero_element(a2, ((1, 1), 0), (-1, 1))
    assert (x + zero).terms == x.terms
    assert (x - x).terms == {}


def test_json_round_trip(a2):
    x = ll.shuffle.monomial_product(a2, [(1, 0), (2, 0)], (-1, 1))
    data = x.to_dict()
    assert data["window"] == [-1, 1]
    assert ll.shuffle.LoopShuffleElement.from_dict(a2, data) == x


def test_ratio_series():
    series = ll.shuffle.shuffle_ratio_series(-1)
    assert series.coefficient(0) == QLaurent({-1: 1})
    assert series.coefficient(1) == QLaurent({-2: 1, 0: -1})
    assert ll.shuffle.shuffle_ratio_series(0).coefficient(3).is_zero
    assert ll.shuffle.inverse_zeta_series(2).coefficient(1) == QLaurent({4: -1})
    assert ll.shuffle.shuffle_power_series_check().passed
