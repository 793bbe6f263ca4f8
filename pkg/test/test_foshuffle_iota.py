import pytest

import lyndonloop as ll

QLaurent = ll.qfield.QLaurent
QRat = ll.qfield.QRat


@pytest.fixture
def a2():
    return ll.rootsys.build("A", 2)


def test_color_sequences():
    assert ll.foshuffle.color_sequences((0, 0)) == [()]
    assert sorted(ll.foshuffle.color_sequences((2, 1))) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


def test_iota_of_two_letters(a2):
    R = ll.foshuffle.upsilon_monomial(a2, [(1, 0), (2, 0)])
    x = ll.foshuffle.iota(R, (-1, 1))
    assert x.coefficient("1 2") == QRat.one()
    assert x.coefficient("2 1") == QRat.q_power(-1)
    assert x.coefficient("2^(1) 1^(-1)") == QRat(QLaurent({-2: 1, 0: -1}))
    assert x.coefficient("1^(1) 2^(-1)") == QRat.zero()
    assert x.terms == ll.shuffle.monomial_product(a2, [(1, 0), (2, 0)], (-1, 1)).terms


@pytest.mark.parametrize("d", [-2, 0, 3])
def test_iota_of_single_variable(a2, d):
    R = ll.foshuffle.upsilon_monomial(a2, [(1, d)])
    x = ll.foshuffle.iota(R, (-3, 3))
    assert x.terms == {ll.words.LoopWord.letter(1, d): QRat.one()}


def test_expansion_numerator_sign(a2):
    R = ll.foshuffle.upsilon_monomial(a2, [(1, 0), (2, 0)])
    P = ll.foshuffle.expansion_numerator(R, (2, 1))
    assert P.profile == (2,)
    assert P.terms == {(1, 0): QRat.q_power(1), (0, 1): QRat(-1)}

    with pytest.raises(ll.errors.ConfigurationError):
        ll.foshuffle.expansion_numerator(R, (1, 1))


def test_iota_errors(a2):
    R = ll.foshuffle.upsilon_monomial(a2, [(1, 0), (2, 0)])
    with pytest.raises(ll.errors.ConfigurationError):
        ll.foshuffle.iota(R, None)

    with pytest.raises(ll.errors.ConfigurationError):
        ll.foshuffle.iota(R, (-1, 1), max_variables=1)

    with pytest.raises(ll.errors.ConfigurationError):
        ll.foshuffle.iota(R - R, (-1, 1))
