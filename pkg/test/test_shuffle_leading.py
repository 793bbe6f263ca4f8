from functools import partial

import pytest

import lyndonloop as ll

QLaurent = ll.qfield.QLaurent
QRat = ll.qfield.QRat
W = ll.words.parse_word


@pytest.fixture(scope="module")
def table():
    return ll.lyndon.LoopLyndonTable(ll.rootsys.build("A", 2))


def test_exact_element(table):
    x = ll.shuffle.LoopShuffleElement.word(table.cd, "1 2", coeff=3)
    assert ll.shuffle.leading_word(x) == (W("1 2"), QRat(3))

    zero = x - x
    with pytest.raises(ll.errors.ZeroElementError):
        ll.shuffle.leading_word(zero)


def test_ceiling_certificate(table):
    x = ll.shuffle.monomial_product(table.cd, [(1, 0), (2, 0)], (-1, 1))
    w, c = ll.shuffle.leading_word(x)
    assert w == W("2 1")
    assert c == QRat.q_power(-1)


def test_no_certificate(table):
    x = ll.shuffle.LoopShuffleElement(table.cd, ((1, 1), 0), {"1 2": 1}, window=(-1, 1))
    with pytest.raises(ll.errors.TruncationError) as err:
        ll.shuffle.leading_word(x, table)
    assert err.value.window is None


def test_finite_element_delegates(table):
    x = ll.shuffle.finite_monomial_product(table.cd, [1, 2])
    assert ll.shuffle.leading_word(x) == x.leading_term()


def test_certified_leading_word(table):
    ell = table.word((1, 1), 1)
    expr = ll.shuffle.bracket_vector(table, ell)
    assert expr.render() == "[e_2^(1), e_1]_-1"

    build = partial(ll.shuffle.phi_loop, table.cd, expr)
    w, c, window = ll.shuffle.certified_leading_word(build, table, (-1, 2))
    assert w == ell
    assert c == QRat(QLaurent({0: 1, -2: -1}))
    assert window[0] <= -1 and window[1] >= 2


def test_phi_loop_needs_room(table):
    expr = ll.shuffle.bracket_vector(table, table.word((1, 1), 4))
    with pytest.raises(ll.errors.TruncationError) as err:
        ll.shuffle.phi_loop(table.cd, expr, (-1, 1))
    assert err.value.window == (-1, 2)

    with pytest.raises(ll.errors.ConfigurationError):
        ll.shuffle.phi_loop(table.cd, expr, None)


def test_good_word_linear_test(table):
    assert ll.shuffle.good_word_linear_test(table, W("1 2"), (-1, 1))

    with pytest.raises(ll.errors.TruncationError) as err:
        ll.shuffle.good_word_linear_test(table, W("1^(2) 2^(-2)"), (-1, 1))
    assert err.value.window == (-2, 2)
