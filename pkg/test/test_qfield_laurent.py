from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import lyndonloop as ll

laurents = st.dictionaries(
    st.integers(-4, 4), st.integers(-3, 3), max_size=4
).map(ll.qfield.QLaurent)


def test_laurent_drops_zero_coefficients():
    p = ll.qfield.QLaurent({-2: 3, 0: 0, 5: 1})
    assert p.terms == {-2: 3, 5: 1}
    assert p.render() == "3*q^-2 + q^5"


def test_laurent_parse_render():
    p = ll.qfield.parse_laurent("3*q^-2 - 1 + q^5")
    assert p == ll.qfield.QLaurent({-2: 3, 0: -1, 5: 1})
    assert ll.qfield.parse_laurent(p.render()) == p


def test_laurent_monomial_inverse():
    p = ll.qfield.QLaurent.monomial(3, 2)
    assert p ** -1 == ll.qfield.QLaurent({-3: Fraction(1, 2)})
    with pytest.raises(ValueError):
        ll.qfield.QLaurent({0: 1, 1: 1}) ** -1


def test_laurent_evaluate():
    p = ll.qfield.QLaurent({-1: 1, 1: 1})
    assert p.evaluate(2) == Fraction(5, 2)
    with pytest.raises(ll.errors.PoleError):
        p.evaluate(0)


def test_q_int():
    q = ll.qfield.QLaurent.monomial
    assert ll.qfield.q_int(2) == q(1) + q(-1)
    assert ll.qfield.q_int(3, 2) == q(4) + q(0) + q(-4)
    assert ll.qfield.q_int(0).is_zero


def test_q_binomial():
    q = ll.qfield.QLaurent.monomial
    assert ll.qfield.q_binomial(2, 1) == q(1) + q(-1)
    assert ll.qfield.q_binomial(3, 1, 2) == q(4) + q(0) + q(-4)
    assert ll.qfield.q_binomial(3, 0) == ll.qfield.QLaurent.one()
    assert ll.qfield.q_binomial(3, 4).is_zero


@given(laurents, laurents, laurents)
def test_laurent_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ll.qfield.QLaurent.zero()
