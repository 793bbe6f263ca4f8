import pytest

import lyndonloop as ll

QLaurent = ll.qfield.QLaurent
QRat = ll.qfield.QRat
Poly = ll.foshuffle.ColoredLaurentPoly


@pytest.fixture
def a2():
    return ll.rootsys.build("A", 2)


def test_polynomial_slots():
    p = Poly((2, 1), {(1, 0, 0): 1, (0, 1, 0): 1})
    assert p.n_variables == 3
    assert p.slot(1, 2) == 1
    assert p.slot(2, 1) == 2
    assert p.slot_colors() == (1, 1, 2)
    assert p.is_symmetric()
    assert p.variable_name(2) == "z21"

    with pytest.raises(ll.errors.DomainError):
        p.slot(2, 2)

    with pytest.raises(ll.errors.DomainError):
        Poly((1, 1), {(1,): 1})


def test_polynomial_division():
    p = Poly((2,), {(2, 0): 1, (0, 2): -1})
    assert p.divide_linear(0, 1) == Poly((2,), {(1, 0): 1, (0, 1): 1})

    with pytest.raises(ll.errors.ConsistencyError):
        Poly((2,), {(1, 0): 1}).divide_linear(0, 1)


def test_two_colors(a2):
    F = ll.foshuffle.upsilon_monomial(a2, [(1, 0), (2, 0)])
    assert F.profile == (1, 1)
    assert F.numerator.terms == {(1, 0): QRat.one(), (0, 1): QRat.q_power(1, -1)}
    assert F.denominator_render() == "(z11 - z21)"
    assert F.degree == ll.words.WordDegree((1, 1), 0)


def test_one_color(a2):
    F = ll.foshuffle.upsilon_monomial(a2, [(1, 0), (1, 0)])
    assert F.numerator.terms == {(0, 0): QRat(QLaurent({0: 1, -2: 1}))}

    G = ll.foshuffle.upsilon_monomial(a2, [(1, 3)])
    assert G.numerator.terms == {(3,): QRat.one()}
    assert G.vdeg == 3

    assert ll.foshuffle.upsilon_monomial(a2, []) == ll.foshuffle.SymRatFunction.one(a2)

    with pytest.raises(ll.errors.DomainError):
        ll.foshuffle.upsilon_monomial(a2, [(3, 0)])


def test_associativity(a2):
    e10, e20, e11 = (ll.foshuffle.upsilon_monomial(a2, [x]) for x in [(1, 0), (2, 0), (1, 1)])
    assert (e10 * e20) * e11 == e10 * (e20 * e11)
    assert e10 * e20 * e11 == ll.foshuffle.upsilon_monomial(a2, [(1, 0), (2, 0), (1, 1)])


def test_wheel_conditions(a2):
    F = ll.foshuffle.upsilon_monomial(a2, [(1, 0), (2, 0), (1, 0)])
    assert ll.foshuffle.satisfies_wheel(F)

    outcome = ll.foshuffle.wheel_check(a2, Poly((2, 1), {(0, 0, 0): 1}), 1, 2)
    assert outcome == ll.foshuffle.WheelOutcome(holds=False, applicable=True)
    assert not outcome

    outcome = ll.foshuffle.wheel_check(a2, Poly((1, 1), {(0, 0): 1}), 1, 2)
    assert outcome.holds and not outcome.applicable

    with pytest.raises(ll.errors.DomainError):
        ll.foshuffle.wheel_check(a2, Poly((1, 1), {(0, 0): 1}), 1, 1)

    with pytest.raises(ll.errors.PreconditionError):
        ll.foshuffle.SymRatFunction(a2, Poly((2, 1), {(0, 0, 0): 1}), check_wheel=True)


def test_symmetry_required(a2):
    with pytest.raises(ll.errors.PreconditionError):
        ll.foshuffle.SymRatFunction(a2, Poly((2, 0), {(1, 0): 1}))

    with pytest.raises(ll.errors.DomainError):
        ll.foshuffle.SymRatFunction(a2, Poly((1,), {(0,): 1}))


def test_variable_cap(a2):
    assert ll.foshuffle.MAX_VARIABLES == 5

    with pytest.raises(ll.errors.ConfigurationError):
        ll.foshuffle.upsilon_monomial(a2, [(1, 0)] * 3 + [(2, 0)] * 3)

    e10 = ll.foshuffle.upsilon_monomial(a2, [(1, 0)])
    with pytest.raises(ll.errors.ConfigurationError):
        ll.foshuffle.fo_mult(e10, e10, max_variables=1)


def test_mixed_degrees_have_no_vdeg(a2):
    F = ll.foshuffle.upsilon_monomial(a2, [(1, 0)]) + ll.foshuffle.upsilon_monomial(a2, [(1, 1)])
    with pytest.raises(ll.errors.PreconditionError):
        F.vdeg
