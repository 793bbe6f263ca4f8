import pytest

import lyndonloop as ll


@pytest.fixture
def a2():
    return ll.rootsys.build("A", 2)


@pytest.mark.parametrize(
    "letters",
    [
        [(1, 0), (2, 0)],
        [(1, 0), (1, 1)],
        [(2, -1), (1, 0), (1, 1)],
    ],
)
def test_composition(a2, letters):
    report = ll.foshuffle.verify_composition(a2, letters, window=(-2, 2))
    assert report.passed
    assert report.checked > 0


def test_composition_b2():
    b2 = ll.rootsys.build("B", 2)
    report = ll.foshuffle.verify_composition(b2, [(1, 0), (2, 0), (2, 0)], window=(-1, 1))
    assert report.passed


def test_image_constraints(a2):
    R = ll.foshuffle.upsilon_monomial(a2, [(1, 0), (2, 0), (1, 0)])
    report = ll.foshuffle.verify_image_constraints(R, window=(-2, 2))
    assert report.passed
    assert report.checked > 0

    with pytest.raises(ll.errors.ConfigurationError):
        ll.foshuffle.verify_image_constraints(R, max_variables=2)


def test_single_variable_constraints_are_vacuous(a2):
    R = ll.foshuffle.upsilon_monomial(a2, [(2, 1)])
    report = ll.foshuffle.verify_image_constraints(R, window=(-2, 2))
    assert report.passed
    assert report.notes == ["a single variable leaves the constraints vacuous"]


def test_iota_homomorphism(a2):
    F = ll.foshuffle.upsilon_monomial(a2, [(1, 0)])
    G = ll.foshuffle.upsilon_monomial(a2, [(2, 0), (1, 1)])
    report = ll.foshuffle.verify_iota_homomorphism(F, G, window=(-2, 2))
    assert report.passed


def test_wheel_closure(a2):
    report = ll.foshuffle.verify_wheel_closure(a2, samples=5, max_letters=3, seed=1)
    assert report.passed
    assert report.checked == 15

    with pytest.raises(ll.errors.ConfigurationError):
        ll.foshuffle.verify_wheel_closure(a2, max_letters=6)


def test_iota_injectivity(a2):
    report = ll.foshuffle.verify_iota_injectivity(a2, (1, 1))
    assert report.passed

    with pytest.raises(ll.errors.ConfigurationError):
        ll.foshuffle.verify_iota_injectivity(a2, (2, 2))


def test_window_words():
    words = list(ll.foshuffle.window_words((1, 1), 0, (-1, 1)))
    assert len(words) == 6
    assert ll.words.parse_word("2^(1) 1^(-1)") in words
