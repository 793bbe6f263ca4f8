import pytest

import lyndonloop as ll


@pytest.fixture(scope="module")
def a2():
    return ll.lyndon.LoopLyndonTable(ll.rootsys.build("A", 2))


@pytest.fixture(scope="module")
def b2():
    return ll.lyndon.LoopLyndonTable(ll.rootsys.build("B", 2))


def test_a2_words(a2):
    word = ll.lyndon.loop_standard_lyndon
    assert word(a2, (1, 1), 1).render() == "2^(1) 1"
    assert word(a2, (1, 1), 2).render() == "1^(1) 2^(1)"
    assert word(a2, (1, 1), 0).render() == "1 2"
    assert word(a2, (1, 1), 3) == ll.words.shift_exponents(word(a2, (1, 1), 1), 1)
    assert word(a2, (1, 0), -4).render() == "1^(-4)"


def test_b2_words(b2):
    assert b2.word((1, 2), 1).render() == "2^(1) 1 2"
    assert b2.word((1, 2), 2).render() == "2^(1) 2^(1) 1"
    assert b2.word((1, 2), 0).render() == "1 2 2"


def test_not_a_root(a2):
    with pytest.raises(ll.errors.DomainError):
        a2.word((2, 1), 0)

    with pytest.raises(ll.errors.DomainError):
        a2.word((0, 2), 0)


def test_lookup(b2):
    assert b2.lookup(ll.words.parse_word("2^(1) 1 2")) == ((1, 2), 1)
    assert b2.lookup(ll.words.parse_word("1 2^(1) 2")) is None
    assert b2.lookup(ll.words.LoopWord.empty()) is None


def test_oracle_mode_agrees(b2):
    oracle = ll.lyndon.LoopLyndonTable(ll.rootsys.build("B", 2), mode="oracle")
    assert oracle == b2

    with pytest.raises(ValueError):
        ll.lyndon.LoopLyndonTable(ll.rootsys.build("B", 2), mode="fast")


def test_lyndon_table_frame(b2):
    df = ll.lyndon.lyndon_table(b2)
    assert len(df) == 7
    assert list(df.columns) == ["root", "height", "d", "word"]
    assert df.iloc[-1]["word"] == "1^(1) 2^(1) 2^(1)"


def test_loop_order_compare(a2):
    Ordering = ll.words.Ordering
    cmp = ll.lyndon.loop_order_compare
    assert cmp(a2, ((1, 0), 0), ((1, 1), 0)) == Ordering.LT
    assert cmp(a2, ((1, 1), 3), ((1, 1), 3)) == Ordering.EQ
    assert cmp(a2, ((1, 1), -1), ((0, 1), 0)) == Ordering.LT


def test_minimal_costandard_split(a2, b2):
    split = ll.lyndon.minimal_costandard_split
    assert split(a2, (1, 1), 0) == (((1, 0), 0), ((0, 1), 0))
    assert split(a2, (1, 1), 1) == (((0, 1), 1), ((1, 0), 0))
    assert split(b2, (1, 2), 1) == (((0, 1), 1), ((1, 1), 0))

    with pytest.raises(ll.errors.PreconditionError):
        split(a2, (1, 0), 0)


def test_enumerate_standard_words(a2):
    upper = ll.words.parse_word("2 1")
    found = ll.lyndon.enumerate_standard_words(a2, ((1, 1), 0), upper=upper)
    assert [w.render() for w, _ in found] == ["2 1", "1 2"]
    assert all(ll.lyndon.is_standard(a2, w) for w, _ in found)

    theta = ll.lyndon.loop_standard_lyndon(a2, (1, 1), 0)
    below = ll.lyndon.enumerate_standard_words(a2, ((1, 1), 0), upper=theta)
    assert [factors for _, factors in below] == [(theta,)]

    windowed = ll.lyndon.enumerate_standard_words(a2, ((1, 1), 0), window=(0, 0))
    assert [w.render() for w, _ in windowed] == ["2 1", "1 2"]

    with pytest.raises(ll.errors.PreconditionError):
        ll.lyndon.enumerate_standard_words(a2, ((1, 1), 0))


def test_is_standard(a2):
    W = ll.words.parse_word
    assert ll.lyndon.is_standard(a2, W("2 2"))
    assert ll.lyndon.is_standard(a2, W("2 1"))
    assert not ll.lyndon.is_standard(a2, W("1^(1) 2"))
