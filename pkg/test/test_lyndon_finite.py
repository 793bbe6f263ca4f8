import pytest

import lyndonloop as ll


def test_finite_words():
    a2 = ll.rootsys.build("A", 2)
    assert ll.lyndon.finite_standard_lyndon(a2, (1, 1)).render() == "1 2"

    a3 = ll.rootsys.build("A", 3)
    assert ll.lyndon.finite_standard_lyndon(a3, (1, 1, 1)).render() == "1 2 3"

    b2 = ll.rootsys.build("B", 2)
    table = ll.lyndon.FiniteLyndonTable(b2)
    assert table.word((1, 2)).render() == "1 2 2"
    assert table.word((0, 1)).render() == "2"


def test_finite_table_invariants():
    cd = ll.rootsys.build("C", 3)
    table = ll.lyndon.FiniteLyndonTable(cd)
    words = table.words()
    assert len(set(words.values())) == len(cd.positive_roots)
    for alpha, w in words.items():
        assert ll.words.is_lyndon(w)
        assert w.hdeg(3) == alpha
        assert w.vdeg == 0
    assert len(table.to_frame()) == 9


def test_finite_not_a_root():
    cd = ll.rootsys.build("A", 2)
    with pytest.raises(ll.errors.DomainError):
        ll.lyndon.finite_standard_lyndon(cd, (2, 1))
