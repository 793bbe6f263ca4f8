import pytest

import lyndonloop as ll


def test_type_a_closed_form():
    cd = ll.rootsys.build("A", 3)
    assert ll.lyndon.appendix_closed_form(cd, (1, 1, 1), 1).render() == "3^(1) 2 1"


def test_type_c_closed_form():
    cd = ll.rootsys.build("C", 2)
    assert ll.lyndon.appendix_closed_form(cd, (2, 1), 1).render() == "2^(1) 1 1"


def test_closed_form_errors():
    with pytest.raises(ll.errors.UnsupportedClosedFormError):
        ll.lyndon.appendix_closed_form(ll.rootsys.build("G", 2), (1, 1), 1)

    a2 = ll.rootsys.build("A", 2)
    with pytest.raises(ll.errors.DomainError):
        ll.lyndon.appendix_closed_form(a2, (1, 1), 3)

    with pytest.raises(ll.errors.UnsupportedClosedFormError):
        ll.lyndon.appendix_closed_form(a2.permuted((2, 1)), (1, 1), 1)


def test_emit_dictionary():
    cd = ll.rootsys.build("A", 2)
    words = ll.lyndon.emit_dictionary(cd, 2)
    assert [w.render() for w in words] == ["2^(1)", "2^(1) 1"]

    tree = ll.lyndon.dictionary_tree(words)
    assert tree.splitlines() == ["o 2^(1)", "`-- o 1"]

    with pytest.raises(ll.errors.DomainError):
        ll.lyndon.emit_dictionary(cd, 3)


def test_dictionary_tree_marks_inner_vertices():
    W = ll.words.parse_word
    tree = ll.lyndon.dictionary_tree([W("1^(1) 2 3"), W("1^(1) 2 2")])
    assert tree.splitlines() == ["* 1^(1)", "`-- * 2", "    |-- o 2", "    `-- o 3"]
