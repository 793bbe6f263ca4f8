import pytest

import lyndonloop as ll

AffineRoot = ll.weyl.AffineRoot


def _reduced_word(type_letter, rank):
    table = ll.lyndon.LoopLyndonTable(ll.rootsys.build(type_letter, rank))
    return table, ll.weyl.recover_reduced_word(table)


def test_a2_reduced_word():
    table, rw = _reduced_word("A", 2)
    assert rw.length == 4
    assert rw.indices[-1] == 1
    assert rw.index(0) == 1
    assert rw.index(1) == 0
    assert rw.to_dict()["length"] == 4

    ordered = ll.weyl.ordered_fundamental_set(table)
    assert ordered == [
        AffineRoot((1, 0), 0),
        AffineRoot((1, 1), 0),
        AffineRoot((0, 1), 0),
        AffineRoot((1, 1), 1),
    ]


def test_a2_beta_sequence():
    _, rw = _reduced_word("A", 2)
    assert ll.weyl.beta_sequence(rw, -3, 0) == [
        AffineRoot((1, 1), 1),
        AffineRoot((0, 1), 0),
        AffineRoot((1, 1), 0),
        AffineRoot((1, 0), 0),
    ]
    assert ll.weyl.beta_root(rw, -4) == AffineRoot((1, 0), 1)

    beta_1 = ll.weyl.beta_root(rw, 1)
    assert rw.cd.is_positive_root(beta_1.finite_part)
    assert beta_1.d < 0

    with pytest.raises(ValueError):
        ll.weyl.beta_sequence(rw, 1, 0)


def test_terminal_set():
    _, rw = _reduced_word("B", 2)
    expected = {
        AffineRoot(alpha, d)
        for alpha in rw.cd.positive_roots
        for d in range(ll.rootsys.height(alpha))
    }
    assert ll.weyl.terminal_set(rw) == expected


@pytest.mark.parametrize(
    "type_letter,rank,count", [("A", 2, 10), ("A", 3, 25), ("B", 2, 10)]
)
def test_weyl_order(type_letter, rank, count):
    table, rw = _reduced_word(type_letter, rank)
    report = ll.weyl.verify_weyl_order(rw, table, count=count)
    assert report.passed, str(report)

    report = ll.weyl.verify_reduced_word(rw)
    assert report.passed, str(report)


def test_weyl_order_count():
    table, rw = _reduced_word("A", 2)
    with pytest.raises(ValueError):
        ll.weyl.verify_weyl_order(rw, table, count=0)
