import pytest

import lyndonloop as ll

AffineRoot = ll.weyl.AffineRoot


@pytest.fixture
def a2():
    return ll.rootsys.build("A", 2)


def test_simple_reflections(a2):
    assert ll.weyl.apply_simple(a2, 1, AffineRoot((1, 0), 0)) == AffineRoot((-1, 0), 0)
    assert ll.weyl.apply_simple(a2, 0, AffineRoot((1, 1), 0)) == AffineRoot((-1, -1), 2)
    assert ll.weyl.apply_simple(a2, 2, AffineRoot((1, 0), 3)) == AffineRoot((1, 1), 3)

    with pytest.raises(ll.errors.DomainError):
        ll.weyl.apply_simple(a2, 3, AffineRoot((1, 0), 0))


@pytest.mark.parametrize("type_letter,rank", [("A", 2), ("B", 2), ("G", 2)])
def test_reflections_are_involutions(type_letter, rank):
    cd = ll.rootsys.build(type_letter, rank)
    samples = [AffineRoot(alpha, d) for alpha in cd.positive_roots for d in (-1, 0, 2)]
    for i in range(rank + 1):
        for x in samples:
            assert ll.weyl.apply_word(cd, [i, i], x) == x


def test_affine_simple_roots(a2):
    assert ll.weyl.affine_simple_root(a2, 0) == AffineRoot((-1, -1), 1)
    assert ll.weyl.affine_simple_root(a2, 2) == AffineRoot((0, 1), 0)
    assert ll.weyl.affine_cartan_entry(a2, 0, 1) == -1
    assert ll.weyl.affine_cartan_entry(a2, 0, 0) == 2


def test_translations(a2):
    theta = AffineRoot((1, 1), 0)
    assert ll.weyl.apply_translation(a2, (1, 1), theta) == AffineRoot((1, 1), -2)
    assert ll.weyl.apply_translation(a2, (0, 0), theta) == theta
    assert ll.weyl.apply_rho_vee(a2, AffineRoot((1, 0), 5)) == AffineRoot((1, 0), 4)
    assert ll.weyl.apply_rho_vee(a2, theta, power=-1) == AffineRoot((1, 1), 2)


def test_apply_word_order(a2):
    x = AffineRoot((1, 0), 0)
    # s_1 s_2 acts with s_2 first
    assert ll.weyl.apply_word(a2, [1, 2], x) == ll.weyl.apply_simple(
        a2, 1, ll.weyl.apply_simple(a2, 2, x)
    )
    assert ll.weyl.apply_word(a2, [1, 2], x) == AffineRoot((0, 1), 0)


def test_positive_affine(a2):
    assert ll.weyl.is_positive_affine(a2, AffineRoot((1, 0), 0))
    assert ll.weyl.is_positive_affine(a2, AffineRoot((-1, -1), 1))
    assert not ll.weyl.is_positive_affine(a2, AffineRoot((-1, 0), 0))
    assert not ll.weyl.is_positive_affine(a2, AffineRoot((1, 1), -1))


def test_affine_root_json():
    x = AffineRoot((1, 2), -1)
    assert x.to_dict() == {"alpha": [1, 2], "d": -1}
    assert -x == AffineRoot((-1, -2), 1)
