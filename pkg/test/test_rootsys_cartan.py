import pytest

import lyndonloop as ll


def test_a2_cartan_matrix():
    cd = ll.rootsys.build("A", 2)
    assert cd.a_ij(1, 2) == -1
    assert cd.d_ij(1, 2) == -1
    assert cd.d_ij(1, 1) == 2
    assert cd.name == "A2"
    assert cd.is_classical


def test_b2_symmetrizers():
    cd = ll.rootsys.build("b", 2)
    assert cd.d_i(1) == 2
    assert cd.d_i(2) == 1
    assert cd.a_ij(2, 1) == -2
    assert cd.a_ij(1, 2) == -1
    assert cd.highest_root == (1, 2)
    assert ll.rootsys.highest_root(cd) == (1, 2)


def test_invalid_ranks():
    with pytest.raises(ll.errors.ConfigurationError):
        ll.rootsys.build("G", 3)

    with pytest.raises(ll.errors.ConfigurationError):
        ll.rootsys.build("D", 3)

    with pytest.raises(ll.errors.ConfigurationError):
        ll.rootsys.build("X", 2)

    with pytest.raises(ll.errors.ConfigurationError):
        ll.rootsys.build("A", "two")


@pytest.mark.parametrize(
    "type_letter,rank,count",
    [("A", 2, 3), ("A", 3, 6), ("B", 2, 4), ("C", 3, 9), ("D", 4, 12), ("G", 2, 6)],
)
def test_root_counts(type_letter, rank, count):
    cd = ll.rootsys.build(type_letter, rank)
    assert len(ll.rootsys.positive_roots(cd)) == count


def test_pairings():
    a2 = ll.rootsys.build("A", 2)
    assert ll.rootsys.pairing(a2, (1, 1), (1, 1)) == 2
    b2 = ll.rootsys.build("B", 2)
    assert ll.rootsys.pairing(b2, (0, 1), (0, 1)) == 2
    assert ll.rootsys.pairing(b2, (1, 0), (1, 0)) == 4
    assert ll.rootsys.height((1, 2)) == 3


def test_rho():
    a2 = ll.rootsys.build("A", 2)
    data = ll.rootsys.rho(a2)
    assert data["two_rho"] == (2, 2)
    assert data["rho_vee"] == (1, 1)
    assert ll.rootsys.length_pairing_2rho(a2, a2.rho_vee) == 4
    with pytest.raises(ll.errors.PreconditionError):
        ll.rootsys.length_pairing_2rho(a2, (1, -1))


def test_positive_root_checks():
    cd = ll.rootsys.build("B", 2)
    assert cd.is_positive_root((1, 2))
    assert not cd.is_positive_root((2, 1))
    with pytest.raises(ll.errors.DomainError):
        cd.check_positive_root((2, 1))


def test_permuted_labelling():
    cd = ll.rootsys.build("B", 2).permuted((2, 1))
    assert cd.d_i(1) == 1
    assert cd.highest_root == (2, 1)
    assert not cd.is_classical
    with pytest.raises(ll.errors.ConfigurationError):
        cd.permuted((1, 1))


def test_root_table():
    df = ll.rootsys.root_table(ll.rootsys.build("B", 2))
    assert len(df) == 4
    assert list(df["height"]) == [1, 1, 2, 3]


@pytest.mark.parametrize("type_letter,rank", [("A", 2), ("A", 3), ("B", 2)])
def test_root_claim(type_letter, rank):
    report = ll.rootsys.verify_root_claim(ll.rootsys.build(type_letter, rank))
    assert report.passed
    assert report.checked > 0


def test_repr():
    assert "Class: CartanDatum" in str(ll.rootsys.build("A", 2))
