import pytest

import lyndonloop as ll


@pytest.fixture(scope="module")
def a2_table():
    return ll.lyndon.LoopLyndonTable(ll.rootsys.build("A", 2))


def test_serre_images_a2():
    report = ll.shuffle.verify_serre_images(ll.rootsys.build("A", 2), mode_bound=1)
    assert report.passed
    assert report.checked > 0
    assert report.name == "serre"


def test_serre_images_default_modes():
    report = ll.shuffle.verify_serre_images(ll.rootsys.build("A", 2))
    assert report.passed, str(report)
    assert report.params["mode_bound"] == 2
    assert report.checked == 252


@pytest.mark.parametrize(
    "family,rank", [("A", 2), ("B", 2), ("A", 3), ("C", 2), ("G", 2)]
)
def test_finite_leading_words(family, rank):
    report = ll.shuffle.verify_finite_leading_words(ll.rootsys.build(family, rank))
    assert report.passed


def test_finite_image_constraints():
    report = ll.shuffle.verify_finite_image_constraints(ll.rootsys.build("A", 2), max_height=3)
    assert report.passed
    assert report.checked > 0


def test_loop_leading_words(a2_table):
    report = ll.shuffle.verify_loop_leading_words(a2_table, workers=1)
    assert report.passed
    assert report.checked == 7
    assert report.notes == ["consistent with the expected leading words on certified windows"]


def test_loop_leading_words_b2():
    table = ll.lyndon.LoopLyndonTable(ll.rootsys.build("B", 2))
    report = ll.shuffle.verify_loop_leading_words(table, workers=1)
    assert report.passed, str(report)
    assert report.checked == 11


def test_pbw_triangularity(a2_table):
    report = ll.shuffle.verify_pbw_triangularity(a2_table, ((1, 1), 0), (-1, 1))
    assert report.passed
    assert report.checked > 0


def test_good_subwords(a2_table):
    report = ll.shuffle.verify_good_subwords(a2_table, max_height=2)
    assert report.passed


def test_power_series_check():
    report = ll.shuffle.shuffle_power_series_check(deltas=[-2, 0, 1], order=5)
    assert report.passed
    assert report.checked == 3 * 6
