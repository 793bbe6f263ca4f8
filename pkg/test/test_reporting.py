import pytest

import lyndonloop as ll


def test_report_builder():
    builder = ll.reporting.ReportBuilder("demo", window=2)
    assert builder.check(True, x=1)
    assert not builder.check(False, x=2)
    builder.note("one note")
    report = builder.finish()

    assert type(report) == ll.reporting.VerificationReport
    assert report.checked == 2
    assert report.n_violations == 1
    assert not report.passed

    data = report.to_dict()
    assert data["passed"] is False
    assert data["violations"] == [{"x": "2"}]
    assert data["params"] == {"window": "2"}

    text = str(report)
    assert "Result: FAIL" in text
    assert "Note: one note" in text


def test_absorb():
    inner = ll.reporting.ReportBuilder("inner")
    inner.check(False, word="1 2")
    outer = ll.reporting.ReportBuilder("outer")
    outer.check(True)
    outer.absorb(inner.finish())
    report = outer.finish()
    assert report.checked == 2
    assert report.violations.iloc[0]["suite"] == "inner"


def test_parallel_map_keeps_order():
    assert ll.reporting.parallel_map(abs, [-3, 2, -1], workers=1) == [3, 2, 1]


def test_worker_count(monkeypatch):
    monkeypatch.setenv("LYNDONLOOP_WORKERS", "3")
    assert ll.reporting.worker_count() == 3
    monkeypatch.setenv("LYNDONLOOP_WORKERS", "many")
    with pytest.raises(ll.errors.ConfigurationError):
        ll.reporting.worker_count()
    with pytest.raises(ll.errors.ConfigurationError):
        ll.reporting.worker_count(0)
