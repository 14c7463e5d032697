"""Reference-table verification: every stored cell is recomputed."""

import pytest

from cuntzalg.tables import VERIFIERS, classify_table, verify_theorem14


@pytest.mark.parametrize("name", sorted(n for n in VERIFIERS
                                        if n != "theorem14"))
def test_table(name):
    report = classify_table(name)
    assert report.ok, str(report)


def test_theorem14():
    report = verify_theorem14(level=5)
    assert report.ok, str(report)


def test_unknown_table():
    with pytest.raises(ValueError):
        classify_table("table5")


def test_report_formatting():
    report = classify_table("table4")
    text = str(report)
    assert "table4" in text
    assert all(cell.ok for cell in report.cells)
