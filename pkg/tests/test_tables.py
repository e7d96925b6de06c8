import pytest

from charcert.tables import TABLES, table_deg


def _checks(rep):
    return [s for s in rep.steps if s.kind == "check"]


@pytest.mark.parametrize("n", [5, 6])
def test_tables_verified(n):
    rep = table_deg(n)
    assert rep.status == "verified"
    descs = [s.description for s in rep.steps]
    for case in TABLES[n]["direct"]:
        assert any(d.startswith(f"({case.m1},{case.m2})") and "trivial" in d for d in descs)


def test_deg5_cases():
    rep = table_deg(5)
    descs = [s.description for s in _checks(rep)]
    assert any(d.startswith("(3,4): no solutions, by inverse symmetry from (1,2)") for d in descs)
    notes = [s.description for s in rep.steps if s.kind == "note"]
    assert any(d.startswith("(1,3): solutions exist") for d in notes)
    assert any(d.startswith("(2,4): solutions exist") for d in notes)
    # solvable cases are never recorded as checks
    assert not any(d.startswith(("(1,3)", "(2,4)")) for d in descs)


def test_deg6_partners():
    descs = [s.description for s in _checks(table_deg(6))]
    for pair, src in (("(4,5)", "(1,2)"), ("(2,5)", "(1,4)"), ("(3,4)", "(2,3)")):
        assert any(d.startswith(f"{pair}: no solutions, by inverse symmetry from {src}")
                   for d in descs)


def test_deg6_case_2_4_forms():
    rep = table_deg(6)
    forms = [s.values for s in rep.steps if s.description.startswith("(2,4)")
             and "expected form" in s.description]
    assert [f["expected"] for f in forms] == ["a^2 + 8*a*b + 6*b^2", "6*a^2*b^2 + 8*a*b^3 + b^4"]


def test_other_degrees_rejected():
    with pytest.raises(ValueError):
        table_deg(4)
