import json

import pytest

from charcert.polynomials import parse_poly
from charcert.report import ReportError, VerificationReport, combined_exit_code, emit
from charcert.scalars import cyclo_make


def test_default_status_follows_checks():
    r = VerificationReport("demo")
    r.check("one", True)
    assert r.finish().status == "verified" and r.exit_code == 0
    r = VerificationReport("demo")
    r.check("one", False, value=3)
    assert r.finish().status == "refuted" and r.exit_code == 1
    assert any(s.kind == "witness" for s in r.steps)


def test_status_rules():
    r = VerificationReport("demo")
    r.note("nothing to check")
    with pytest.raises(ReportError):
        r.finish("refuted")
    r = VerificationReport("demo")
    r.check("bad", False)
    with pytest.raises(ReportError):
        r.finish("verified")
    with pytest.raises(ReportError):
        VerificationReport("demo").finish("maybe")


def test_exit_codes():
    codes = {}
    for status in ("verified", "evidence", "hypotheses_not_met", "not_checked"):
        codes[status] = VerificationReport("d").finish(status).exit_code
    assert codes == {"verified": 0, "evidence": 3, "hypotheses_not_met": 3, "not_checked": 3}
    ok = VerificationReport("a").finish()
    ev = VerificationReport("b").finish("evidence")
    bad = VerificationReport("c")
    bad.witness("w")
    bad.finish("refuted")
    assert combined_exit_code([ok, ev]) == 3
    assert combined_exit_code([ok, ev, bad]) == 1
    assert combined_exit_code(ok) == 0


def test_json_is_canonical():
    r = VerificationReport("demo", {"b": 1, "a": parse_poly("b^4 + 4*a*b^3")}, seed=9)
    r.check("value", True, z=cyclo_make(3), q=parse_poly("x/2"))
    r.finish()
    d = json.loads(r.to_json())
    assert list(d) == sorted(d)
    assert d["params"]["a"] == "4*a*b^3 + b^4"
    assert d["steps"][0]["values"] == {"q": "1/2*x", "z": "zeta(3)"}
    assert "duration_ms" not in d
    assert "duration_ms" in json.loads(r.to_json(timing=True))


def test_text_is_aligned():
    r = VerificationReport("demo")
    r.check("short", True, v=1)
    r.check("a much longer description", True, v=2)
    r.finish()
    lines = [l for l in emit(r, "text").splitlines() if l.startswith("  [")]
    assert len(lines) == 2
    assert lines[0].index("v=") == lines[1].index("v=")


def test_emit_many_and_bad_format():
    a, b = VerificationReport("a").finish(), VerificationReport("b").finish()
    assert isinstance(json.loads(emit([a, b])), list)
    with pytest.raises(ValueError):
        emit(a, "yaml")
