import io
import json
import subprocess
import sys

import pytest

from charcert.cli import ALIASES, CANONICAL, VERIFY, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


GOLDEN = [
    (("verify", "charpoly", "--group", "2x3"), 0),
    (("verify", "commutation", "--group", "2x2"), 0),
    (("verify", "basis", "--group", "3"), 0),
    (("verify", "thm3", "--group", "2x3", "--m", "6", "--i", "6", "--j", "1"), 0),
    (("verify", "equal-sigma", "--group", "2", "--m", "1", "--i", "2", "--j", "1"), 3),
    (("verify", "thm3a", "--group", "2", "--poly", "z1*z2", "--i", "1", "--j", "2", "--u", "2"), 0),
    (("verify", "root-condition", "--group", "2", "--poly", "z1+z2", "--i", "1", "--j", "2", "--u", "2"), 1),
    (("verify", "thm1", "--n1", "1", "--n2", "4", "--m1", "1", "--m2", "2"), 0),
    (("verify", "two-block-trace", "--n1", "2", "--n2", "2", "--m1", "1", "--m2", "3"), 1),
    (("verify", "characters", "--n1", "2", "--n2", "4"), 0),
    (("verify", "cyclic-remark"), 0),
    (("verify", "cyclic-witness"), 0),
    (("verify", "high-powers", "--n", "3"), 0),
    (("verify", "high-powers", "--n", "3", "--no-c"), 0),
    (("verify", "octonion", "--m", "2", "--s", "1", "--poly", "x1*x2"), 0),
    (("verify", "octonion", "--m", "2", "--s", "2", "--poly", "x1*x1 + x2*x2"), 1),
    (("verify", "quadratic"), 0),
    (("verify", "quadratic", "--poly", "(1, 0, 2, 0, 0, 0, 0, 1/2)"), 0),
    (("verify", "composition", "--trials", "5", "--seed", "3"), 0),
    (("table", "deg5"), 0),
    (("table", "deg6"), 0),
    (("search", "counterexample", "--algebra", "symbol 2 z w", "--predicate", "trace0-norm1",
      "--trials", "10", "--seed", "1"), 3),
    (("search", "counterexample", "--algebra", "symbol 2 z w", "--predicate", "sigma-zero:1",
      "--trials", "10", "--seed", "1", "--degree-bound", "0"), 1),
]


@pytest.mark.parametrize("argv,code", GOLDEN, ids=[" ".join(a[:2]) + f"->{c}" for a, c in GOLDEN])
def test_golden_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code, err
    report = json.loads(out)
    assert report["status"] in ("verified", "refuted", "evidence", "hypotheses_not_met")
    if code == 1:
        assert any(s["kind"] == "witness" for s in report["steps"])


def test_every_verify_target_is_in_golden_matrix():
    covered = {CANONICAL.get(a[1], a[1]) for a, _ in GOLDEN if a[0] == "verify"}
    assert covered == set(VERIFY)
    assert {a[1] for a, _ in GOLDEN} >= set(ALIASES.values())


@pytest.mark.parametrize("argv", [
    ("verify", "charpoly", "--group", "2y3"),
    ("verify", "thm3a", "--group", "2", "--poly", "z1 +* z2", "--i", "1", "--j", "2", "--u", "2"),
    ("verify", "octonion", "--m", "3", "--s", "1", "--poly", "x1*x2*x3 + x1*x1*x1"),
    ("verify", "quadratic", "--poly", "(1, 2)"),
    ("search", "counterexample", "--algebra", "symbol x z w", "--predicate", "trace0-norm1",
     "--trials", "1", "--seed", "0"),
    ("verify", "high-powers", "--n", "4"),
])
def test_bad_literals_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err


def test_parse_error_is_position_annotated():
    code, _, err = call("verify", "thm3a", "--group", "2", "--poly", "z1 +* z2",
                        "--i", "1", "--j", "2", "--u", "2")
    assert code == 2
    lines = err.splitlines()
    assert "position 4" in lines[0]
    assert lines[-1].index("^") == lines[-2].index("z1") + 4


def test_usage_errors_exit_2():
    assert call()[0] == 2
    assert call("verify")[0] == 2
    assert call("verify", "thm3", "--group", "2")[0] == 2
    assert call("search", "counterexample", "--algebra", "symbol 2 z w",
                "--predicate", "trace0-norm1", "--trials", "3")[0] == 2  # seed is mandatory


def test_text_format_and_out_file(tmp_path):
    target = tmp_path / "r.txt"
    code, out, _ = call("verify", "cyclic-remark", "--format", "text", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("claim   cyclic-degree-3-witness")
    assert text.rstrip().endswith("status  verified")


def test_reports_are_deterministic():
    argv = ("search", "counterexample", "--algebra", "symbol 2 z w", "--predicate",
            "trace0-norm1", "--trials", "25", "--seed", "42", "--degree-bound", "2")
    assert call(*argv)[1] == call(*argv)[1]
    assert call("table", "deg6")[1] == call("table", "deg6")[1]


def test_timing_flag():
    _, out, _ = call("verify", "cyclic-remark", "--timing")
    assert "duration_ms" in json.loads(out)
    _, out, _ = call("verify", "cyclic-remark")
    assert "duration_ms" not in json.loads(out)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "charcert", "verify", "cyclic-remark",
                           "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "status  verified" in proc.stdout
