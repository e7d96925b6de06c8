"""Acceptance criteria 1-10, each run against its time limit.

Every test prints one PASS/FAIL line (visible even with captured output).
"""
import io
import json
import math
import time
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from charcert.algebras import (SymbolSpec, TensorSpec, ext_to_generic_consistency,
                               galois_invariance_check, inverse_identity_check, parse_element,
                               random_element, sigma_all, symbol_matrix_model, tensor_model)
from charcert.cli import run
from charcert.groupfix import (paired_charpoly_check, sn_fixed_point_certificate,
                               equal_sigma_product_certificate)
from charcert.matrices import PolyMatrix, char_poly, evaluate_poly_at_matrix, resultant
from charcert.octonion import (automorphism_check, character_table_check, composition_check,
                               octonion_sign_system_certificate, quadratic_identity_check)
from charcert.polynomials import MultiPoly, parse_poly
from charcert.scalars import ONE, ZERO, CycloNum, cyclo_make
from charcert.symfun import elem_sym, high_powers_check, power_sum, specialize_two_block
from charcert.tables import expected_forms

GROUPS_UP_TO_8 = ["2", "3", "4", "2x2", "5", "2x3", "7", "8", "2x4", "2x2x2"]


@pytest.fixture
def verdict(capsys):
    def report(number, ok, elapsed, limit, detail=""):
        passed = ok and elapsed < limit
        line = (f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  "
                f"{elapsed:7.2f} s (limit {limit} s)  {detail}").rstrip()
        with capsys.disabled():
            print("\n" + line)
        assert ok, detail
        assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
    return report


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue()


def test_criterion_01_specialization_forms(verdict):
    t0 = time.perf_counter()
    forms = expected_forms()
    matched = [specialize_two_block(i, n1, n2) == parse_poly(text)
               for i, n1, n2, text in forms]
    distinct = {(i, n1, n2) for i, n1, n2, _ in forms}
    elapsed = time.perf_counter() - t0
    verdict(1, all(matched) and len(distinct) == 10, elapsed, 1,
            f"{sum(matched)}/{len(forms)} expected forms, {len(distinct)} distinct")


def test_criterion_02_tables(verdict):
    t0 = time.perf_counter()
    results = {}
    for deg in ("deg5", "deg6"):
        code, out = _cli("table", deg)
        results[deg] = (code, json.loads(out))
    elapsed = time.perf_counter() - t0
    ok = True
    for deg, direct, partners in (("deg5", ["(1,2)", "(1,4)", "(2,3)"], ["(3,4)"]),
                                  ("deg6", ["(1,2)", "(1,4)", "(1,5)", "(2,3)", "(2,4)"],
                                   ["(4,5)", "(2,5)", "(3,4)"])):
        code, rep = results[deg]
        steps = rep["steps"]
        ok &= code == 0 and rep["status"] == "verified"
        for case in direct:
            ok &= any(s["description"].startswith(case) and "trivial" in s["description"]
                      and s["ok"] for s in steps)
        for case in partners:
            ok &= any(s["description"].startswith(f"{case}: no solutions, by inverse symmetry")
                      for s in steps)
    verdict(2, ok, elapsed, 5, "table deg5 and deg6 exit 0")


def test_criterion_03_paired_charpoly(verdict):
    t0 = time.perf_counter()
    statuses = {g: paired_charpoly_check(g).status for g in GROUPS_UP_TO_8}
    elapsed = time.perf_counter() - t0
    ok = all(s == "verified" for s in statuses.values())
    verdict(3, ok, elapsed, 30, f"{len(statuses)} groups of order <= 8")


def test_criterion_04_equal_sigma_product(verdict):
    t0 = time.perf_counter()
    ok = True
    for group, m, i, j in (("2", 2, 2, 1), ("2x2", 2, 2, 1), ("2x3", 6, 6, 1), ("3", 3, 3, 2)):
        rep = equal_sigma_product_certificate(group, m, i, j)
        n = math.prod(int(d) for d in group.split("x"))
        listed = [s for s in rep.steps if "sigma^(i)(P_a D_chi) != 0" in s.description]
        ok &= rep.status == "verified" and len(listed) == n * n and all(s.ok for s in listed)
    elapsed = time.perf_counter() - t0
    verdict(4, ok, elapsed, 60, "4 instances")


def test_criterion_05_two_block_trace(verdict):
    t0 = time.perf_counter()
    ok = all(sn_fixed_point_certificate(*p).status == "verified"
             for p in ((1, 4, 1, 2), (2, 4, 1, 2), (1, 5, 1, 5)))
    bad = sn_fixed_point_certificate(2, 2, 1, 3)
    ok &= bad.status == "refuted" and any(
        s.kind == "witness" and s.description.startswith("type I:") for s in bad.steps)
    elapsed = time.perf_counter() - t0
    verdict(5, ok, elapsed, 5, "3 verified, (2,2,1,3) has a type I fixed point")


def test_criterion_06_high_powers(verdict):
    t0 = time.perf_counter()
    ok = True
    for n in (3, 5):
        rep = high_powers_check(n)
        jac = [s for s in rep.steps if "s-Jacobian minor is nonzero" in s.description]
        ok &= rep.status == "verified" and len(jac) == n * (n - 1)
    elapsed = time.perf_counter() - t0
    verdict(6, ok, elapsed, 30, "n = 3, 5")


def test_criterion_07_octonions(verdict):
    t0 = time.perf_counter()
    ok = quadratic_identity_check().status == "verified"
    ok &= automorphism_check().status == "verified"
    chars = character_table_check()
    ok &= chars.status == "verified" and chars.steps[-1].values["distinct"] == 8
    ok &= octonion_sign_system_certificate(1, 1, "x*x").status == "verified"
    ok &= octonion_sign_system_certificate(2, 1, "x1*x2").status == "verified"
    bad = octonion_sign_system_certificate(2, 2, "x1*x1 + x2*x2")
    ok &= bad.status == "refuted" and any(s.kind == "witness" for s in bad.steps)
    ok &= composition_check(trials=50, seed=0).status == "verified"
    elapsed = time.perf_counter() - t0
    verdict(7, ok, elapsed, 60)


def test_criterion_08_algebra_models(verdict):
    t0 = time.perf_counter()
    ok = True
    for r in (2, 3, 4, 5):
        s = SymbolSpec(r)
        X, Y = symbol_matrix_model(s)
        I = PolyMatrix.identity(r, MultiPoly.const(1))
        ok &= X**r == I * parse_poly(f"u^{r}") and Y**r == I * parse_poly(f"v^{r}")
        ok &= Y @ X == (X @ Y) * s.zeta
        spec = TensorSpec.single(r)
        want = [parse_poly("0")] * (r - 1) + [parse_poly("-z")]
        ok &= sigma_all(spec, parse_element(spec, "x")) == want
    (X1, Y1), (X2, Y2) = tensor_model(TensorSpec.generic((2, 3)))
    ok &= X1 @ Y2 == Y2 @ X1
    for r in (2, 3):
        spec = TensorSpec.single(r)
        for trial in range(50):
            e = random_element(spec, np.random.default_rng([2024, r, trial]), 1)
            ok &= galois_invariance_check(spec, e)
            sigma_all(spec, e)  # raises if some sigma^(i) fails to descend to the center
    for n in (2, 3):
        for g in ("x", "x^2"):
            ok &= ext_to_generic_consistency(n, g).status == "verified"
        ok &= inverse_identity_check(n, "x").status == "verified"
    elapsed = time.perf_counter() - t0
    verdict(8, ok, elapsed, 120)


def _rand_cyclo(rng, level=6):
    return sum((int(c) * cyclo_make(level, k) for k, c in enumerate(rng.integers(-3, 4, 2))),
               ZERO)


def test_criterion_09_kernel_properties(verdict):
    t0 = time.perf_counter()
    rng = np.random.default_rng(9)
    failures = 0
    for _ in range(100):
        n = int(rng.integers(1, 5))
        M = PolyMatrix([[_rand_cyclo(rng) for _ in range(n)] for _ in range(n)])
        failures += not evaluate_poly_at_matrix([ONE] + char_poly(M), M).is_zero()
    for _ in range(100):
        k = int(rng.integers(1, 7))
        vals = [Fraction(int(a), int(b)) for a, b in zip(rng.integers(-6, 7, k),
                                                          rng.integers(1, 4, k))]
        s = [elem_sym(i, vals) for i in range(k + 1)]
        p = [None] + [power_sum(i, vals) for i in range(1, k + 1)]
        for m in range(1, k + 1):
            brute = sum((math.prod(c) for c in combinations(vals, m)), Fraction(0))
            total = p[m] + (-1) ** m * m * s[m]
            for j in range(1, m):
                total = total + (-1) ** j * s[j] * p[m - j]
            failures += (total != 0) + (s[m] != brute)
    t = MultiPoly.var("t")
    for _ in range(50):
        f = t - int(rng.integers(-5, 6))
        g = t**2 + int(rng.integers(-5, 6)) * t + 1
        h = t + int(rng.integers(-5, 6))
        failures += resultant(f * h, g * h, "t") != 0
        shared = g.evaluate({"t": -f.evaluate({"t": 0})}) == 0
        failures += (resultant(f, g, "t") == 0) != shared
    for _ in range(1000):
        x, y, z = (_rand_cyclo(rng, int(rng.choice([3, 4, 5, 12]))) for _ in range(3))
        failures += not ((x * y) * z == x * (y * z) and x * (y + z) == x * y + x * z
                         and x * y == y * x and (x + y) + z == x + (y + z))
    elapsed = time.perf_counter() - t0
    verdict(9, failures == 0, elapsed, 120, f"{failures} failures")


def test_criterion_10_evidence_mode(verdict):
    argv = ("search", "counterexample", "--algebra", "symbol 2 z w", "--predicate",
            "trace0-norm1", "--trials", "1000", "--seed", "42", "--degree-bound", "2")
    t0 = time.perf_counter()
    code1, out1 = _cli(*argv)
    code2, out2 = _cli(*argv)
    elapsed = time.perf_counter() - t0
    rep = json.loads(out1)
    hits = rep["steps"][0]["values"]["hits"]
    ok = code1 == code2 == 3 and rep["status"] == "evidence" and hits == 0 and out1 == out2
    verdict(10, ok, elapsed, 120, f"{hits} hits in 1000 trials, identical reports: {out1 == out2}")
