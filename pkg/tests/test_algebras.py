import numpy as np
import pytest
import sympy

from charcert.algebras import (AlgebraElement, SymbolSpec, TensorSpec, companion_matrix,
                               evidence_search, ext_to_generic_consistency, galois_invariance_check,
                               general_ext_sigma, inverse_identity_check, parse_element,
                               random_element, sigma_all, sigma_in_algebra, symbol_matrix_model,
                               tensor_model, ud_sigma)
from charcert.matrices import PolyMatrix, char_poly, determinant
from charcert.polynomials import MultiPoly, RatFunc, parse_poly
from charcert.scalars import ONE
from charcert.symfun import newton_convert

from helpers import from_sympy

P = parse_poly


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_symbol_relations(r):
    s = SymbolSpec(r)
    X, Y = symbol_matrix_model(s)
    I = PolyMatrix.identity(r, MultiPoly.const(1))
    assert X**r == I * P(f"u^{r}")
    assert Y**r == I * P(f"v^{r}")
    assert Y @ X == (X @ Y) * s.zeta


def test_symbol_r2_explicit():
    X, Y = symbol_matrix_model(SymbolSpec(2))
    assert X == PolyMatrix([[P("u"), 0], [0, P("-u")]])
    assert Y == PolyMatrix([[0, P("v")], [P("v"), 0]])
    Xinv = X.inverse()
    assert X @ Xinv == PolyMatrix.identity(2)


@pytest.mark.parametrize("degrees", [(2, 2), (2, 3)])
def test_tensor_generators_commute_across_factors(degrees):
    spec = TensorSpec.generic(degrees)
    gens = tensor_model(spec)
    n = spec.degree
    for X, Y in gens:
        assert X.rows == n
    (X1, Y1), (X2, Y2) = gens
    for A in (X1, Y1):
        for B in (X2, Y2):
            assert A @ B == B @ A


def test_single_factor_tensor_is_symbol_model():
    spec = TensorSpec.single(3)
    assert tensor_model(spec)[0] == symbol_matrix_model(spec.factors[0])


def test_sigma_examples():
    s2 = TensorSpec.single(2)
    x = parse_element(s2, "x")
    assert sigma_all(s2, x) == [P("0"), P("-z")]
    assert sigma_all(s2, parse_element(s2, "1")) == [P("-2"), P("1")]
    s3 = TensorSpec.single(3)
    assert sigma_all(s3, parse_element(s3, "x")) == [P("0"), P("0"), P("-z")]
    # y x = zeta x y inside the algebra
    x, y = parse_element(s3, "x"), parse_element(s3, "y")
    assert y * x == x * y * AlgebraElement.scalar(s3, s3.factors[0].zeta)


def test_quaternion_norm_form():
    # reduced norm of a + b x + c y + d xy in (z, w)_2 is a^2 - z b^2 - w c^2 + z w d^2
    s = TensorSpec.single(2)
    e = parse_element(s, "2 + 3*x - y + 5*x*y")
    assert sigma_in_algebra(s, e, 2) == P("4 - 9*z - w + 25*z*w")
    assert sigma_in_algebra(s, e, 1) == P("-4")


@pytest.mark.parametrize("r", [2, 3])
def test_centrality_random(r):
    spec = TensorSpec.single(r)
    for trial in range(50):
        rng = np.random.default_rng([7, r, trial])
        e = random_element(spec, rng, degree_bound=1)
        assert galois_invariance_check(spec, e)
        sig = sigma_all(spec, e)  # raises CentralityError if sigma does not descend
        for si in sig:
            poly = si.num if isinstance(si, RatFunc) else si
            assert set(poly.vars) <= {"z", "w"}


def test_sigma_one_linear_sigma_n_multiplicative():
    spec = TensorSpec.single(2)
    for trial in range(20):
        rng = np.random.default_rng([11, trial])
        x, y = random_element(spec, rng, 1), random_element(spec, rng, 1)
        assert sigma_in_algebra(spec, x + y, 1) == (sigma_in_algebra(spec, x, 1)
                                                   + sigma_in_algebra(spec, y, 1))
        assert sigma_in_algebra(spec, x * y, 2) == (sigma_in_algebra(spec, x, 2)
                                                   * sigma_in_algebra(spec, y, 2))


def test_tensor_sigma_descends():
    spec = TensorSpec.generic((2, 2))
    e = parse_element(spec, "x1 + y2 + x1*y1*x2")
    sig = sigma_all(spec, e)
    assert len(sig) == 4
    assert galois_invariance_check(spec, e)


def _generic_sympy(n):
    S = sympy.Matrix(n, n, lambda i, j: sympy.Symbol(f"s{i + 1}{j + 1}"))
    T = sympy.Matrix(n, n, lambda i, j: sympy.Symbol(f"t{i + 1}{j + 1}"))
    return S, T


def test_ud_sigma_examples():
    assert ud_sigma(2, "X", 1) == P("-(s11 + s22)")
    assert ud_sigma(2, "X", 2) == P("s11*s22 - s12*s21")
    S, T = _generic_sympy(2)
    assert ud_sigma(2, "X*Y", 2) == from_sympy(S.det() * T.det())


@pytest.mark.parametrize("word", ["X*Y - Y*X", "X^2 + 2*Y", "X*Y*X"])
def test_ud_sigma_matches_sympy(word):
    S, T = _generic_sympy(2)
    M = eval(word.replace("^", "**").replace("X", "S").replace("Y", "T"))
    lam = sympy.Symbol("lam")
    ref = sympy.Poly(M.charpoly(lam).as_expr(), lam).all_coeffs()[1:]
    for i in (1, 2):
        assert ud_sigma(2, word, i) == from_sympy(ref[i - 1])


@pytest.mark.parametrize("n", range(1, 7))
def test_general_ext_sigma_of_x(n):
    for i in range(1, n + 1):
        assert general_ext_sigma(n, "x", i) == P(f"a{i}")


def test_general_ext_sigma_examples():
    # sigma^(1)(x^2) = -p_2 = -(a1^2 - 2 a2)
    assert general_ext_sigma(2, "x^2", 1) == P("-a1^2 + 2*a2")
    assert general_ext_sigma(2, "5", 1) == -10
    assert general_ext_sigma(2, "5", 2) == 25
    a1, a2 = sympy.symbols("a1 a2")
    C = sympy.Matrix([[0, -a2], [1, -a1]])
    lam = sympy.Symbol("lam")
    ref = sympy.Poly((C**2).charpoly(lam).as_expr(), lam).all_coeffs()[1:]
    assert general_ext_sigma(2, "x^2", 1) == from_sympy(ref[0])


@pytest.mark.parametrize("n", range(1, 6))
def test_newton_bridge(n):
    C = companion_matrix(n)
    traces, Ck = [], C
    for _ in range(n):
        traces.append(Ck.trace())
        Ck = Ck @ C
    s = newton_convert("powers_to_elementary", traces, n)
    assert [x * (-1) ** i for i, x in enumerate(s, 1)] == [P(f"a{i}") for i in range(1, n + 1)]


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("g", ["x", "x^2", "1"])
def test_inverse_identity(n, g):
    assert inverse_identity_check(n, g).status == "verified"


def test_inverse_identity_n2_value():
    rep = inverse_identity_check(2, "x")
    assert rep.steps[-1].values["value"] == RatFunc(P("a1"), P("a2"))


def test_inverse_identity_rejects_zero():
    assert inverse_identity_check(2, "0").status == "hypotheses_not_met"


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("g", ["x", "x^2"])
def test_extension_to_generic_consistency(n, g):
    assert ext_to_generic_consistency(n, g).status == "verified"


def test_parse_specs():
    s = TensorSpec.parse("symbol 2 z1 w1 (x) symbol 3 z2 w2")
    assert s.degree == 6 and s.center_vars == ["z1", "w1", "z2", "w2"]
    with pytest.raises(ValueError):
        TensorSpec.parse("symbol two z w")
    with pytest.raises(ValueError):
        TensorSpec.parse("symbol 2 z w (x) symbol 2 z w")


def test_evidence_search_small():
    spec = TensorSpec.single(2)
    a = evidence_search(spec, "trace0-norm1", 20, seed=3)
    b = evidence_search(spec, "trace0-norm1", 20, seed=3)
    assert a.status == "evidence" and a.to_json() == b.to_json()
    assert evidence_search(spec, "sigma-zero:2", 20, seed=1, degree_bound=0).status == "evidence"
    with pytest.raises(ValueError):
        evidence_search(spec, "sigma-zero:3", 5, seed=1)
    with pytest.raises(ValueError):
        evidence_search(spec, "sometimes", 5, seed=1)


def test_evidence_search_flags_a_hit():
    # trace-zero elements such as x exist, so a search for sigma^(1) = 0 must find hits
    spec = TensorSpec.single(2)
    rep = evidence_search(spec, "sigma-zero:1", 200, seed=0, degree_bound=0)
    assert rep.status == "refuted"
    assert any(s.kind == "witness" for s in rep.steps)


@pytest.mark.parametrize("degrees", [(2,), (3,), (2, 2)])
def test_element_printing_round_trips(degrees):
    spec = TensorSpec.generic(degrees) if len(degrees) > 1 else TensorSpec.single(degrees[0])
    for trial in range(10):
        e = random_element(spec, np.random.default_rng([3, trial]), 1)
        assert parse_element(spec, str(e)) == e
