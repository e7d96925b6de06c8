import pytest
from hypothesis import given, settings, strategies as st

from charcert.groupfix import (AbelianGroupSpec, Character, GroupSpecError, PairedElement,
                               basis_check, character_decomposition_check,
                               closed_form_charpoly, commutation_check,
                               cyclic_counterexample_check, diag_matrix, pairs,
                               paired_charpoly_check, perm_matrix, sn_fixed_point_certificate,
                               equal_sigma_product_certificate, root_of_unity_condition_check)
from charcert.matrices import PolyMatrix, char_poly
from charcert.polynomials import parse_poly
from charcert.scalars import ONE, ZERO, cyclo_make
from charcert.symfun import newton_convert

SMALL_GROUPS = ["2", "3", "4", "2x2", "2x3"]


def test_parse_groups():
    g = AbelianGroupSpec.parse("2x2x3")
    assert g.cyclic_orders == (2, 2, 3) and g.order == 12 and g.exponent == 6
    assert AbelianGroupSpec.parse("1").order == 1
    assert AbelianGroupSpec.elementary(12).cyclic_orders == (2, 2, 3)
    for bad in ("", "2y3", "2x1", "0", "x2"):
        with pytest.raises(GroupSpecError):
            AbelianGroupSpec.parse(bad)


def test_elements_are_lexicographic():
    g = AbelianGroupSpec((2, 3))
    assert g.elements == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]


@pytest.mark.parametrize("spec", SMALL_GROUPS + ["2x4", "3x3"])
def test_characters_form_the_dual_group(spec):
    g = AbelianGroupSpec.parse(spec)
    chars = g.characters()
    assert len(chars) == g.order
    for chi in chars:
        for x in g.elements:
            for y in g.elements:
                assert chi(g.add(x, y)) == chi(x) * chi(y)
    # orthogonality: sum over the group vanishes unless chi is trivial
    for chi in chars:
        total = sum((chi(x) for x in g.elements), ZERO)
        assert total == (g.order if chi.is_trivial() else 0)


def test_character_exponents_reduce():
    g = AbelianGroupSpec((3,))
    assert Character(g, (4,)) == Character(g, (1,))


def test_perm_and_diag():
    g = AbelianGroupSpec((3,))
    P = perm_matrix(g, (1,))
    # P_a e_b = e_(a+b)
    assert P[1, 0] == 1 and P[2, 1] == 1 and P[0, 2] == 1
    D = diag_matrix(g, Character(g, (1,)))
    z = cyclo_make(3)
    assert D == PolyMatrix.diag([1, z, z**2])


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_commutation(spec):
    assert commutation_check(spec).status == "verified"


def _charpoly_by_traces(M):
    # independent route: power traces, then Newton's identities
    n = M.rows
    traces, Mk = [], M
    for _ in range(n):
        traces.append(Mk.trace())
        Mk = Mk @ M
    s = newton_convert("powers_to_elementary", traces, n)
    return [x * (-1) ** i for i, x in enumerate(s, 1)]


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_paired_charpoly_against_trace_route(spec):
    g = AbelianGroupSpec.parse(spec)
    for pe in pairs(g):
        M = pe.matrix()
        assert pe.epsilon in (ONE, -ONE)
        assert char_poly(M) == _charpoly_by_traces(M)
        assert char_poly(M) == closed_form_charpoly(g.order, pe.c, pe.epsilon)
    assert paired_charpoly_check(g).status == "verified"


def test_closed_form_examples():
    # (t^2 + 1)^2 = t^4 + 2t^2 + 1
    assert closed_form_charpoly(4, 2, -1) == [0, 2, 0, 1]
    assert closed_form_charpoly(3, 3, 1) == [0, 0, -1]


def test_paired_epsilon_can_be_negative():
    g = AbelianGroupSpec((2,))
    pe = PairedElement(g, (1,), Character(g, (1,)))
    assert pe.c == 2 and pe.epsilon == -1


@pytest.mark.parametrize("spec", ["2", "3", "2x2"])
def test_basis(spec):
    rep = basis_check(spec)
    assert rep.status == "verified"


@pytest.mark.parametrize("spec,m,i,j", [("2", 2, 2, 1), ("2x2", 2, 2, 1), ("3", 3, 3, 2),
                                        ("2", 4, 2, 2)])
def test_equal_sigma_product_verified(spec, m, i, j):
    rep = equal_sigma_product_certificate(spec, m, i, j)
    assert rep.status == "verified"
    n_pairs = AbelianGroupSpec.parse(spec).order ** 2
    nonzero = [s for s in rep.steps if "sigma^(i)(P_a D_chi) != 0" in s.description]
    assert len(nonzero) == n_pairs and all(s.ok for s in nonzero)


def test_equal_sigma_product_hypotheses_not_met():
    assert equal_sigma_product_certificate("2", 1, 2, 1).status == "hypotheses_not_met"
    assert equal_sigma_product_certificate("3", 3, 2, 1).status == "hypotheses_not_met"


def test_root_condition_examples():
    assert root_of_unity_condition_check(parse_poly("z1*z2"), 1, 2, 2, None, "2").status == "verified"
    rep = root_of_unity_condition_check(parse_poly("z1 + z2"), 1, 2, 2, None, "2")
    assert rep.status == "refuted"
    wit = [s for s in rep.steps if s.kind == "witness"]
    assert wit and wit[0].values["point"] == [ONE, -ONE]
    assert root_of_unity_condition_check(parse_poly("z1^2 + z1*z2 + z2^2"), 1, 2, 2, None,
                                      "2").status == "verified"
    assert root_of_unity_condition_check(parse_poly("z1 + z2^2"), 1, 2, 2, None,
                                      "2").status == "hypotheses_not_met"


@pytest.mark.parametrize("params", [(1, 4, 1, 2), (2, 4, 1, 2), (1, 5, 1, 5), (2, 2, 1, 2)])
def test_sn_certificate_verified(params):
    assert sn_fixed_point_certificate(*params).status == "verified"


def test_sn_certificate_finds_fixed_points():
    rep = sn_fixed_point_certificate(2, 2, 1, 3)
    assert rep.status == "refuted"
    descs = [s.description for s in rep.steps if s.kind == "witness"]
    assert any(d.startswith("type I:") for d in descs)


def test_sn_certificate_without_squarefree_hypothesis():
    # sqf(3) divides neither 1 nor 2: the Z/3 block character lies on the variety
    rep = sn_fixed_point_certificate(2, 3, 1, 2)
    assert rep.status == "refuted"
    assert any(s.description.startswith("type III:") for s in rep.steps if s.kind == "witness")


@pytest.mark.parametrize("n1,n2", [(1, 1), (1, 2), (2, 2), (4, 6), (3, 5)])
def test_character_decomposition(n1, n2):
    assert character_decomposition_check(n1, n2).status == "verified"


def test_cyclic_counterexample():
    rep = cyclic_counterexample_check()
    assert rep.status == "verified"


@settings(max_examples=30)
@given(st.sampled_from(["2", "3", "4", "2x2", "2x3", "5"]), st.data())
def test_paired_matrix_power_is_scalar(spec, data):
    g = AbelianGroupSpec.parse(spec)
    a = data.draw(st.sampled_from(g.elements))
    e = data.draw(st.sampled_from(g.elements))
    pe = PairedElement(g, a, Character(g, e))
    M = pe.matrix()
    assert M ** pe.c == PolyMatrix.identity(g.order) * pe.epsilon
    # c is the least power that is scalar
    for k in range(1, pe.c):
        assert (M ** k).is_scalar() is None
