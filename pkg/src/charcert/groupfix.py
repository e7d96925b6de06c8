"""Finite abelian groups, the matrices P_a and D_chi, and fixed-point certificates.

Group elements and characters are exponent tuples, enumerated in
lexicographic order.  P_a is right multiplication by a on the group
algebra (P_a e_b = e_(a+b)) and D_chi = diag(chi(b)), so that
D_chi P_a = chi(a) P_a D_chi.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .matrices import PolyMatrix, char_poly, determinant, rank
from .polynomials import MultiPoly, var_key
from .report import VerificationReport
from .scalars import ONE, ZERO, CycloNum, cyclo_make, prime_factors, squarefree_part
from .symfun import TwoBlockSystem, decide_two_block


class GroupSpecError(ValueError):
    pass


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Z/d_1 x ... x Z/d_s; the empty product is the trivial group."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(d) for d in self.cyclic_orders))
        if any(d < 2 for d in self.cyclic_orders):
            raise GroupSpecError("cyclic orders must be >= 2")

    @classmethod
    def parse(cls, text: str) -> "AbelianGroupSpec":
        """``"2x2x3"`` -> Z/2 x Z/2 x Z/3; ``"1"`` -> trivial group."""
        t = text.strip().lower().replace("*", "x")
        if not re.fullmatch(r"\d+(\s*x\s*\d+)*", t):
            raise GroupSpecError(f"malformed group spec {text!r}; expected e.g. 2x2x3")
        orders = [int(p) for p in t.split("x")]
        if orders == [1]:
            return cls(())
        if any(d < 2 for d in orders):
            raise GroupSpecError(f"cyclic orders must be >= 2 in {text!r}")
        return cls(tuple(orders))

    @classmethod
    def elementary(cls, n: int) -> "AbelianGroupSpec":
        """Product of Z/p over the prime factors of n (with multiplicity)."""
        return cls(tuple(prime_factors(n)))

    def __str__(self):
        return "x".join(map(str, self.cyclic_orders)) or "1"

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @cached_property
    def elements(self) -> list[tuple[int, ...]]:
        return list(product(*(range(d) for d in self.cyclic_orders)))

    @cached_property
    def index(self) -> dict:
        return {g: k for k, g in enumerate(self.elements)}

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.cyclic_orders)

    def add(self, g, h) -> tuple[int, ...]:
        return tuple((x + y) % d for x, y, d in zip(g, h, self.cyclic_orders))

    def neg(self, g) -> tuple[int, ...]:
        return tuple((-x) % d for x, d in zip(g, self.cyclic_orders))

    def element_order(self, g) -> int:
        return math.lcm(1, *(d // math.gcd(d, x) for x, d in zip(g, self.cyclic_orders)))

    def characters(self) -> list["Character"]:
        return [Character(self, e) for e in self.elements]

    def generators(self) -> list[tuple[int, ...]]:
        s = len(self.cyclic_orders)
        return [tuple(1 if k == t else 0 for k in range(s)) for t in range(s)]

    @cached_property
    def _char_values(self) -> dict:
        # chi(g) = zeta_E^(sum e_t g_t E/d_t), E the exponent
        E = self.exponent
        w = [E // d for d in self.cyclic_orders]
        roots = [cyclo_make(E, k) for k in range(E)]
        return {(e, g): roots[sum(a * b * c for a, b, c in zip(e, g, w)) % E]
                for e in self.elements for g in self.elements}


@dataclass(frozen=True)
class Character:
    group: AbelianGroupSpec
    exponents: tuple[int, ...]

    def __post_init__(self):
        e = tuple(x % d for x, d in zip(self.exponents, self.group.cyclic_orders))
        if len(e) != len(self.group.cyclic_orders):
            raise GroupSpecError("character exponents do not match the group")
        object.__setattr__(self, "exponents", e)

    def __call__(self, g) -> CycloNum:
        return self.group._char_values[(self.exponents, tuple(g))]

    @property
    def order(self) -> int:
        return self.group.element_order(self.exponents)

    def is_trivial(self) -> bool:
        return not any(self.exponents)


@dataclass(frozen=True)
class PairedElement:
    group: AbelianGroupSpec
    a: tuple[int, ...]
    chi: Character

    def __post_init__(self):
        eps = self.epsilon
        assert eps == 1 or eps == -1, f"epsilon {eps} is not a sign"

    @property
    def c(self) -> int:
        return math.lcm(self.group.element_order(self.a), self.chi.order)

    @property
    def epsilon(self) -> CycloNum:
        c = self.c
        return self.chi(self.a) ** (c * (c - 1) // 2)

    def matrix(self) -> PolyMatrix:
        return perm_matrix(self.group, self.a) @ diag_matrix(self.group, self.chi)

    def label(self) -> str:
        return f"a={_tup(self.a)} chi={_tup(self.chi.exponents)}"


def _tup(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def pairs(group: AbelianGroupSpec):
    chars = group.characters()
    for a in group.elements:
        for chi in chars:
            yield PairedElement(group, a, chi)


def perm_matrix(group: AbelianGroupSpec, a) -> PolyMatrix:
    n = group.order
    rows = [[ZERO] * n for _ in range(n)]
    for b in group.elements:
        rows[group.index[group.add(a, b)]][group.index[b]] = ONE
    return PolyMatrix(rows)


def diag_matrix(group: AbelianGroupSpec, chi: Character) -> PolyMatrix:
    return PolyMatrix.diag([chi(b) for b in group.elements])


def _as_group(group) -> AbelianGroupSpec:
    if isinstance(group, AbelianGroupSpec):
        return group
    return AbelianGroupSpec.parse(str(group))


def closed_form_charpoly(n: int, c: int, eps) -> list:
    """sigma^(1..n) of (t^c - eps)^(n/c), by expanding the polynomial."""
    t = MultiPoly.var("t")
    f = (t**c - eps) ** (n // c)
    uni = f.as_univariate("t")
    return [uni[n - i].constant_value() if (n - i) in uni else ZERO for i in range(1, n + 1)]


# -- certificates -----------------------------------------------------------------

def commutation_check(group) -> VerificationReport:
    group = _as_group(group)
    rep = VerificationReport("commutation-relation", {"group": str(group)})
    chars = group.characters()
    Ps = {a: perm_matrix(group, a) for a in group.elements}
    Ds = {chi.exponents: diag_matrix(group, chi) for chi in chars}
    for a in group.elements:
        for chi in chars:
            P, D = Ps[a], Ds[chi.exponents]
            lhs = D @ P
            rhs = (P @ D) * chi(a)
            rep.check(f"a={_tup(a)} chi={_tup(chi.exponents)}: D_chi P_a = chi(a) P_a D_chi",
                      lhs == rhs, chi_a=chi(a))
    return rep.finish()


def paired_charpoly_check(group) -> VerificationReport:
    group = _as_group(group)
    n = group.order
    rep = VerificationReport("paired-charpoly", {"group": str(group), "n": n})
    ident = PolyMatrix.identity(n)
    for pe in pairs(group):
        M = pe.matrix()
        sig = char_poly(M)
        want = closed_form_charpoly(n, pe.c, pe.epsilon)
        rep.check(f"{pe.label()}: charpoly = (t^c - eps)^(n/c)", sig == want,
                  c=pe.c, eps=pe.epsilon, sigma=sig)
        rep.check(f"{pe.label()}: (P_a D_chi)^c = eps*I", M**pe.c == ident * pe.epsilon)
    return rep.finish()


def basis_check(group) -> VerificationReport:
    group = _as_group(group)
    n = group.order
    rep = VerificationReport("paired-basis", {"group": str(group), "n": n})
    rows = [list(pe.matrix().a.flat) for pe in pairs(group)]
    r = rank(rows)
    rep.check("the n^2 matrices P_a D_chi are linearly independent", r == n * n,
              rank=r, expected=n * n)
    return rep.finish()


def _scalar_endgame(i: int, m: int) -> tuple[int, list]:
    """Tuples over {0} u mu_i with t_1^i = ... = t_m^i and t_1...t_m = 0."""
    cands = [ZERO] + [cyclo_make(i, k) for k in range(i)]
    pw = [x**i for x in cands]
    sols = []
    count = 0

    def go(prefix, prod, first_pow):
        nonlocal count
        if len(prefix) == m:
            count += 1
            if prod == 0:
                sols.append(tuple(prefix))
            return
        for k, x in enumerate(cands):
            if first_pow is not None and pw[k] != first_pow:
                count += (len(cands)) ** (m - len(prefix) - 1)
                continue
            go(prefix + [k], prod * x, pw[k] if first_pow is None else first_pow)

    go([], ONE, None)
    return count, [tuple(cands[k] for k in s) for s in sols]


def equal_sigma_product_certificate(group, m: int, i: int, j: int) -> VerificationReport:
    """No fixed points for sigma^(i)(x_1) = ... = sigma^(i)(x_m), sigma^(j)(x_1...x_m) = 0."""
    group = _as_group(group)
    n, e = group.order, group.exponent
    rep = VerificationReport("equal-sigma-product-system",
                             {"group": str(group), "n": n, "m": m, "i": i, "j": j})
    ok = [rep.check("exp(A) divides m", m % e == 0, exponent=e, m=m),
          rep.check("exp(A) divides i", i % e == 0, exponent=e, i=i),
          rep.check("1 <= i <= n and 1 <= j <= n", 1 <= i <= n and 1 <= j <= n)]
    if m < 1:
        ok.append(rep.check("m >= 1", False, m=m))
    if not all(ok):
        return rep.finish("hypotheses_not_met")
    rep.note("exp(A) vs sqf(n)", exponent=e, sqf_n=squarefree_part(n))
    for pe in pairs(group):
        M = pe.matrix()
        c = pe.c
        rep.check(f"{pe.label()}: c | m and c | i", m % c == 0 and i % c == 0, c=c)
        si = char_poly(M)[i - 1]
        rep.check(f"{pe.label()}: sigma^(i)(P_a D_chi) != 0", si != 0, sigma_i=si)
        Mm = M**m
        s = Mm.is_scalar()
        rep.check(f"{pe.label()}: (P_a D_chi)^m = +-I", s is not None and (s == 1 or s == -1),
                  scalar=s if s is not None else "not scalar")
        sj = char_poly(Mm)[j - 1]
        rep.check(f"{pe.label()}: sigma^(j)((P_a D_chi)^m) != 0", sj != 0, sigma_j=sj)
    rep.note("reduced scalar system: t_1^i = ... = t_m^i, t_1...t_m = 0 forces all t_r = 0")
    if i * m <= 36:
        count, sols = _scalar_endgame(i, m)
        rep.check("scalar system over {0} u mu_i: only the zero tuple", sols == [(ZERO,) * m],
                  tuples=count, solutions=len(sols))
    else:
        rep.note("scalar system enumeration skipped (i*m > 36)", i_times_m=i * m)
    return rep.finish()


def _root_tuples(order: int, v: int):
    roots = [cyclo_make(order, k) for k in range(order)]
    return product(roots, repeat=v)


def root_of_unity_condition_check(poly: MultiPoly, i: int, j: int, u: int, d: int | None,
                               group, cap: int = 10**6) -> VerificationReport:
    """Hypotheses of the generalized system with a homogeneous P of degree d."""
    group = _as_group(group)
    e = group.exponent
    names = sorted(poly.vars, key=var_key)
    params = {"group": str(group), "P": poly, "i": i, "j": j, "u": u, "d": d,
              "variables": names}
    rep = VerificationReport("root-of-unity-condition", params)
    deg = poly.total_degree()
    if d is None:
        d = deg
        params["d"] = d
    homog = rep.check("P is homogeneous of degree d", poly.is_homogeneous(d) and not poly.is_zero(),
                      degree=deg, d=d)
    cond = [rep.check("exp(A) divides i*u", (i * u) % e == 0, exponent=e, iu=i * u),
            rep.check("exp(A) divides j*d", (j * d) % e == 0, exponent=e, jd=j * d)]
    if not homog or not all(cond):
        return rep.finish("hypotheses_not_met")
    order, v = i * j, len(names)
    total = order**v
    if total > cap:
        rep.note("root tuple enumeration exceeds the cap", tuples=total, cap=cap)
        return rep.finish("not_checked")
    checked = 0
    for tup in _root_tuples(order, v):
        checked += 1
        val = poly.evaluate(dict(zip(names, tup)))
        if val == 0:
            rep.check("P is nonzero at every tuple of ij-th roots of unity", False,
                      checked=checked)
            rep.witness("P vanishes at", point=list(tup), value=val)
            return rep.finish("refuted")
    rep.check("P is nonzero at every tuple of ij-th roots of unity", True,
              roots_order=order, tuples=checked)
    return rep.finish()


def _block_character_sums(n_block: int, m: int):
    grp = AbelianGroupSpec.elementary(n_block)
    out = []
    for chi in grp.characters():
        s = sum((chi(g) ** m for g in grp.elements), ZERO)
        out.append((chi, s))
    return grp, out


def sn_fixed_point_certificate(n1: int, n2: int, m1: int, m2: int) -> VerificationReport:
    """Fixed points of H_1 x H_2 on the variety p_m1 = p_m2 = 0 in P^(n-1)."""
    rep = VerificationReport("two-block-trace-fixed-points",
                             {"n1": n1, "n2": n2, "m1": m1, "m2": m2})
    sy = TwoBlockSystem(n1, n2, m1, m2, "trace")
    q = CycloNum(-n2) / n1
    rep.note("hypothesis (i): (-n2/n1)^(m2-m1) != 1", value=q ** (m2 - m1),
             holds=q ** (m2 - m1) != 1)
    h2 = [squarefree_part(k) for k in (n1, n2)]
    rep.note("hypothesis (ii): sqf(n_i) divides m1 or m2",
             sqf_n1=h2[0], sqf_n2=h2[1],
             holds=all(m1 % s == 0 or m2 % s == 0 for s in h2))
    found = []
    dec = decide_two_block(sy)
    dec.record(rep, "type I: ")
    if not dec.only_trivial:
        found.append(("I", dec.witness))
    for label, nb in (("II", n1), ("III", n2)):
        grp, sums1 = _block_character_sums(nb, m1)
        _, sums2 = _block_character_sums(nb, m2)
        for (chi, s1), (_, s2) in zip(sums1, sums2):
            tag = f"type {label}: H={grp} chi={_tup(chi.exponents)}"
            on_y = s1 == 0 and s2 == 0
            if on_y:
                rep.witness(f"{tag} lies on Y", sum_m1=s1, sum_m2=s2)
                found.append((label, chi.exponents))
            else:
                rep.check(f"{tag} not on Y", True, sum_m1=s1, sum_m2=s2)
    if found:
        rep.note("fixed points found", types=[t for t, _ in found])
        return rep.finish("refuted")
    return rep.finish()


def character_decomposition_check(n1: int, n2: int) -> VerificationReport:
    """Character spaces of H_1 x H_2 acting on k^(n1+n2) block by block."""
    n = n1 + n2
    rep = VerificationReport("two-block-character-spaces", {"n1": n1, "n2": n2})
    g1, g2 = AbelianGroupSpec.elementary(n1), AbelianGroupSpec.elementary(n2)
    H = AbelianGroupSpec(g1.cyclic_orders + g2.cyclic_orders)
    s1 = len(g1.cyclic_orders)

    def action(h):
        P1 = perm_matrix(g1, h[:s1])
        P2 = perm_matrix(g2, h[s1:])
        rows = [[ZERO] * n for _ in range(n)]
        for r in range(n1):
            for c in range(n1):
                rows[r][c] = P1[r, c]
        for r in range(n2):
            for c in range(n2):
                rows[n1 + r][n1 + c] = P2[r, c]
        return PolyMatrix(rows)

    gens = H.generators()
    mats = [action(h) for h in gens]
    dims = {}
    for psi in H.characters():
        stacked = []
        for h, M in zip(gens, mats):
            shifted = M - PolyMatrix.identity(n) * psi(h)
            stacked.extend(shifted.tolist())
        dims[psi.exponents] = n - (rank(stacked) if stacked else 0)
    trivial = H.identity
    rep.check("trivial character space is 2-dimensional", dims[trivial] == 2, dim=dims[trivial])
    ind1 = [ONE] * n1 + [ZERO] * n2
    ind2 = [ZERO] * n1 + [ONE] * n2
    fixed = all(_apply(M, ind1) == ind1 and _apply(M, ind2) == ind2 for M in mats)
    rep.check("block indicator vectors span the trivial space", fixed)
    lines = {k: v for k, v in dims.items() if k != trivial and v}
    rep.check("nontrivial character spaces are lines", all(v == 1 for v in lines.values()),
              dims=sorted(lines.values()))
    rep.check("n - 2 one-dimensional summands", len(lines) == n - 2,
              count=len(lines), expected=n - 2)
    rep.check("dimensions add up to n", sum(dims.values()) == n, total=sum(dims.values()))
    seen = []
    for block, grp, offset in ((1, g1, 0), (2, g2, n1)):
        for chi in grp.characters():
            if chi.is_trivial():
                continue
            vec = [ZERO] * n
            for k, g in enumerate(grp.elements):
                vec[offset + k] = chi(g)
            # P_h R_chi = chi(h)^-1 R_chi
            eig = []
            for h, M in zip(gens, mats):
                hb = h[:s1] if block == 1 else h[s1:]
                lam = chi(hb).inverse() if any(hb) else ONE
                eig.append(lam)
                if _apply(M, vec) != [x * lam for x in vec]:
                    eig = None
                    break
            tag = f"block {block} chi={_tup(chi.exponents)}"
            rep.check(f"{tag}: R_chi spans a character line", eig is not None,
                      character=eig if eig else "none")
            seen.append(tuple(eig) if eig else None)
    rep.check("characters of the lines are pairwise distinct",
              None not in seen and len(set(seen)) == len(seen), lines=len(seen))
    return rep.finish()


def _apply(M: PolyMatrix, v):
    return [sum((M[r, c] * v[c] for c in range(len(v))), ZERO) for r in range(M.rows)]


def cyclic_counterexample_check() -> VerificationReport:
    """x = diag(1, zeta_3, zeta_3^2), y = cyclic shift: x = zeta_3 y x y^-1, tr x = tr x^2 = 0."""
    rep = VerificationReport("cyclic-degree-3-witness")
    grp = AbelianGroupSpec((3,))
    z = cyclo_make(3)
    D = diag_matrix(grp, Character(grp, (1,)))
    P = perm_matrix(grp, (1,))
    Pinv = P.inverse()
    rep.check("D = diag(1, zeta_3, zeta_3^2)", D == PolyMatrix.diag([1, z, z**2]))
    rep.check("P D P^-1 = zeta_3^-1 D", P @ D @ Pinv == D * z**2)
    rep.check("x = zeta_3 * y x y^-1 with x = D, y = P", (P @ D @ Pinv) * z == D)
    rep.check("tr(x) = 0", D.trace() == 0, value=D.trace())
    rep.check("tr(x^2) = 0", (D @ D).trace() == 0, value=(D @ D).trace())
    rep.check("det(x) = 1", determinant(D) == 1, value=determinant(D))
    dec = decide_two_block(TwoBlockSystem(1, 2, 1, 2, "trace"))
    rep.note("in a field of degree 3 the same trace system has only the trivial solution",
             outcome=dec.outcome)
    return rep.finish()
