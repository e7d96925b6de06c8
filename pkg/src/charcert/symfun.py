"""Symmetric functions, two-block specializations and their decision procedures."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .matrices import determinant, resultant
from .polynomials import ONE_POLY, ZERO_POLY, MultiPoly, as_poly, poly_gcd
from .report import VerificationReport
from .scalars import ONE, ZERO, CycloNum, _divisors, cyclo_make, is_prime, root_of_unity_order


def _as_entry(v):
    if isinstance(v, str):
        return MultiPoly.var(v)
    if isinstance(v, (MultiPoly, CycloNum)):
        return v
    return CycloNum(v)


def elem_sym_all(values) -> list:
    """[s_0, s_1, ..., s_len] of the given values."""
    vals = [_as_entry(v) for v in values]
    e = [ONE] + [ZERO] * len(vals)
    for k, v in enumerate(vals, start=1):
        for i in range(k, 0, -1):
            e[i] = e[i] + e[i - 1] * v
    return e


def elem_sym(i: int, values) -> MultiPoly:
    values = list(values)
    if not 0 <= i <= len(values):
        raise ValueError(f"index {i} out of range 0..{len(values)}")
    return as_poly(elem_sym_all(values)[i])


def power_sum(i: int, values) -> MultiPoly:
    if i < 1:
        raise ValueError("power sums start at index 1")
    total = ZERO_POLY
    for v in values:
        total = total + as_poly(_as_entry(v)) ** i
    return total


def newton_convert(direction: str, seq, n: int | None = None) -> list:
    """Convert (p_1..p_n) <-> (s_1..s_n) with Newton's identities.

    Entries may be scalars or polynomials; the ground field has
    characteristic 0 so dividing by k is always allowed.
    """
    seq = [_as_entry(x) for x in seq]
    n = len(seq) if n is None else n
    if len(seq) < n:
        raise ValueError(f"need {n} input values, got {len(seq)}")
    seq = seq[:n]
    if direction == "powers_to_elementary":
        p = seq
        s = [ONE]
        for k in range(1, n + 1):
            acc = ZERO
            for j in range(1, k + 1):
                t = s[k - j] * p[j - 1]
                acc = acc + t if j % 2 else acc - t
            s.append(acc * Fraction(1, k))
        return s[1:]
    if direction == "elementary_to_powers":
        s = [ONE] + seq
        p = []
        for k in range(1, n + 1):
            acc = s[k] * k if k % 2 else -(s[k] * k)
            for j in range(1, k):
                t = s[j] * p[k - j - 1]
                acc = acc + t if j % 2 else acc - t
            p.append(acc)
        return p
    raise ValueError(f"unknown direction {direction!r}")


def specialize_two_block(i: int, n1: int, n2: int, a: str = "a", b: str = "b") -> MultiPoly:
    """s_i at n1 copies of a and n2 copies of b, via binomial convolution."""
    if n1 < 0 or n2 < 0:
        raise ValueError("block sizes must be nonnegative")
    if not 1 <= i <= n1 + n2:
        raise ValueError(f"index {i} out of range 1..{n1 + n2}")
    A, B = MultiPoly.var(a), MultiPoly.var(b)
    total = ZERO_POLY
    for k in range(max(0, i - n2), min(i, n1) + 1):
        total = total + math.comb(n1, k) * math.comb(n2, i - k) * A**k * B ** (i - k)
    return total


# -- two-block systems --------------------------------------------------------

@dataclass(frozen=True)
class TwoBlockSystem:
    n1: int
    n2: int
    m1: int
    m2: int
    kind: str = "sigma"  # sigma or trace

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("block sizes must be positive")
        if not 1 <= self.m1 < self.m2 <= self.n1 + self.n2:
            raise ValueError("need 1 <= m1 < m2 <= n1 + n2")
        if self.kind not in ("sigma", "trace"):
            raise ValueError(f"unknown system kind {self.kind!r}")

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    def form(self, m: int) -> MultiPoly:
        if self.kind == "sigma":
            return specialize_two_block(m, self.n1, self.n2)
        a, b = MultiPoly.var("a"), MultiPoly.var("b")
        return self.n1 * a**m + self.n2 * b**m

    def forms(self) -> tuple[MultiPoly, MultiPoly]:
        return self.form(self.m1), self.form(self.m2)


@dataclass
class TwoBlockDecision:
    outcome: str  # only_trivial or nontrivial_exists
    witness: tuple | None = None
    steps: list = field(default_factory=list)

    @property
    def only_trivial(self) -> bool:
        return self.outcome == "only_trivial"

    def record(self, report: VerificationReport, prefix: str = ""):
        for kind, desc, vals in self.steps:
            desc = prefix + desc
            if kind == "note":
                report.note(desc, **vals)
            elif kind == "witness":
                report.witness(desc, **vals)
            else:
                report.check(desc, kind == "ok", **vals)


def decide_two_block(system: TwoBlockSystem) -> TwoBlockDecision:
    """Decide whether the two forms have a common zero (a, b) != (0, 0) over the closure."""
    if system.kind == "trace":
        return _decide_trace(system)
    return _decide_sigma(system)


def _decide_trace(sy: TwoBlockSystem) -> TwoBlockDecision:
    n1, n2, m1, m2 = sy.n1, sy.n2, sy.m1, sy.m2
    g = m2 - m1
    steps = [("note", "forms", {"f1": sy.form(m1), "f2": sy.form(m2)}),
             ("note", "branch b = 0 forces a = 0 since n1 != 0", {"n1": n1})]
    q = CycloNum(Fraction(-n2, n1))
    order = root_of_unity_order(q)
    crit = q**g
    steps.append(("note", "branch b != 0: r = a/b needs r^m1 = -n2/n1 and r^(m2-m1) = 1",
                  {"-n2/n1": q, "root_of_unity_order": order if order else "none",
                   "(-n2/n1)^(m2-m1)": crit}))
    witness = None
    if order is not None:
        for k in range(g):
            r = cyclo_make(g, k)
            if r**m1 == q:
                witness = (r, ONE)
                break
    if witness is None:
        if crit != 1:
            steps.append(("ok", "(-n2/n1)^(m2-m1) != 1, so no nonzero ratio exists",
                          {"value": crit}))
        else:
            steps.append(("ok", "no (m2-m1)-th root of unity r has r^m1 = -n2/n1",
                          {"m2-m1": g, "m1": m1}))
        return TwoBlockDecision("only_trivial", None, steps)
    a, b = witness
    f1, f2 = sy.forms()
    vals = {"a": a, "b": b, "f1": f1.evaluate({"a": a, "b": b}), "f2": f2.evaluate({"a": a, "b": b})}
    steps.append(("witness", "nontrivial common zero", vals))
    return TwoBlockDecision("nontrivial_exists", witness, steps)


def _decide_sigma(sy: TwoBlockSystem) -> TwoBlockDecision:
    f1, f2 = sy.forms()
    steps = [("note", "forms", {"f1": f1, "f2": f2})]
    # projective point (1:0)
    at_inf = (f1.coefficient(a=sy.m1), f2.coefficient(a=sy.m2))
    if at_inf[0] == 0 and at_inf[1] == 0:
        vals = {"a": 1, "b": 0, "f1": 0, "f2": 0}
        steps.append(("witness", "line b = 0 is a common zero", vals))
        return TwoBlockDecision("nontrivial_exists", (ONE, ZERO), steps)
    steps.append(("ok", "line b = 0: leading a-coefficients not both zero",
                  {"f1(1,0)": at_inf[0], "f2(1,0)": at_inf[1]}))
    at_zero = (f1.coefficient(b=sy.m1), f2.coefficient(b=sy.m2))
    steps.append(("note", "line a = 0 values (covered by the dehomogenized resultant)",
                  {"f1(0,1)": at_zero[0], "f2(0,1)": at_zero[1]}))
    u1 = f1.substitute({"b": 1}).substitute({"a": MultiPoly.var("t")})
    u2 = f2.substitute({"b": 1}).substitute({"a": MultiPoly.var("t")})
    res = resultant(u1, u2, "t")
    if not res.is_zero():
        steps.append(("ok", "resultant in t = a/b is nonzero", {"resultant": res}))
        return TwoBlockDecision("only_trivial", None, steps)
    steps.append(("note", "resultant in t = a/b vanishes", {"resultant": res}))
    common = poly_gcd(u1, u2)
    steps.append(("note", "common factor", {"gcd": common}))
    w = _find_root(common, "t", 2 * sy.n)
    if w is None:
        steps.append(("note", "no rational or root-of-unity witness of order <= 2n", {}))
        return TwoBlockDecision("nontrivial_exists", None, steps)
    vals = {"a": w, "b": 1, "f1": f1.evaluate({"a": w, "b": 1}), "f2": f2.evaluate({"a": w, "b": 1})}
    steps.append(("witness", "nontrivial common zero", vals))
    return TwoBlockDecision("nontrivial_exists", (w, ONE), steps)


def _find_root(p: MultiPoly, var: str, max_order: int):
    """A rational root or a root of unity of order <= max_order, else None."""
    if p.is_constant():
        return None
    uni = p.as_univariate(var)
    coeffs = {d: c.constant_value() for d, c in uni.items()}
    if all(c.is_rational() for c in coeffs.values()):
        fr = {d: c.to_fraction() for d, c in coeffs.items()}
        den = math.lcm(*(f.denominator for f in fr.values()))
        ints = {d: int(f * den) for d, f in fr.items()}
        lo = min(ints)
        if lo > 0:
            return ZERO
        lead, const = ints[max(ints)], ints[lo]
        for pn in _divisors(abs(const)):
            for qd in _divisors(abs(lead)):
                for sgn in (1, -1):
                    r = CycloNum(Fraction(sgn * pn, qd))
                    if p.evaluate({var: r}) == 0:
                        return r
    for d in range(1, max_order + 1):
        for k in range(d):
            if math.gcd(k, d) == 1:
                r = cyclo_make(d, k)
                if p.evaluate({var: r}) == 0:
                    return r
    return None


# -- high powers example --------------------------------------------------------

def high_powers_check(n: int, include_c: bool = True) -> VerificationReport:
    """Finite checks behind the nonexistence argument for
    sum_i sigma^(i)(x)^n sigma^(n)(x)^(n-1-i) + c sigma^(n)(x)^(2n-2) = 0, n prime.

    For every nontrivial n-th root of unity zeta and q = (1, zeta, ..., zeta^(n-1)):
    s_i(q) = 0 for i < n, so the initial form vanishes at q; every (n-1)x(n-1)
    minor of the Jacobian of s_1..s_(n-1) at q is nonzero; and the matching
    power-sum minor is (n-1)! times a Vandermonde determinant.
    """
    if not is_prime(n) or n < 3:
        raise ValueError(f"n must be an odd prime, got {n}")
    rep = VerificationReport("high-powers", {"n": n, "include_c": include_c})
    # weighted degree in x of s_i^n s_n^(n-1-i) is n*i + n*(n-1-i) = n(n-1)
    init_deg = n * (n - 1)
    degs = [n * i + n * (n - 1 - i) for i in range(1, n)]
    rep.check("initial-form terms s_i^n s_n^(n-1-i) are homogeneous of degree n(n-1)",
              all(d == init_deg for d in degs), degree=init_deg)
    if include_c:
        c_deg = n * (2 * n - 2)
        rep.check("c*s_n^(2n-2) has higher degree, so it is not in the initial form",
                  c_deg > init_deg, c_term_degree=c_deg, initial_degree=init_deg)
    sign = (-1) ** ((n - 1) * (n - 2) // 2)
    unit = sign * math.factorial(n - 1)
    for k in range(1, n):
        zeta = cyclo_make(n, k)
        q = [zeta**j for j in range(n)]
        tag = f"zeta=zeta({n})^{k}"
        s = elem_sym_all(q)
        rep.check(f"{tag}: s_i(q) = 0 for i = 1..n-1", all(s[i] == 0 for i in range(1, n)),
                  s_n=s[n])
        init_val = sum((s[i] ** n * s[n] ** (n - 1 - i) for i in range(1, n)), ZERO)
        rep.check(f"{tag}: initial form vanishes at q", init_val == 0, value=init_val)
        shifted = [q[(j + 1) % n] for j in range(n)]
        rep.check(f"{tag}: cyclic shift of coordinates multiplies q by zeta",
                  all(x == y * zeta for x, y in zip(shifted, q)))
        for l in range(n):
            cols = [j for j in range(n) if j != l]
            # d s_i / d x_j = s_(i-1) of the values with x_j removed
            jac_s = [[elem_sym_all(q[:j] + q[j + 1:])[i - 1] for j in cols] for i in range(1, n)]
            jac_p = [[i * q[j] ** (i - 1) for j in cols] for i in range(1, n)]
            d_s = determinant(jac_s)
            d_p = determinant(jac_p)
            pts = [q[j] for j in cols]
            vdm = ONE
            for x, y in combinations(range(n - 1), 2):
                vdm = vdm * (pts[y] - pts[x])
            rep.check(f"{tag}, l={l}: s-Jacobian minor is nonzero", d_s != 0, det=d_s)
            rep.check(f"{tag}, l={l}: p-Jacobian minor = (n-1)! * Vandermonde, nonzero",
                      d_p == math.factorial(n - 1) * vdm and d_p != 0, det=d_p)
            rep.check(f"{tag}, l={l}: p-minor = {unit} * s-minor (Newton's formulas)",
                      d_p == d_s * unit)
    rep.note("tangent cone of the strict transform at q is not examined")
    return rep.finish()
