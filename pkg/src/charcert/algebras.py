"""Matrix models of symbol algebras, their tensor products, generic matrices
and the general field extension; sigma^(i) in each.

A symbol algebra (z, w)_r is split by adjoining u, v with u^r = z and
v^r = w: x -> X = u*diag(1, zeta, ..., zeta^(r-1)) and y -> Y = v*P with
P e_k = e_(k-1), so that Y X = zeta X Y.  Coefficients of sigma^(i) computed
in the model must only involve u^r and v^r; they are then rewritten in z, w.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .grammar import ParseError, evaluate, parse
from .matrices import PolyMatrix, adjugate, char_poly, determinant, evaluate_poly_at_matrix
from .polynomials import ONE_POLY, ZERO_POLY, MultiPoly, RatFunc, as_poly, parse_poly, poly_gcd
from .report import VerificationReport
from .scalars import ONE, ZERO, CycloNum, cyclo_make


class CentralityError(AssertionError):
    """sigma^(i) of a model matrix did not descend to the center."""


# -- symbol algebras -----------------------------------------------------------

@dataclass(frozen=True)
class SymbolSpec:
    r: int
    z: str = "z"
    w: str = "w"
    u: str = "u"
    v: str = "v"

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("symbol algebra degree must be >= 2")
        if len({self.z, self.w, self.u, self.v}) != 4:
            raise ValueError("symbol algebra variable names must be distinct")

    @property
    def zeta(self) -> CycloNum:
        return cyclo_make(self.r)

    @classmethod
    def parse(cls, text: str) -> "SymbolSpec":
        """``"symbol 2 z w"`` or ``"2 z w"``."""
        parts = text.split()
        if parts and parts[0] == "symbol":
            parts = parts[1:]
        if len(parts) != 3 or not parts[0].isdigit():
            raise ValueError(f"malformed symbol spec {text!r}; expected 'symbol r z w'")
        z, w = parts[1], parts[2]
        return cls(int(parts[0]), z, w, f"u_{z}", f"v_{w}")


@dataclass(frozen=True)
class TensorSpec:
    factors: tuple[SymbolSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("tensor product needs at least one factor")
        names = [n for f in self.factors for n in (f.z, f.w, f.u, f.v)]
        if len(set(names)) != len(names):
            raise ValueError("factors must use pairwise distinct variable names")

    @classmethod
    def single(cls, r: int, z: str = "z", w: str = "w") -> "TensorSpec":
        return cls((SymbolSpec(r, z, w, f"u_{z}", f"v_{w}"),))

    @classmethod
    def generic(cls, degrees) -> "TensorSpec":
        """(z1, w1)_r1 x (z2, w2)_r2 x ..."""
        return cls(tuple(SymbolSpec(r, f"z{t}", f"w{t}", f"u{t}", f"v{t}")
                         for t, r in enumerate(degrees, start=1)))

    @classmethod
    def parse(cls, text: str) -> "TensorSpec":
        """``"symbol 2 z w"``, or several joined with ``(x)``, e.g.
        ``"symbol 2 z1 w1 (x) symbol 3 z2 w2"``."""
        return cls(tuple(SymbolSpec.parse(p) for p in text.split("(x)")))

    @property
    def degree(self) -> int:
        return math.prod(f.r for f in self.factors)

    @property
    def center_vars(self) -> list[str]:
        return [n for f in self.factors for n in (f.z, f.w)]

    def generator_names(self) -> list[tuple[str, str]]:
        if len(self.factors) == 1:
            return [("x", "y")]
        return [(f"x{t}", f"y{t}") for t in range(1, len(self.factors) + 1)]

    def __str__(self):
        return " (x) ".join(f"symbol {f.r} {f.z} {f.w}" for f in self.factors)


def symbol_matrix_model(spec: SymbolSpec) -> tuple[PolyMatrix, PolyMatrix]:
    r, zeta = spec.r, spec.zeta
    u, v = MultiPoly.var(spec.u), MultiPoly.var(spec.v)
    X = PolyMatrix.diag([u * zeta**k for k in range(r)])
    rows = [[ZERO_POLY] * r for _ in range(r)]
    for k in range(r):
        rows[(k - 1) % r][k] = v
    return X, PolyMatrix(rows)


def _self_test():
    s = SymbolSpec(3)
    X, Y = symbol_matrix_model(s)
    if Y @ X != (X @ Y) * s.zeta:
        raise AssertionError("symbol model orientation: expected Y X = zeta X Y")


_self_test()


def tensor_model(spec: TensorSpec) -> list[tuple[PolyMatrix, PolyMatrix]]:
    """Generators (X_t, Y_t) of every factor as n x n matrices."""
    models = [symbol_matrix_model(f) for f in spec.factors]
    idents = [PolyMatrix.identity(f.r, ONE_POLY) for f in spec.factors]
    out = []
    for t, (X, Y) in enumerate(models):
        gx, gy = None, None
        for s, I in enumerate(idents):
            ax = X if s == t else I
            ay = Y if s == t else I
            gx = ax if gx is None else gx.kron(ax)
            gy = ay if gy is None else gy.kron(ay)
        out.append((gx, gy))
    return out


def center_substitution(spec: TensorSpec) -> dict:
    return {n: MultiPoly.var(rad) ** f.r
            for f in spec.factors for n, rad in ((f.z, f.u), (f.w, f.v))}


# -- elements of tensor products of symbol algebras --------------------------------

@dataclass(frozen=True)
class AlgebraElement:
    """sum of c * x1^i1 y1^j1 x2^i2 y2^j2 ... with c in k(zeta)(z_t, w_t)."""

    spec: TensorSpec
    coords: dict = field(default_factory=dict)  # (i1, j1, i2, j2, ...) -> MultiPoly/RatFunc

    def __post_init__(self):
        clean = {}
        for e, c in self.coords.items():
            e = tuple(e)
            if len(e) != 2 * len(self.spec.factors):
                raise ValueError("basis exponent tuple has the wrong length")
            e = tuple(x % self.spec.factors[k // 2].r for k, x in enumerate(e))
            c = c if isinstance(c, (MultiPoly, RatFunc)) else as_poly(c)
            if isinstance(c, RatFunc) and c.is_polynomial():
                c = c.as_poly()
            s = clean.get(e)
            c = c if s is None else s + c
            if c == 0:
                clean.pop(e, None)
            else:
                clean[e] = c
        object.__setattr__(self, "coords", clean)

    @classmethod
    def scalar(cls, spec: TensorSpec, c) -> "AlgebraElement":
        return cls(spec, {(0,) * (2 * len(spec.factors)): c})

    @classmethod
    def generator(cls, spec: TensorSpec, t: int, which: str) -> "AlgebraElement":
        e = [0] * (2 * len(spec.factors))
        e[2 * t + (0 if which == "x" else 1)] = 1
        return cls(spec, {tuple(e): ONE_POLY})

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self.coords)
        for e, c in other.coords.items():
            d[e] = d[e] + c if e in d else c
        return AlgebraElement(self.spec, d)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.spec, {e: -c for e, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.spec != self.spec:
                raise ValueError("elements of different algebras")
            return other
        return AlgebraElement.scalar(self.spec, other)

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.coords.items():
            for e2, c2 in other.coords.items():
                coeff, e = _basis_product(self.spec, e1, e2)
                c = c1 * c2 * coeff
                out[e] = out[e] + c if e in out else c
        return AlgebraElement(self.spec, out)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = AlgebraElement.scalar(self.spec, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.spec == other.spec and self.coords == other.coords

    def __hash__(self):
        return hash((self.spec, tuple(sorted(self.coords))))

    def __str__(self):
        if not self.coords:
            return "0"
        names = self.spec.generator_names()
        out = ""
        for e in sorted(self.coords):
            mono = []
            for t, (xn, yn) in enumerate(names):
                for name, k in ((xn, e[2 * t]), (yn, e[2 * t + 1])):
                    if k:
                        mono.append(name if k == 1 else f"{name}^{k}")
            c = str(self.coords[e])
            neg = c.startswith("-") and " " not in c
            if neg and out:
                c = c[1:]
            if " " in c:
                c = f"({c})"
            if mono:
                term = "*".join(mono) if c in ("1", "-1") else f"{c}*" + "*".join(mono)
                if c == "-1":
                    term = "-" + term
            else:
                term = c
            out = term if not out else out + (" - " if neg else " + ") + term
        return out

    def matrix(self) -> PolyMatrix:
        """Image in the matrix model (center variables rewritten as u^r, v^r)."""
        return _element_matrix(self, _polynomial_coords(self)[0])


def _basis_product(spec: TensorSpec, e1, e2):
    # (x^a y^b)(x^c y^d) = zeta^(b c) x^(a+c) y^(b+d), then x^r = z, y^r = w
    coeff = ONE_POLY
    out = []
    for t, f in enumerate(spec.factors):
        a, b = e1[2 * t], e1[2 * t + 1]
        c, d = e2[2 * t], e2[2 * t + 1]
        coeff = coeff * f.zeta ** (b * c)
        i, j = a + c, b + d
        if i >= f.r:
            coeff = coeff * MultiPoly.var(f.z)
            i -= f.r
        if j >= f.r:
            coeff = coeff * MultiPoly.var(f.w)
            j -= f.r
        out += [i, j]
    return coeff, tuple(out)


def _polynomial_coords(elem: AlgebraElement):
    """Scale coordinates to polynomials: returns (coords, common denominator)."""
    den = ONE_POLY
    for c in elem.coords.values():
        if isinstance(c, RatFunc):
            g = poly_gcd(den, c.den)
            den = den * c.den.divexact(g)
    coords = {}
    for e, c in elem.coords.items():
        if isinstance(c, RatFunc):
            coords[e] = c.num * den.divexact(c.den)
        else:
            coords[e] = c * den
    return coords, den


def _element_matrix(elem: AlgebraElement, coords: dict) -> PolyMatrix:
    spec = elem.spec
    gens = tensor_model(spec)
    n = spec.degree
    sub = center_substitution(spec)
    total = PolyMatrix.zeros(n, n, ZERO_POLY)
    pow_cache: dict = {}

    def gpow(t, which, k):
        key = (t, which, k)
        if key not in pow_cache:
            pow_cache[key] = gens[t][which] ** k
        return pow_cache[key]

    for e, c in coords.items():
        M = None
        for t in range(len(spec.factors)):
            for which in (0, 1):
                k = e[2 * t + which]
                if k:
                    G = gpow(t, which, k)
                    M = G if M is None else M @ G
        c = as_poly(c).substitute(sub)
        term = PolyMatrix.identity(n, ONE_POLY) * c if M is None else M * c
        total = total + term
    return total


def sigma_uv(spec: TensorSpec, elem: AlgebraElement) -> list:
    """sigma^(1..n) of the (polynomially scaled) element in the radical variables."""
    coords, _ = _polynomial_coords(elem)
    return char_poly(_element_matrix(elem, coords))


def _descend(spec: TensorSpec, p: MultiPoly) -> MultiPoly:
    # rewrite a polynomial in u_t^r, v_t^r as one in z_t, w_t
    rad = {f.u: (f.z, f.r) for f in spec.factors}
    rad.update({f.v: (f.w, f.r) for f in spec.factors})
    p = as_poly(p)
    new_vars = []
    for v in p.vars:
        if v in rad:
            new_vars.append(rad[v][0])
        else:
            raise CentralityError(f"unexpected variable {v!r} in sigma")
    terms = {}
    for e, c in p.terms.items():
        ne = []
        for v, k in zip(p.vars, e):
            r = rad[v][1]
            if k % r:
                raise CentralityError(f"sigma involves {v}^{k}, not a power of {v}^{r}")
            ne.append(k // r)
        terms[tuple(ne)] = c
    return MultiPoly(new_vars, terms)


def sigma_all(spec: TensorSpec, elem: AlgebraElement) -> list:
    """All sigma^(i) of elem, expressed in the center variables."""
    coords, den = _polynomial_coords(elem)
    sig = char_poly(_element_matrix(elem, coords))
    out = []
    for i, s in enumerate(sig, start=1):
        p = _descend(spec, s)
        out.append(p if den == ONE_POLY else RatFunc(p, den**i))
    return out


def sigma_in_algebra(spec: TensorSpec, elem: AlgebraElement, i: int):
    n = spec.degree
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    return sigma_all(spec, elem)[i - 1]


def galois_invariance_check(spec: TensorSpec, elem: AlgebraElement) -> bool:
    """sigma^(i) in u, v is fixed by u_t -> zeta u_t and v_t -> zeta v_t."""
    sig = sigma_uv(spec, elem)
    for f in spec.factors:
        for name in (f.u, f.v):
            b = {name: MultiPoly.var(name) * f.zeta}
            if any(as_poly(s).substitute(b) != s for s in sig):
                return False
    return True


def parse_element(spec: TensorSpec, text: str) -> AlgebraElement:
    """Parse e.g. ``"1 + z*x - 2*x*y"`` (generators x, y or x1, y1, x2, ...)."""
    node = parse(text)
    gens = {}
    for t, (xn, yn) in enumerate(spec.generator_names()):
        gens[xn] = AlgebraElement.generator(spec, t, "x")
        gens[yn] = AlgebraElement.generator(spec, t, "y")
    centers = set(spec.center_vars)

    def var(name, n):
        if name in gens:
            return gens[name]
        if name in centers:
            return AlgebraElement.scalar(spec, MultiPoly.var(name))
        raise ParseError(f"unknown symbol {name!r}", text, n.pos)

    def divide(a, b, n):
        if len(b.coords) == 1 and not any(next(iter(b.coords))):
            c = next(iter(b.coords.values()))
            return a * AlgebraElement.scalar(spec, RatFunc(ONE_POLY) / c)
        raise ParseError("only division by central scalars is allowed", text, n.pos)

    def power(x, e):
        if e < 0:
            raise ParseError("negative exponent", text, node.pos)
        return x**e

    return evaluate(node, var=var, scalar=lambda c: AlgebraElement.scalar(spec, c),
                    divide=divide, power=power)


# -- generic matrices and the general field extension --------------------------------

def _entry_name(prefix: str, i: int, j: int, n: int) -> str:
    return f"{prefix}{i}{j}" if n < 10 else f"{prefix}{i}_{j}"


def generic_matrices(n: int) -> tuple[PolyMatrix, PolyMatrix]:
    X = PolyMatrix([[MultiPoly.var(_entry_name("s", i, j, n)) for j in range(1, n + 1)]
                    for i in range(1, n + 1)])
    Y = PolyMatrix([[MultiPoly.var(_entry_name("t", i, j, n)) for j in range(1, n + 1)]
                    for i in range(1, n + 1)])
    return X, Y


def evaluate_word(n: int, word) -> PolyMatrix:
    """Evaluate an expression over X, Y (and scalars) on the generic matrices."""
    node = parse(word) if isinstance(word, str) else word
    X, Y = generic_matrices(n)
    I = PolyMatrix.identity(n, ONE_POLY)
    mats = {"X": X, "Y": Y}

    def var(name, nd):
        if name not in mats:
            raise ParseError(f"unknown generator {name!r}; use X and Y",
                             word if isinstance(word, str) else "", nd.pos)
        return mats[name]

    def scal(c):
        return I * c

    def power(m, e):
        if e < 0:
            raise ValueError("negative powers of generic matrices are not supported")
        return m**e

    return evaluate(node, var=var, scalar=scal, mul=lambda a, b: a @ b, power=power)


def ud_sigma(n: int, word, i: int) -> MultiPoly:
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    return as_poly(char_poly(evaluate_word(n, word))[i - 1])


def companion_matrix(n: int, prefix: str = "a") -> PolyMatrix:
    """Companion matrix of x^n + a1 x^(n-1) + ... + an."""
    rows = [[ZERO_POLY] * n for _ in range(n)]
    for k in range(n - 1):
        rows[k + 1][k] = ONE_POLY
    for k in range(n):
        rows[k][n - 1] = -MultiPoly.var(f"{prefix}{n - k}")
    return PolyMatrix(rows)


def _as_univariate_poly(g, var: str = "x") -> MultiPoly:
    g = parse_poly(g) if isinstance(g, str) else as_poly(g)
    return g


def _at_matrix(g: MultiPoly, M: PolyMatrix, var: str = "x") -> PolyMatrix:
    uni = g.as_univariate(var)
    if not uni:
        return PolyMatrix.zeros(M.rows, M.cols, ZERO_POLY)
    deg = max(uni)
    coeffs = [uni.get(d, ZERO_POLY) for d in range(deg, -1, -1)]
    return evaluate_poly_at_matrix(coeffs, M)


def general_ext_sigma(n: int, g, i: int, var: str = "x") -> MultiPoly:
    """sigma^(i) of g(x) in K_n[x]/(x^n + a1 x^(n-1) + ... + an)."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    g = _as_univariate_poly(g, var)
    return as_poly(char_poly(_at_matrix(g, companion_matrix(n), var))[i - 1])


def inverse_identity_check(n: int, g, var: str = "x") -> VerificationReport:
    """sigma^(n-i)(g^-1) = sigma^(i)(g) / sigma^(n)(g) in the general extension."""
    g = _as_univariate_poly(g, var)
    rep = VerificationReport("inverse-sigma-identity", {"n": n, "g": g})
    M = _at_matrix(g, companion_matrix(n), var)
    sig = char_poly(M)
    det = as_poly(determinant(M))
    if det.is_zero():
        rep.check("g is invertible (sigma^(n)(g) != 0)", False, sigma_n=sig[-1])
        return rep.finish("hypotheses_not_met")
    rep.check("g is invertible (sigma^(n)(g) != 0)", True, sigma_n=sig[-1])
    # g^-1 = adj(M) / det(M): sigma^(k)(adj/det) = sigma^(k)(adj) / det^k
    sig_adj = char_poly(adjugate(M))
    inv_sig = [RatFunc(as_poly(s), det**k) for k, s in enumerate(sig_adj, start=1)]
    for i in range(1, n):
        lhs = inv_sig[n - i - 1]
        rhs = RatFunc(as_poly(sig[i - 1]), as_poly(sig[-1]))
        rep.check(f"i={i}: sigma^(n-i)(g^-1) = sigma^(i)(g)/sigma^(n)(g)", lhs == rhs, value=lhs)
    return rep.finish()


def ext_to_generic_consistency(n: int, g, var: str = "x") -> VerificationReport:
    """sigma^(i) in the general extension, pushed to generic matrices via
    a_t -> sigma^(t)(X) and x -> X, equals sigma^(i)(g(X))."""
    g = _as_univariate_poly(g, var)
    rep = VerificationReport("extension-to-generic-matrix", {"n": n, "g": g})
    X, _ = generic_matrices(n)
    sx = char_poly(X)
    sub = {f"a{t}": as_poly(sx[t - 1]) for t in range(1, n + 1)}
    gX = _at_matrix(g, X, var)
    rhs_all = char_poly(gX)
    for i in range(1, n + 1):
        lhs = general_ext_sigma(n, g, i, var).substitute(sub)
        rhs = as_poly(rhs_all[i - 1])
        rep.check(f"i={i}: substituted extension sigma equals generic-matrix sigma",
                  lhs == rhs, value=rhs)
    return rep.finish()


# -- randomized search ----------------------------------------------------------------

PREDICATES = ("trace0_norm1", "sigma_i_zero")


def _predicate(name: str):
    if name in ("trace0_norm1", "trace0-norm1"):
        return "trace0_norm1", None
    for prefix in ("sigma_i_zero", "sigma-zero", "sigma_zero"):
        if name.startswith(prefix):
            rest = name[len(prefix):].strip("():_- ")
            if not rest.isdigit():
                raise ValueError(f"predicate {name!r} needs an index, e.g. sigma-zero:2")
            return "sigma_i_zero", int(rest)
    raise ValueError(f"unknown predicate {name!r}")


def random_element(spec: TensorSpec, rng: np.random.Generator, degree_bound: int,
                   coeff_range: int = 3) -> AlgebraElement:
    centers = spec.center_vars
    monos = [e for e in product(range(degree_bound + 1), repeat=len(centers))
             if sum(e) <= degree_bound]
    basis = list(product(*[range(f.r) for f in spec.factors for _ in (0, 1)]))
    while True:
        coords = {}
        for b in basis:
            cs = rng.integers(-coeff_range, coeff_range + 1, size=len(monos))
            terms = {m: int(c) for m, c in zip(monos, cs) if c}
            if terms:
                coords[b] = MultiPoly(centers, terms)
        elem = AlgebraElement(spec, coords)
        if not elem.is_zero():
            return elem


def evidence_search(spec: TensorSpec, predicate: str, trials: int, seed: int,
                    degree_bound: int = 1) -> VerificationReport:
    """Sample nonzero elements and test a predicate that the theory says never holds."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    kind, idx = _predicate(predicate)
    n = spec.degree
    if kind == "sigma_i_zero" and not 1 <= idx <= n:
        raise ValueError(f"sigma index {idx} out of range 1..{n}")
    label = kind if idx is None else f"sigma_{idx}_zero"
    rep = VerificationReport("random-element-search",
                             {"algebra": str(spec), "predicate": label, "trials": trials,
                              "degree_bound": degree_bound}, seed=seed)
    hits = 0
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        x = random_element(spec, rng, degree_bound)
        sig = sigma_all(spec, x)
        if kind == "trace0_norm1":
            hit = sig[0] == 0 and sig[-1] * (-1) ** n == 1
        else:
            hit = sig[idx - 1] == 0
        if hit:
            hits += 1
            rep.witness("element satisfying the predicate", trial=trial, element=str(x),
                        sigma=sig)
    rep.check("no sampled element satisfies the predicate", hits == 0, hits=hits,
              trials=trials)
    if hits:
        return rep.finish("refuted")
    rep.note("sampling cannot prove a statement about all elements")
    return rep.finish("evidence")
