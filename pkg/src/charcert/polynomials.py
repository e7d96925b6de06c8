"""Sparse multivariate polynomials and rational functions over Q(zeta).

A MultiPoly keeps its variables sorted (natural order, so ``s2`` sorts
before ``s10``) and pruned to the ones that actually occur, which makes
the dict of terms a canonical form: equality is dict equality.
"""
from __future__ import annotations

import re
from numbers import Rational as _RationalABC

from .grammar import Node, ParseError, evaluate, parse
from .scalars import ONE, ZERO, CycloNum


def var_key(name: str):
    return tuple((1, int(p)) if p.isdigit() else (0, p) for p in re.findall(r"\d+|\D+", name))


def _monomial_key(exps):
    return (sum(exps), exps)


def _scalar(c) -> CycloNum | None:
    if isinstance(c, CycloNum):
        return c
    if isinstance(c, (int, _RationalABC)):
        return CycloNum(c)
    return None


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        """Build from raw data; use the constructors below in normal code."""
        vars = tuple(vars)
        terms = {tuple(e): CycloNum(c) if not isinstance(c, CycloNum) else c
                 for e, c in (terms or {}).items()}
        self.vars, self.terms = _canonical(vars, terms)

    @classmethod
    def _raw(cls, vars, terms) -> "MultiPoly":
        obj = object.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = _scalar(c)
        if c is None:
            raise TypeError("constant must be a scalar")
        return cls._raw((), {(): c} if c else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls._raw((name,), {(1,): ONE})

    @classmethod
    def monomial(cls, coeff, **exps) -> "MultiPoly":
        return cls(tuple(exps), {tuple(exps.values()): coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> CycloNum:
        if self.vars:
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, name: str) -> int:
        if not self.terms:
            return -1
        if name not in self.vars:
            return 0
        k = self.vars.index(name)
        return max(e[k] for e in self.terms)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def homogeneous_component(self, d: int) -> "MultiPoly":
        return MultiPoly(self.vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _monomial_key(t[0]), reverse=True)

    def leading_term(self):
        e = max(self.terms, key=_monomial_key)
        return e, self.terms[e]

    def leading_coefficient(self) -> CycloNum:
        if not self.terms:
            return ZERO
        return self.leading_term()[1]

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        if lc == ONE:
            return self
        inv = lc.inverse()
        return MultiPoly._raw(self.vars, {e: c * inv for e, c in self.terms.items()})

    def coefficient(self, **exps) -> CycloNum:
        key = tuple(exps.get(v, 0) for v in self.vars)
        if any(v not in self.vars and e for v, e in exps.items()):
            return ZERO
        return self.terms.get(key, ZERO)

    # -- alignment ---------------------------------------------------------

    def _aligned(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars = tuple(sorted(set(self.vars) | set(other.vars), key=var_key))
        return vars, _embed(self, vars), _embed(other, vars)

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        c = _scalar(other)
        if c is None:
            return None
        return MultiPoly.const(c)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        vars, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return _pruned(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        c = _scalar(other)
        if c is not None:
            if c.is_zero():
                return ZERO_POLY
            return MultiPoly._raw(self.vars, {e: x * c for e, x in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO_POLY
        if not other.vars:
            return self * other.terms[()]
        if not self.vars:
            return other * self.terms[()]
        vars, a, b = self._aligned(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                s = out.get(e)
                out[e] = ca * cb if s is None else s + ca * cb
        return _pruned(vars, {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = ONE_POLY
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        c = _scalar(other)
        if c is not None:
            return self * c.inverse()
        if isinstance(other, MultiPoly):
            if other.is_constant():
                return self * other.constant_value().inverse()
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant():
            return self * other.constant_value().inverse()
        vars, r, d = self._aligned(other)
        r = dict(r)
        lt_e = max(d, key=_monomial_key)
        lt_inv = d[lt_e].inverse()
        quot: dict = {}
        while r:
            e = max(r, key=_monomial_key)
            shift = tuple(x - y for x, y in zip(e, lt_e))
            if min(shift) < 0:
                raise ArithmeticError("division is not exact")
            q = r[e] * lt_inv
            quot[shift] = q
            for de, dc in d.items():
                k = tuple(x + y for x, y in zip(de, shift))
                v = r.get(k, ZERO) - q * dc
                if v.is_zero():
                    r.pop(k, None)
                else:
                    r[k] = v
        return _pruned(vars, quot)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if not self.vars:
            return hash(self.terms.get((), ZERO))
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- evaluation --------------------------------------------------------

    def substitute(self, bindings: dict) -> "MultiPoly":
        """Replace bound variables by scalars or polynomials."""
        if not bindings:
            return self
        idx = {v: i for i, v in enumerate(self.vars)}
        bound = [v for v in bindings if v in idx]
        if not bound:
            return self
        values = {v: (bindings[v] if isinstance(bindings[v], MultiPoly)
                      else MultiPoly.const(bindings[v])) for v in bound}
        free = [v for v in self.vars if v not in values]
        free_idx = [idx[v] for v in free]
        cache: dict = {}

        def pw(v, k):
            key = (v, k)
            if key not in cache:
                cache[key] = values[v] ** k
            return cache[key]

        # group terms by their free part to limit the number of products
        groups: dict = {}
        for e, c in self.terms.items():
            fe = tuple(e[i] for i in free_idx)
            be = tuple(e[idx[v]] for v in bound)
            groups.setdefault(be, {})[fe] = c
        total = ZERO_POLY
        for be, fterms in groups.items():
            factor = MultiPoly(free, fterms)
            for v, k in zip(bound, be):
                if k:
                    factor = factor * pw(v, k)
            total = total + factor
        return total

    def evaluate(self, values: dict) -> CycloNum:
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise ValueError(f"no value for {missing}")
        vals = [CycloNum(values[v]) if not isinstance(values[v], CycloNum) else values[v]
                for v in self.vars]
        total = ZERO
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t = t * x**k
            total = total + t
        return total

    def diff(self, name: str) -> "MultiPoly":
        if name not in self.vars:
            return ZERO_POLY
        k = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = e[:k] + (e[k] - 1,) + e[k + 1:]
                out[ne] = c * e[k]
        return _pruned(self.vars, out)

    def map_coefficients(self, f) -> "MultiPoly":
        return MultiPoly(self.vars, {e: f(c) for e, c in self.terms.items()})

    def as_univariate(self, name: str) -> dict[int, "MultiPoly"]:
        """Coefficients in ``name`` as a dict degree -> polynomial."""
        if name not in self.vars:
            return {0: self} if self.terms else {}
        k = self.vars.index(name)
        rest = self.vars[:k] + self.vars[k + 1:]
        groups: dict = {}
        for e, c in self.terms.items():
            groups.setdefault(e[k], {})[e[:k] + e[k + 1:]] = c
        return {d: _pruned(rest, t) for d, t in groups.items()}

    @staticmethod
    def from_univariate(name: str, coeffs: dict) -> "MultiPoly":
        x = MultiPoly.var(name)
        total = ZERO_POLY
        for d, c in coeffs.items():
            total = total + c * x**d
        return total

    # -- printing ----------------------------------------------------------

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            neg = False
            if c.is_rational():
                q = c.to_fraction()
                neg = q < 0
                mag = -c if neg else c
                cs = str(mag)
                if mono and mag == ONE:
                    body = mono
                else:
                    body = f"{cs}*{mono}" if mono else cs
            else:
                cs = str(c)
                if cs.startswith("-") and " " not in cs:
                    neg, cs = True, cs[1:]
                elif " " in cs:
                    cs = f"({cs})"
                body = f"{cs}*{mono}" if mono else cs
            if i == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out


def _canonical(vars, terms):
    terms = {e: c for e, c in terms.items() if not c.is_zero()}
    if len(set(vars)) != len(vars):
        raise ValueError("duplicate variable names")
    for e in terms:
        if len(e) != len(vars):
            raise ValueError("exponent tuple does not match variables")
        if min(e, default=0) < 0:
            raise ValueError("negative exponent")
    used = [i for i, v in enumerate(vars) if any(e[i] for e in terms)]
    order = sorted(used, key=lambda i: var_key(vars[i]))
    new_vars = tuple(vars[i] for i in order)
    new_terms = {tuple(e[i] for i in order): c for e, c in terms.items()}
    return new_vars, new_terms


def _pruned(vars, terms) -> MultiPoly:
    if vars:
        used = [any(e[i] for e in terms) for i in range(len(vars))]
        if not all(used):
            keep = [i for i, u in enumerate(used) if u]
            vars = tuple(vars[i] for i in keep)
            terms = {tuple(e[i] for i in keep): c for e, c in terms.items()}
    return MultiPoly._raw(vars, terms)


def _embed(p: MultiPoly, vars) -> dict:
    pos = [vars.index(v) for v in p.vars]
    n = len(vars)
    out = {}
    for e, c in p.terms.items():
        ne = [0] * n
        for i, k in zip(pos, e):
            ne[i] = k
        out[tuple(ne)] = c
    return out


ZERO_POLY = MultiPoly._raw((), {})
ONE_POLY = MultiPoly._raw((), {(): ONE})


def as_poly(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    return MultiPoly.const(x)


def polys(names: str):
    """``a, b = polys("a b")``"""
    return tuple(MultiPoly.var(n) for n in names.split())


# -- gcd -------------------------------------------------------------------

def _uni_deg(u: dict) -> int:
    return max(u) if u else -1


def _uni_content(u: dict) -> MultiPoly:
    g = ZERO_POLY
    for c in u.values():
        g = poly_gcd(g, c)
        if g == ONE_POLY:
            break
    return g


def _uni_pp(u: dict) -> dict:
    c = _uni_content(u)
    if c == ONE_POLY:
        return u
    return {d: x.divexact(c) for d, x in u.items()}


def _uni_prem(a: dict, b: dict) -> dict:
    db = _uni_deg(b)
    lb = b[db]
    r = dict(a)
    e = _uni_deg(a) - db + 1
    while r and _uni_deg(r) >= db:
        dr = _uni_deg(r)
        lr = r[dr]
        shift = dr - db
        new = {d: c * lb for d, c in r.items()}
        for d, c in b.items():
            k = d + shift
            v = new.get(k, ZERO_POLY) - lr * c
            if v.is_zero():
                new.pop(k, None)
            else:
                new[k] = v
        r = new
        e -= 1
    if e > 0 and r:
        f = lb**e
        r = {d: c * f for d, c in r.items()}
    return r


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Monic gcd over Q(zeta), by recursive primitive remainder sequences."""
    p, q = as_poly(p), as_poly(q)
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.is_constant() or q.is_constant():
        return ONE_POLY
    x = sorted(set(p.vars) | set(q.vars), key=var_key)[0]
    if x not in p.vars:
        return poly_gcd(p, _uni_content(q.as_univariate(x)))
    if x not in q.vars:
        return poly_gcd(_uni_content(p.as_univariate(x)), q)
    pu, qu = p.as_univariate(x), q.as_univariate(x)
    c = poly_gcd(_uni_content(pu), _uni_content(qu))
    a, b = _uni_pp(pu), _uni_pp(qu)
    if _uni_deg(a) < _uni_deg(b):
        a, b = b, a
    while b:
        r = _uni_prem(a, b)
        a, b = b, (_uni_pp(r) if r else {})
    g = MultiPoly.from_univariate(x, _uni_pp(a))
    return (c * g).monic()


# -- rational functions --------------------------------------------------------

class RatFunc:
    """num/den with gcd(num, den) = 1 and a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _reduced=False):
        num, den = as_poly(num), as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = ONE_POLY
            elif den.is_constant():
                num = num * den.constant_value().inverse()
                den = ONE_POLY
            else:
                g = poly_gcd(num, den)
                if g != ONE_POLY:
                    num, den = num.divexact(g), den.divexact(g)
                lc = den.leading_coefficient()
                if lc != ONE:
                    inv = lc.inverse()
                    num, den = num * inv, den * inv
        self.num, self.den = num, den

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other, _reduced=True)
        c = _scalar(other)
        if c is None:
            return None
        return RatFunc(MultiPoly.const(c), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == ONE_POLY

    def as_poly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return RatFunc(self.den**-e, self.num**-e)
        return RatFunc(self.num**e, self.den**e, _reduced=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def substitute(self, bindings: dict) -> "RatFunc":
        return RatFunc(self.num.substitute(bindings), self.den.substitute(bindings))

    def evaluate(self, values: dict) -> CycloNum:
        return self.num.evaluate(values) / self.den.evaluate(values)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


# -- text input ----------------------------------------------------------------

def poly_from_ast(node: Node, text: str = "") -> MultiPoly:
    def div(a, b, n):
        if not b.is_constant() or b.is_zero():
            raise ParseError("polynomials may only be divided by nonzero scalars", text, n.pos)
        return a / b.constant_value()

    def power(x, e):
        if e < 0:
            raise ParseError("negative exponent in polynomial", text, 0)
        return x**e

    return evaluate(node, var=lambda name, n: MultiPoly.var(name),
                    scalar=MultiPoly.const, divide=div, power=power)


def parse_poly(text: str) -> MultiPoly:
    """Parse e.g. ``"a^2 + 6*a*b + 3*b^2"`` or ``"zeta(3)*x - 1/2"``."""
    return poly_from_ast(parse(text), text)


def P(text: str) -> MultiPoly:
    return parse_poly(text)


def parse_ratfunc(text: str) -> RatFunc:
    node = parse(text)

    def div(a, b, n):
        if b.is_zero():
            raise ParseError("division by zero", text, n.pos)
        return a / b

    return evaluate(node, var=lambda name, n: RatFunc(MultiPoly.var(name)),
                    scalar=lambda c: RatFunc(MultiPoly.const(c)), divide=div)

