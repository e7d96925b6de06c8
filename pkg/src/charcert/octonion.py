"""Cayley-Dickson octonions O(a, b, c) with exact coefficients.

Coordinates are taken in the basis 1, i, j, ij, l, il, jl, ijl.  The
product is the recursive doubling rule

    (x1, x2)(y1, y2) = (x1 y1 + t * conj(y2) x2,  y2 x1 + x2 conj(y1))

applied with t = a (adjoining i), t = b (adjoining j) and t = c
(adjoining l); the multiplication table is generated from it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .grammar import Node, ParseError, evaluate, parse
from .polynomials import MultiPoly, RatFunc, as_poly, parse_poly
from .report import VerificationReport
from .scalars import ONE, ZERO, CycloNum, cyclo_make

BASIS = ("1", "i", "j", "ij", "l", "il", "jl", "ijl")


def _val(x):
    if isinstance(x, (MultiPoly, RatFunc, CycloNum)):
        return x
    if isinstance(x, str):
        return parse_poly(x)
    return CycloNum(x)


@dataclass(frozen=True)
class OctonionSpec:
    a: object = "a"
    b: object = "b"
    c: object = "c"

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = _val(getattr(self, name))
            if v == 0:
                raise ValueError(f"octonion parameter {name} must be nonzero")
            object.__setattr__(self, name, v)

    @classmethod
    def split(cls) -> "OctonionSpec":
        return cls(1, 1, 1)

    @property
    def params(self) -> tuple:
        return (self.a, self.b, self.c)

    def __hash__(self):
        return hash(tuple(str(p) for p in self.params))


class Octonion:
    __slots__ = ("spec", "coords")

    def __init__(self, spec: OctonionSpec, coords):
        coords = [_val(x) for x in coords]
        if len(coords) != 8:
            raise ValueError("an octonion has 8 coordinates")
        self.spec = spec
        self.coords = tuple(coords)

    @classmethod
    def scalar(cls, spec, x) -> "Octonion":
        return cls(spec, [x] + [0] * 7)

    @classmethod
    def basis(cls, spec, k: int) -> "Octonion":
        return cls(spec, [1 if t == k else 0 for t in range(8)])

    @classmethod
    def generic(cls, spec, prefix: str = "x") -> "Octonion":
        return cls(spec, [MultiPoly.var(f"{prefix}{t}") for t in range(8)])

    def _coerce(self, other) -> "Octonion":
        if isinstance(other, Octonion):
            return other
        return Octonion.scalar(self.spec, other)

    def __add__(self, other):
        other = self._coerce(other)
        return Octonion(self.spec, [x + y for x, y in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Octonion(self.spec, [-x for x in self.coords])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self.spec, self, other)
        other = _val(other)
        return Octonion(self.spec, [x * other for x in self.coords])

    def __rmul__(self, other):
        other = _val(other)
        return Octonion(self.spec, [other * x for x in self.coords])

    def __pow__(self, k: int):
        # octonions are power-associative, so x^k is unambiguous
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = Octonion.scalar(self.spec, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            other = self._coerce(other)
        return all(x == y for x, y in zip(self.coords, other.coords))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def is_scalar(self) -> bool:
        return all(x == 0 for x in self.coords[1:])

    def __str__(self):
        out = ""
        for x, name in zip(self.coords, BASIS):
            if x == 0:
                continue
            s = str(x)
            neg = s.startswith("-") and " " not in s
            if neg:
                s = s[1:]
            if name != "1":
                s = name if s == "1" else (f"{s}*{name}" if " " not in s else f"({s})*{name}")
            elif " " in s and out:
                s = f"({s})"
            if not out:
                out = ("-" if neg else "") + s
            else:
                out += (" - " if neg else " + ") + s
        return out or "0"

    def __repr__(self):
        return f"Octonion({self})"


def _conj(x: list) -> list:
    if len(x) == 1:
        return list(x)
    h = len(x) // 2
    return _conj(x[:h]) + [-t for t in x[h:]]


def _mul(x: list, y: list, params) -> list:
    if len(x) == 1:
        return [x[0] * y[0]]
    h = len(x) // 2
    t = params[h.bit_length() - 1]
    x1, x2, y1, y2 = x[:h], x[h:], y[:h], y[h:]
    first = [p + t * q for p, q in zip(_mul(x1, y1, params), _mul(_conj(y2), x2, params))]
    second = [p + q for p, q in zip(_mul(y2, x1, params), _mul(x2, _conj(y1), params))]
    return first + second


def oct_mul(spec: OctonionSpec, x: Octonion, y: Octonion) -> Octonion:
    return Octonion(spec, _mul(list(x.coords), list(y.coords), spec.params))


def multiplication_table(spec: OctonionSpec) -> list[list[Octonion]]:
    e = [Octonion.basis(spec, k) for k in range(8)]
    return [[p * q for q in e] for p in e]


def oct_conj(x: Octonion) -> Octonion:
    return Octonion(x.spec, _conj(list(x.coords)))


def oct_trace(x: Octonion):
    s = x + oct_conj(x)
    if not s.is_scalar():
        raise ArithmeticError("x + conj(x) is not a scalar")
    return s.coords[0]


def oct_norm(spec: OctonionSpec, x: Octonion):
    p = x * oct_conj(x)
    if not p.is_scalar():
        raise ArithmeticError("x * conj(x) is not a scalar")
    return p.coords[0]


def parse_octonion(spec: OctonionSpec, text: str) -> Octonion:
    """An 8-tuple of scalar or polynomial literals, e.g. ``(1, 0, 2, 0, 0, 0, 0, 1/2)``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = body.split(",")
    if len(parts) != 8:
        raise ParseError(f"an octonion literal needs 8 entries, got {len(parts)}", text, 0)
    return Octonion(spec, [parse_poly(p) for p in parts])


# -- identities and the (Z/2)^3 action ------------------------------------------------

def quadratic_identity_check(spec: OctonionSpec | None = None,
                             x: Octonion | None = None) -> VerificationReport:
    """x^2 - tr(x) x + n(x) = 0; by default for a fully generic element."""
    spec = spec or OctonionSpec()
    x = x if x is not None else Octonion.generic(spec)
    rep = VerificationReport("octonion-quadratic-identity",
                             {"a": spec.a, "b": spec.b, "c": spec.c, "x": str(x)})
    tr, nm = oct_trace(x), oct_norm(spec, x)
    rep.note("trace and norm", trace=tr, norm=nm)
    lhs = x * x - x * tr + Octonion.scalar(spec, nm)
    rep.check("x^2 - tr(x) x + n(x) = 0", lhs.is_zero())
    return rep.finish()


def tau_action(k: int, x: Octonion) -> Octonion:
    """tau_1, tau_2, tau_3 negate i, j, l respectively (and fix the other two)."""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    bit = 1 << (k - 1)
    return Octonion(x.spec, [-c if idx & bit else c for idx, c in enumerate(x.coords)])


def automorphism_check(spec: OctonionSpec | None = None) -> VerificationReport:
    spec = spec or OctonionSpec.split()
    rep = VerificationReport("octonion-sign-automorphisms",
                             {"a": spec.a, "b": spec.b, "c": spec.c})
    e = [Octonion.basis(spec, k) for k in range(8)]
    for k in (1, 2, 3):
        bad = [(BASIS[p], BASIS[q]) for p in range(8) for q in range(8)
               if tau_action(k, e[p] * e[q]) != tau_action(k, e[p]) * tau_action(k, e[q])]
        rep.check(f"tau_{k}(xy) = tau_{k}(x) tau_{k}(y) on all basis pairs", not bad,
                  pairs=64, failures=bad)
        gens = {"i": e[1], "j": e[2], "l": e[4]}
        rep.note(f"tau_{k} on generators",
                 **{g: str(tau_action(k, v)) for g, v in gens.items()})
    sq = all(tau_action(k, tau_action(k, b)) == b for k in (1, 2, 3) for b in e)
    rep.check("each tau_k squares to the identity", sq)
    comm = all(tau_action(k, tau_action(h, b)) == tau_action(h, tau_action(k, b))
               for k in (1, 2, 3) for h in (1, 2, 3) for b in e)
    rep.check("the tau_k commute", comm)
    return rep.finish()


def basis_characters() -> list[tuple[int, ...]]:
    """Sign of tau_1, tau_2, tau_3 on each basis line."""
    spec = OctonionSpec.split()
    out = []
    for p in range(8):
        b = Octonion.basis(spec, p)
        signs = []
        for k in (1, 2, 3):
            t = tau_action(k, b)
            signs.append(1 if t == b else (-1 if t == -b else 0))
        out.append(tuple(signs))
    return out


def character_table_check() -> VerificationReport:
    rep = VerificationReport("octonion-basis-characters")
    chars = basis_characters()
    for name, ch in zip(BASIS, chars):
        rep.check(f"{name} spans a character line", 0 not in ch,
                  character="".join("+" if s > 0 else "-" for s in ch))
    rep.check("the 8 characters are pairwise distinct", len(set(chars)) == 8,
              distinct=len(set(chars)))
    return rep.finish()


# -- non-associative expressions -----------------------------------------------------

class ExpressionError(ValueError):
    pass


def _degree(node: Node, names: set[str], text: str) -> int:
    """Homogeneous degree of a parsed expression, rejecting ambiguous products."""
    k = node.kind
    if k in ("num", "zeta"):
        return 0
    if k == "var":
        if node.value not in names:
            raise ParseError(f"unknown variable {node.value!r}", text, node.pos)
        return 1
    if k == "neg":
        return _degree(node.args[0], names, text)
    if k in ("add", "sub"):
        d1, d2 = (_degree(a, names, text) for a in node.args)
        if d1 != d2:
            raise ExpressionError(f"expression is not homogeneous (degrees {d1} and {d2})")
        return d1
    if k == "mul":
        ds = [_degree(a, names, text) for a in node.args]
        if all(ds):
            for a in node.args:
                if a.kind == "mul" and not a.paren and all(_degree(b, names, text)
                                                            for b in a.args):
                    raise ParseError("nested products must be parenthesized", text, node.pos)
        return sum(ds)
    if k == "pow":
        if node.value < 0:
            raise ParseError("negative exponent", text, node.pos)
        return node.value * _degree(node.args[0], names, text)
    if k == "div":
        if _degree(node.args[1], names, text):
            raise ParseError("division by a non-scalar", text, node.pos)
        return _degree(node.args[0], names, text)
    raise AssertionError(k)


def expression_names(m: int) -> list[str]:
    return [f"x{t}" for t in range(1, m + 1)]


def parse_expression(text: str, m: int) -> tuple[Node, int]:
    """Parse a non-associative expression in x1..xm (``x`` is x1 when m = 1)."""
    node = parse(text)
    names = set(expression_names(m))
    if m == 1:
        names.add("x")
    return node, _degree(node, names, text)


def evaluate_expression(node: Node, values: dict, scalar, text: str = ""):
    def var(name, n):
        key = "x1" if name == "x" else name
        return values[key]

    def div(a, b, n):
        return a * (ONE / b) if not isinstance(b, Octonion) else a * (ONE / b.coords[0])

    return evaluate(node, var=var, scalar=scalar, divide=div)


def octonion_sign_system_certificate(m: int, s: int, expr: str,
                                     cap: int = 10**6) -> VerificationReport:
    """Hypotheses of the nonexistence statement for
    tr(x_1^(2s)) = ... = tr(x_m^(2s)), Q(x_1, ..., x_m) = 0 in generic octonions."""
    rep = VerificationReport("octonion-power-trace-system", {"m": m, "s": s, "Q": expr})
    if m < 1 or s < 1:
        raise ValueError("m and s must be positive")
    node, d = parse_expression(expr, m)
    rep.check("Q is homogeneous of even degree", d % 2 == 0 and d > 0, degree=d)
    if d % 2 or d == 0:
        raise ExpressionError(f"Q must have even positive degree, got {d}")
    table = character_table_check()
    rep.check("basis lines carry 8 distinct (Z/2)^3 characters", table.status == "verified")
    auto = automorphism_check()
    rep.check("tau_1, tau_2, tau_3 are commuting involutive automorphisms",
              auto.status == "verified")
    gen = OctonionSpec()
    for p in range(1, 8):
        b = Octonion.basis(gen, p)
        sq = b * b
        rep.check(f"{BASIS[p]}^2 is a scalar, so {BASIS[p]}^(2s) is too", sq.is_scalar(),
                  square=sq.coords[0])
    rep.note("a fixed point U_r = u_r*e reduces to u_1^(2s) = ... = u_m^(2s), Q(u) = 0")
    order = 2 * s
    total = order**m
    if total > cap:
        rep.note("root tuple enumeration exceeds the cap", tuples=total, cap=cap)
        return rep.finish("not_checked")
    roots = [cyclo_make(order, k) for k in range(order)]
    names = expression_names(m)
    count = 0
    for tup in product(roots, repeat=m):
        count += 1
        val = evaluate_expression(node, dict(zip(names, tup)), lambda c: c, expr)
        if val == 0:
            rep.check("Q is nonzero at every tuple of (2s)-th roots of unity", False,
                      checked=count)
            rep.witness("Q vanishes at", point=list(tup), value=val)
            return rep.finish("refuted")
    rep.check("Q is nonzero at every tuple of (2s)-th roots of unity", True,
              roots_order=order, tuples=count)
    return rep.finish()


def random_octonion(spec: OctonionSpec, rng: np.random.Generator, coeff_range: int = 3):
    while True:
        cs = rng.integers(-coeff_range, coeff_range + 1, size=8)
        if cs.any():
            return Octonion(spec, [int(c) for c in cs])


def composition_check(spec: OctonionSpec | None = None, trials: int = 50,
                      seed: int = 0) -> VerificationReport:
    """n(xy) = n(x) n(y) on random pairs (symbolic a, b, c by default)."""
    spec = spec or OctonionSpec()
    rep = VerificationReport("octonion-norm-multiplicative",
                             {"a": spec.a, "b": spec.b, "c": spec.c, "trials": trials},
                             seed=seed)
    l = Octonion.basis(spec, 4)
    rep.check("n(l*l) = n(l)^2", oct_norm(spec, l * l) == oct_norm(spec, l) ** 2,
              value=oct_norm(spec, l * l))
    bad = 0
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        x, y = random_octonion(spec, rng), random_octonion(spec, rng)
        if oct_norm(spec, x * y) != oct_norm(spec, x) * oct_norm(spec, y):
            bad += 1
            rep.witness("n(xy) != n(x) n(y)", trial=t, x=str(x), y=str(y))
    rep.check("n(xy) = n(x) n(y) on all sampled pairs", bad == 0, pairs=trials, failures=bad)
    return rep.finish()
