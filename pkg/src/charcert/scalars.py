"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q(zeta_N) = Q[z]/(Phi_N), as a tuple of integer numerators over one
positive common denominator.  Levels N with N = 2 mod 4 are never used
(Q(zeta_2m) = Q(zeta_m) for odd m), and a value whose non-constant
coordinates vanish is always stored at level 1.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache, reduce
from numbers import Rational as _RationalABC


class CycloError(ArithmeticError):
    pass


class ZeroDivision(CycloError, ZeroDivisionError):
    pass


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_factors(n: int) -> list[int]:
    """Prime factorisation of n with multiplicity, ascending."""
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def squarefree_part(n: int) -> int:
    return math.prod(set(prime_factors(n)))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in set(prime_factors(n)):
        result -= result // p
    return result


def _canonical_level(n: int) -> int:
    if n % 4 == 2:
        return n // 2
    return n


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # ascending coefficients; den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly, rem = _poly_divmod_int(poly, list(cyclotomic_poly(d)))
        assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # row e holds z^e mod Phi_n for 0 <= e < max(n, 2*phi(n) - 1)
    phi = euler_phi(n)
    cyc = cyclotomic_poly(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(max(n, 2 * phi - 1)):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * cyc[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def _lift_table(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    # images of zeta_m^k (k < phi(m)) in level-n coordinates, m | n
    step = n // m
    table = _power_table(n)
    return tuple(table[(k * step) % n] for k in range(euler_phi(m)))


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple[Fraction, ...]:
    # normalised trace Tr(z^k)/phi(n) = mu(n/g) / phi(n/g), g = gcd(n, k)
    out = []
    for k in range(euler_phi(n)):
        m = n // math.gcd(n, k)
        fac = prime_factors(m)
        mu = 0 if len(set(fac)) != len(fac) else (-1) ** len(fac)
        out.append(Fraction(mu, euler_phi(m)))
    return tuple(out)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = reduce(math.gcd, num, den)
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycloNum:
    """An element of Q(zeta_N) in the power basis modulo Phi_N.

    Instances are immutable.  Arithmetic between elements of different
    levels lifts both operands to the lcm of the levels.
    """

    __slots__ = ("level", "_num", "_den")

    def __init__(self, value=0, level: int = 1, *, _raw=None):
        if _raw is not None:
            self.level, self._num, self._den = _raw
            return
        if isinstance(value, CycloNum):
            self.level, self._num, self._den = value.level, value._num, value._den
            return
        if isinstance(value, (list, tuple)):
            coords = [Fraction(c) for c in value]
            if len(coords) != euler_phi(level):
                raise ValueError(f"level {level} needs {euler_phi(level)} coordinates")
            if level != _canonical_level(level):
                obj = sum((c * cyclo_make(level, k) for k, c in enumerate(coords)), ZERO)
            else:
                den = reduce(_lcm, (c.denominator for c in coords), 1)
                obj = CycloNum._build(level, [int(c * den) for c in coords], den)
            self.level, self._num, self._den = obj.level, obj._num, obj._den
            return
        q = Fraction(value)
        self.level, self._num, self._den = 1, (q.numerator,), q.denominator

    @classmethod
    def _build(cls, level: int, num, den: int) -> "CycloNum":
        num, den = _normalize(list(num), den)
        if level != 1 and not any(num[1:]):
            level, num = 1, num[:1]
        return cls(_raw=(level, num, den))

    # -- views -----------------------------------------------------------

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return self._num[0] == 0 and self.level == 1

    def is_rational(self) -> bool:
        return self.level == 1

    def to_fraction(self) -> Fraction:
        if self.level != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.level)
        return sum(c * z**k for k, c in enumerate(self._num)) / self._den

    def lift(self, level: int) -> "CycloNum":
        """Same value expressed at a multiple of the current level."""
        level = _canonical_level(level)
        if level % self.level:
            raise ValueError(f"cannot lift level {self.level} to {level}")
        if level == self.level:
            return self
        num, den = _normalize(list(self._lifted(level)), self._den)
        return CycloNum(_raw=(level, num, den))

    def _lifted(self, level: int) -> tuple[int, ...]:
        if level == self.level:
            return self._num
        phi = euler_phi(level)
        out = [0] * phi
        for c, row in zip(self._num, _lift_table(self.level, level)):
            if c:
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return tuple(out)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, _RationalABC)):
            q = Fraction(other)
            return CycloNum(_raw=(1, (q.numerator,), q.denominator))
        return None

    def _common(self, other: "CycloNum"):
        if self.level == other.level:
            return self.level, self._num, other._num
        level = _lcm(self.level, other.level)
        level = _canonical_level(level)
        return level, self._lifted(level), other._lifted(level)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.level == 1 and other.level == 1:
            q = Fraction(self._num[0], self._den) + Fraction(other._num[0], other._den)
            return CycloNum(_raw=(1, (q.numerator,), q.denominator))
        level, a, b = self._common(other)
        da, db = self._den, other._den
        return CycloNum._build(level, [x * db + y * da for x, y in zip(a, b)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(_raw=(self.level, tuple(-c for c in self._num), self._den))

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
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.level == 1 and other.level == 1:
            q = Fraction(self._num[0], self._den) * Fraction(other._num[0], other._den)
            return CycloNum(_raw=(1, (q.numerator,), q.denominator))
        den = self._den * other._den
        if self.level == 1 or other.level == 1:
            s, big = (self, other) if self.level == 1 else (other, self)
            c = s._num[0]
            return CycloNum._build(big.level, [c * x for x in big._num], den)
        level, a, b = self._common(other)
        conv = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        table = _power_table(level)
        phi = len(a)
        out = conv[:phi]
        for e in range(phi, len(conv)):
            c = conv[e]
            if c:
                for j, r in enumerate(table[e]):
                    if r:
                        out[j] += c * r
        return CycloNum._build(level, out, den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivision("division by zero in Q(zeta)")
        if self.level == 1:
            q = 1 / Fraction(self._num[0], self._den)
            return CycloNum(_raw=(1, (q.numerator,), q.denominator))
        # extended Euclid of the coordinate polynomial against Phi_N
        a = [Fraction(c) for c in self._num]
        b = [Fraction(c) for c in cyclotomic_poly(self.level)]
        s0, s1 = [Fraction(1)], [Fraction(0)]
        while any(b):
            q, r = _fpoly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, _fpoly_sub(s0, _fpoly_mul(q, s1))
        a = _fpoly_trim(a)
        assert len(a) == 1, "Phi_N is irreducible, gcd must be constant"
        inv_const = 1 / a[0]
        coords = [c * inv_const * self._den for c in s0]
        coords = _fpoly_trim(coords)
        phi = euler_phi(self.level)
        coords = coords + [Fraction(0)] * (phi - len(coords))
        den = reduce(_lcm, (c.denominator for c in coords), 1)
        return CycloNum._build(self.level, [int(c * den) for c in coords[:phi]], den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if self.is_zero():
                raise ZeroDivision("zero to a negative power")
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self, k: int = -1) -> "CycloNum":
        """Galois conjugate zeta -> zeta^k (k coprime to the level)."""
        n = self.level
        if math.gcd(k, n) != 1:
            raise ValueError("k must be coprime to the level")
        table = _power_table(n)
        out = [0] * euler_phi(n)
        for i, c in enumerate(self._num):
            if c:
                for j, r in enumerate(table[(i * k) % n]):
                    out[j] += c * r
        return CycloNum._build(n, out, self._den)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.level == other.level:
            return self._den == other._den and self._num == other._num
        if self.level == 1 or other.level == 1:
            return False
        level, a, b = self._common(other)
        da, db = self._den, other._den
        return all(x * db == y * da for x, y in zip(a, b))

    def __hash__(self):
        # normalised trace is independent of the level used
        if self.level == 1:
            return hash(Fraction(self._num[0], self._den))
        w = _trace_weights(self.level)
        return hash(sum(c * x for c, x in zip(w, self._num)) / self._den)

    def __bool__(self):
        return not self.is_zero()

    # -- canonical form and printing --------------------------------------

    def minimal_level(self) -> "CycloNum":
        """Same value at the smallest level that contains it."""
        if self.level == 1:
            return self
        for d in _divisors(self.level):
            if d == 1 or d == self.level or d % 4 == 2:
                continue
            sol = _solve_in_subfield(self._num, d, self.level)
            if sol is not None:
                den = reduce(_lcm, (c.denominator for c in sol), 1)
                num = [int(c * den) for c in sol]
                return CycloNum._build(d, num, self._den * den)
        return self

    def __repr__(self):
        return f"CycloNum({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self) -> str:
        x = self.minimal_level()
        if x.level == 1:
            return _fmt_fraction(Fraction(x._num[0], x._den))
        parts = []
        for k, c in enumerate(x._num):
            if not c:
                continue
            q = Fraction(c, x._den)
            if k == 0:
                parts.append((q, ""))
                continue
            z = f"zeta({x.level})" + (f"^{k}" if k > 1 else "")
            parts.append((q, z))
        out = ""
        for i, (q, z) in enumerate(parts):
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            if not z:
                body = _fmt_fraction(mag)
            elif mag == 1:
                body = z
            else:
                body = f"{_fmt_fraction(mag)}*{z}"
            if i == 0:
                out = ("-" if sign == "-" else "") + body
            else:
                out += f" {sign} {body}"
        return out


def _fmt_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _solve_in_subfield(num, d: int, n: int):
    # coordinates c with sum c_k * lift(zeta_d^k) == num, or None
    rows = _lift_table(d, n)
    m, phi = len(rows), len(num)
    # augmented system: phi equations in m unknowns
    aug = [[Fraction(rows[k][j]) for k in range(m)] + [Fraction(num[j])] for j in range(phi)]
    piv_cols = []
    r = 0
    for col in range(m):
        p = next((i for i in range(r, phi) if aug[i][col]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(phi):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(col)
        r += 1
    if any(aug[i][m] for i in range(r, phi)):
        return None
    sol = [Fraction(0)] * m
    for i, col in enumerate(piv_cols):
        sol[col] = aug[i][m]
    return sol


def _fpoly_trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _fpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _fpoly_trim([x - y for x, y in zip(a, b)])


def _fpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fpoly_trim(out)


def _fpoly_divmod(a, b):
    a = _fpoly_trim(a)
    b = _fpoly_trim(b)
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = list(a)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] -= c * y
    return _fpoly_trim(q), _fpoly_trim(r[: len(b) - 1] or [Fraction(0)])


ZERO = CycloNum(0)
ONE = CycloNum(1)


def cyclo_make(n: int, k: int = 1) -> CycloNum:
    """zeta_n^k, stored at the smallest level dividing n that holds it."""
    if n < 1:
        raise ValueError("level must be positive")
    k %= n
    g = math.gcd(n, k)
    n, k = n // g, k // g
    if n == 1:
        return ONE
    if n == 2:
        return CycloNum(-1)
    if n % 4 == 2:
        # zeta_2m = -zeta_m^((m+1)/2) for odd m
        m = n // 2
        return -(cyclo_make(m, (m + 1) // 2) ** k)
    row = _power_table(n)[k]
    return CycloNum._build(n, row, 1)


def cyclo_arith(op: str, x, y) -> CycloNum:
    x, y = CycloNum(x), CycloNum(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def cyclo_pow(x, e: int) -> CycloNum:
    return CycloNum(x) ** e


def root_of_unity_order(x) -> int | None:
    """Least d >= 1 with x^d = 1, or None when x is not a root of unity.

    A root of unity inside Q(zeta_N) has order dividing lcm(2, N), so the
    divisors of that bound are the only candidates.
    """
    x = CycloNum(x)
    if x.is_zero():
        raise ValueError("zero is not a root of unity")
    if x.level == 1:
        q = x.to_fraction()
        return {1: 1, -1: 2}.get(q)
    bound = _lcm(2, x.level)
    for d in _divisors(bound):
        if x**d == ONE:
            return d
    return None


def roots_of_unity(n: int) -> list[CycloNum]:
    """All n-th roots of unity zeta_n^0, ..., zeta_n^(n-1) in that order."""
    return [cyclo_make(n, k) for k in range(n)]


def as_scalar(value) -> CycloNum:
    if isinstance(value, CycloNum):
        return value
    return CycloNum(value)
