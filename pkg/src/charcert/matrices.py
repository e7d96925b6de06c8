"""Dense matrices over exact rings, characteristic polynomials, resultants.

Entries may be CycloNum, MultiPoly or RatFunc; the matrix is a thin
wrapper around a numpy object array so products and Kronecker products
come from numpy while all arithmetic stays exact.
"""
from __future__ import annotations

from itertools import permutations

import numpy as np

from .polynomials import ONE_POLY, ZERO_POLY, MultiPoly, RatFunc, as_poly
from .scalars import ONE, ZERO, CycloNum


class PolyMatrix:
    __slots__ = ("a",)

    def __init__(self, entries):
        a = np.empty((len(entries), len(entries[0]) if len(entries) else 0), dtype=object)
        for i, row in enumerate(entries):
            if len(row) != a.shape[1]:
                raise ValueError("matrix rows must have equal length")
            for j, x in enumerate(row):
                a[i, j] = _wrap(x)
        self.a = a

    @classmethod
    def _from_array(cls, arr) -> "PolyMatrix":
        obj = object.__new__(cls)
        obj.a = arr
        return obj

    @classmethod
    def identity(cls, n: int, one=ONE) -> "PolyMatrix":
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, zero=ZERO) -> "PolyMatrix":
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def diag(cls, values) -> "PolyMatrix":
        values = [_wrap(v) for v in values]
        zero = values[0] * 0
        return cls([[v if i == j else zero for j in range(len(values))]
                    for i, v in enumerate(values)])

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        return self.a[idx]

    def tolist(self):
        return self.a.tolist()

    def map(self, f) -> "PolyMatrix":
        return PolyMatrix([[f(x) for x in row] for row in self.a.tolist()])

    def substitute(self, bindings) -> "PolyMatrix":
        return self.map(lambda x: x.substitute(bindings) if hasattr(x, "substitute") else x)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix._from_array(self.a.T.copy())

    def trace(self):
        return sum((self.a[i, i] for i in range(1, self.rows)), self.a[0, 0])

    def __add__(self, other):
        if isinstance(other, PolyMatrix):
            return PolyMatrix._from_array(self.a + other.a)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, PolyMatrix):
            return PolyMatrix._from_array(self.a - other.a)
        return NotImplemented

    def __neg__(self):
        return PolyMatrix._from_array(-self.a)

    def __matmul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return PolyMatrix._from_array(np.dot(self.a, other.a))

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return self @ other
        return PolyMatrix._from_array(self.a * _wrap(other))

    def __rmul__(self, other):
        return PolyMatrix._from_array(_wrap(other) * self.a)

    def __pow__(self, e: int):
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = PolyMatrix.identity(self.rows, _one_like(self.a[0, 0]))
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(x == y for x, y in zip(self.a.flat, other.a.flat))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.a.flat)

    def is_scalar(self):
        """The scalar c if this matrix equals c*I, else None."""
        if not self.is_square():
            return None
        c = self.a[0, 0]
        for i in range(self.rows):
            for j in range(self.cols):
                if (self.a[i, j] != c) if i == j else (self.a[i, j] != 0):
                    return None
        return c

    def kron(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix._from_array(np.kron(self.a, other.a))

    def inverse(self) -> "PolyMatrix":
        """Gauss-Jordan inverse; polynomial entries are promoted to RatFunc."""
        n = self.rows
        a = [[_to_field(x) for x in row] for row in self.a.tolist()]
        one, zero = _one_like(a[0][0]), _one_like(a[0][0]) * 0
        inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k] != 0), None)
            if p is None:
                raise ZeroDivisionError("singular matrix")
            a[k], a[p] = a[p], a[k]
            inv[k], inv[p] = inv[p], inv[k]
            piv = a[k][k]
            a[k] = [x / piv for x in a[k]]
            inv[k] = [x / piv for x in inv[k]]
            for i in range(n):
                if i != k and a[i][k] != 0:
                    f = a[i][k]
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                    inv[i] = [x - f * y for x, y in zip(inv[i], inv[k])]
        return PolyMatrix(inv)

    def __repr__(self):
        return f"PolyMatrix({self.tolist()!r})"

    def __str__(self):
        rows = [[str(x) for x in row] for row in self.a.tolist()]
        return "[" + "; ".join(", ".join(r) for r in rows) + "]"


def _wrap(x):
    if isinstance(x, (CycloNum, MultiPoly, RatFunc)):
        return x
    return CycloNum(x)


def _one_like(x):
    if isinstance(x, MultiPoly):
        return ONE_POLY
    if isinstance(x, RatFunc):
        return RatFunc(ONE_POLY, _reduced=True)
    return ONE


def _to_field(x):
    if isinstance(x, MultiPoly):
        return RatFunc(x, _reduced=True)
    return x


def _exact_div(x, d):
    if isinstance(x, MultiPoly):
        if isinstance(d, MultiPoly):
            return x.divexact(d)
        return x.divexact(as_poly(d))
    return x / d


def as_matrix(m) -> PolyMatrix:
    if isinstance(m, PolyMatrix):
        return m
    return PolyMatrix(m)


# -- characteristic polynomial -----------------------------------------------------

def berkowitz(m) -> list:
    """Coefficients [1, c_1, ..., c_n] of det(lambda*I - M), highest first.

    Division-free, so it is valid for entries in any commutative ring.
    """
    a = as_matrix(m).tolist()
    n = len(a)
    if n == 0 or len(a[0]) != n:
        raise ValueError("characteristic polynomial needs a nonempty square matrix")
    vec = [1, -a[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        size = n - k
        r = a[k][k + 1:]
        w = [a[i][k] for i in range(k + 1, n)]
        sub = [row[k + 1:] for row in a[k + 1:]]
        col = [1, -a[k][k]]
        for _ in range(size - 1):
            col.append(-_dot(r, w))
            w = [_dot(row, w) for row in sub]
        vec = [_sum([col[i - j] * vec[j] for j in range(min(i, size - 1) + 1)])
               for i in range(size + 1)]
    return vec


def _dot(u, v):
    return _sum([x * y for x, y in zip(u, v)])


def _sum(xs):
    total = xs[0]
    for x in xs[1:]:
        total = total + x
    return total


def char_poly(m) -> list:
    """sigma^(1), ..., sigma^(n) with det(lambda*I - M) = lambda^n + sum sigma^(i) lambda^(n-i)."""
    a = as_matrix(m)
    like = _widest(a)
    coeffs = berkowitz(a)[1:]
    return [_like(c, like) for c in coeffs]


def _widest(m: PolyMatrix):
    kinds = {type(x) for x in m.a.flat}
    if RatFunc in kinds:
        return RatFunc(ONE_POLY, _reduced=True)
    if MultiPoly in kinds:
        return ONE_POLY
    return ONE


def _like(c, template):
    if isinstance(template, MultiPoly) and not isinstance(c, MultiPoly):
        return as_poly(c)
    if isinstance(template, RatFunc) and not isinstance(c, RatFunc):
        return RatFunc(as_poly(c) if not isinstance(c, MultiPoly) else c, _reduced=True)
    if isinstance(template, CycloNum) and isinstance(c, int):
        return CycloNum(c)
    return c


def char_poly_in(m, var: str = "t") -> MultiPoly:
    """det(var*I - M) as a polynomial (entries must be scalars or polynomials)."""
    t = MultiPoly.var(var)
    sig = char_poly(m)
    n = len(sig)
    total = t**n
    for i, s in enumerate(sig, start=1):
        total = total + as_poly(s) * t ** (n - i)
    return total


def evaluate_poly_at_matrix(coeffs_high_first, m) -> PolyMatrix:
    """Horner evaluation of a polynomial given by coefficients at a matrix."""
    m = as_matrix(m)
    one = _one_like(m.a[0, 0])
    result = PolyMatrix.zeros(m.rows, m.cols, one * 0)
    ident = PolyMatrix.identity(m.rows, one)
    for c in coeffs_high_first:
        result = result @ m + ident * c
    return result


# -- determinants ----------------------------------------------------------------

def determinant(m):
    """Fraction-free (Bareiss) elimination with exact divisions."""
    a = as_matrix(m).tolist()
    n = len(a)
    if n == 0:
        return ONE
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = None
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return _like(0, _widest(as_matrix(m)))
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                x = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = x if prev is None else _exact_div(x, prev)
        prev = a[k][k]
    d = _like(a[n - 1][n - 1], _widest(as_matrix(m)))
    return d if sign == 1 else -d


def cofactor_determinant(m):
    """Laplace expansion along the first row (independent reference route)."""
    a = as_matrix(m).tolist()
    n = len(a)
    if n == 1:
        return a[0][0]
    total = None
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        t = a[0][j] * cofactor_determinant(minor)
        if j % 2:
            t = -t
        total = t if total is None else total + t
    return _like(0, a[0][0]) if total is None else total


def leibniz_determinant(m):
    """Sum over permutations; only for tiny matrices."""
    a = as_matrix(m).tolist()
    n = len(a)
    total = _like(0, a[0][0])
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        t = a[0][perm[0]]
        for i in range(1, n):
            t = t * a[i][perm[i]]
        total = total - t if inv % 2 else total + t
    return total


def adjugate(m) -> PolyMatrix:
    a = as_matrix(m).tolist()
    n = len(a)
    if n == 1:
        return PolyMatrix([[_one_like(a[0][0])]])
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i]
            c = determinant(minor)
            out[j][i] = -c if (i + j) % 2 else c
    return PolyMatrix(out)


def rank(m) -> int:
    """Rank over the fraction field of the entries."""
    a = [[_to_field(x) for x in row] for row in as_matrix(m).tolist()]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                f = a[i][c] / piv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


# -- resultants --------------------------------------------------------------------

def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> PolyMatrix:
    fu, gu = as_poly(f).as_univariate(var), as_poly(g).as_univariate(var)
    m, n = max(fu, default=-1), max(gu, default=-1)
    size = m + n
    rows = []
    for k in range(n):
        rows.append([fu.get(m - (j - k), ZERO_POLY) if 0 <= j - k <= m else ZERO_POLY
                     for j in range(size)])
    for k in range(m):
        rows.append([gu.get(n - (j - k), ZERO_POLY) if 0 <= j - k <= n else ZERO_POLY
                     for j in range(size)])
    return PolyMatrix(rows)


def resultant(f, g, var: str) -> MultiPoly:
    """Resultant of f and g with respect to ``var`` (Sylvester determinant)."""
    f, g = as_poly(f), as_poly(g)
    m, n = f.degree(var), g.degree(var)
    if m <= 0 and n <= 0:
        raise ValueError(f"both inputs are constant in {var!r}")
    if f.is_zero() or g.is_zero():
        return ZERO_POLY
    if m == 0:
        return f**n
    if n == 0:
        return g**m
    return determinant(sylvester_matrix(f, g, var))
