import sympy

from charcert.polynomials import MultiPoly, parse_poly


def to_sympy(p) -> sympy.Expr:
    """Rational-coefficient polynomial or scalar as a sympy expression."""
    return sympy.sympify(str(p).replace("^", "**"))


def from_sympy(expr) -> MultiPoly:
    return parse_poly(str(sympy.expand(expr)).replace("**", "^"))
