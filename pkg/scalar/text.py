"""
Canonical text for scalars: polynomials in x (for xi) and t (for theta)
with rational coefficients, e.g. "x**2 - 1/2" or "(x + 1) + (-x)*t".
"""

from fractions import Fraction

import sympy
from sympy.parsing.sympy_parser import parse_expr

from scalar.cyclotomic import Cyclotomic
from scalar.theta import ScalarContext, ThetaScalar

X, T = sympy.symbols('x t')


def _render_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_cyclotomic(value: Cyclotomic) -> str:
    terms = []
    for k in range(len(value.coeffs) - 1, -1, -1):
        c = value.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _render_coeff(mag)
        else:
            mono = 'x' if k == 1 else f'x**{k}'
            body = mono if mag == 1 else f"{_render_coeff(mag)}*{mono}"
        sign = '-' if c < 0 else '+'
        terms.append((sign, body))
    if not terms:
        return '0'
    first_sign, first_body = terms[0]
    out = ('-' if first_sign == '-' else '') + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def render(s: ThetaScalar) -> str:
    re_text = render_cyclotomic(s.re)
    if not s.has_theta():
        return re_text
    th_text = render_cyclotomic(s.th)
    if s.re.is_zero():
        return f"({th_text})*t"
    return f"({re_text}) + ({th_text})*t"


def parse(ctx: ScalarContext, text: str) -> ThetaScalar:
    """Inverse of render; accepts any polynomial in x and t"""
    expr = sympy.expand(parse_expr(text, local_dict={'x': X, 't': T}))
    if expr == 0:
        return ctx.zero
    result = ctx.zero
    for (ex, et), coeff in sympy.Poly(expr, X, T).terms():
        rational = sympy.Rational(coeff)
        c = Fraction(int(rational.p), int(rational.q))
        result = result + ctx.xi_power(ex) * (ctx.theta ** et) * c
    return result
