"""Independent truncated expansions in sympy, used to freeze expected values.

Series are plain sympy polynomials in ``q`` (coefficients in ``t``) cut at a
fixed degree; products of ``(1 - a)`` and ``1/(1 - a)`` factors are expanded
directly.
"""

import sympy as sp

from ahl.ring import IntPoly, RationalFunction

t, q = sp.symbols("t q")


def _deg(a, var):
    return sp.Poly(a, var).monoms()[-1][0]


def cut(expr, order, var=q):
    p = sp.Poly(sp.expand(expr), var)
    return sp.Add(*[c * var**k for (k,), c in p.terms() if k <= order])


def product(factors, order, var=q):
    """``prod (1 - a)^{+-1}`` for ``factors = [(a, inverse), ...]``, cut at ``order``."""
    out = sp.Integer(1)
    for a, inv in factors:
        d = _deg(a, var)
        if d > order:
            continue
        if inv:
            f = sum(a**k for k in range(order // d + 1))
        else:
            f = 1 - a
        out = cut(out * f, order, var)
    return out


def poch(a, w, order, var=q, inverse=False):
    """Factors of ``(a; w)_inf`` (or its inverse) that matter through ``order``."""
    out = []
    k = 0
    while _deg(a * w**k, var) <= order:
        out.append((a * w**k, inverse))
        k += 1
    return out


def coeffs(expr, order, var=q):
    p = sp.Poly(sp.expand(expr), var)
    c = [sp.Integer(0)] * (order + 1)
    for (k,), v in p.terms():
        if k <= order:
            c[k] = sp.expand(v)
    return c


def to_rf(expr):
    """A sympy rational function of ``t`` as a RationalFunction."""
    num, den = sp.fraction(sp.together(sp.sympify(expr)))

    def poly(e):
        p = sp.Poly(sp.expand(e), t)
        out = [0] * (p.degree() + 1) if not p.is_zero else []
        for (k,), c in p.terms():
            out[k] = int(c)
        return IntPoly(out)

    return RationalFunction(poly(num), poly(den))


def qseries_coeffs(qs, order):
    """Integer-exponent coefficients of a QSeries through ``order``."""
    return [qs.terms.get(2 * k, RationalFunction(0)) for k in range(order + 1)]
