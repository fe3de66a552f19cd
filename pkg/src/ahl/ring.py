"""Exact scalars: integer polynomials and rational functions in ``t``.

Every coefficient in the package is a :class:`RationalFunction`.  Values are
immutable and kept in a canonical form (``gcd(num, den) == 1``, positive
leading denominator coefficient), so equality of values is structural.
Most coefficients met in practice are polynomials, and the arithmetic keeps
a fast path for denominator ``1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _igcd
from numbers import Rational

__all__ = [
    "IntPoly",
    "RationalFunction",
    "rf_reduce",
    "rf_eval",
    "T",
    "ONE",
    "ZERO",
    "poly_gcd",
]


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    """Polynomial in ``t`` with arbitrary-precision integer coefficients.

    Stored densely, lowest degree first, with trailing zeros trimmed; the
    zero polynomial is the empty tuple.  :meth:`terms` gives the sparse view
    ``[(exponent, coefficient), ...]`` with no zero coefficients.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        self.coeffs = _trim(tuple(int(c) for c in coeffs))
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        # caller guarantees a trimmed tuple of ints
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, terms):
        terms = list(terms)
        if not terms:
            return cls._raw(())
        deg = max(e for e, _ in terms)
        out = [0] * (deg + 1)
        for e, c in terms:
            if e < 0:
                raise ValueError("negative exponent in IntPoly")
            out[e] += c
        return cls(out)

    @classmethod
    def monomial(cls, coeff, exp):
        if coeff == 0:
            return cls._raw(())
        return cls._raw((0,) * exp + (int(coeff),))

    def terms(self):
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def low_degree(self):
        """Exponent of the lowest nonzero term (``-1`` for zero)."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return -1

    def content(self):
        g = 0
        for c in self.coeffs:
            g = _igcd(g, c)
        return g

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("IntPoly", self.coeffs))
        return self._hash

    def __neg__(self):
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        if len(a) == len(b):
            return IntPoly._raw(_trim(out))
        return IntPoly._raw(tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        return self + (-other)

    def __rsub__(self, other):
        return IntPoly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly._raw(())
            return IntPoly._raw(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly._raw(())
        if len(a) == 1:
            return other * a[0]
        if len(b) == 1:
            return self * b[0]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        result = IntPoly._raw((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k):
        """Multiply by ``t**k`` (``k >= 0``)."""
        if not self.coeffs or k == 0:
            return self
        return IntPoly._raw((0,) * k + self.coeffs)

    def truncate(self, order):
        """Drop every term of degree greater than ``order``."""
        return IntPoly(self.coeffs[: order + 1])

    def exact_div_int(self, d):
        return IntPoly._raw(tuple(c // d for c in self.coeffs))

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        if g == 1:
            return self
        return self.exact_div_int(g)

    def divexact(self, other):
        """Quotient of an exact division in ``Z[t]``; raises if inexact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        lb = b[-1]
        if len(r) - 1 < db:
            if any(r):
                raise ArithmeticError("inexact polynomial division")
            return IntPoly._raw(())
        q = [0] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c == 0:
                continue
            qc, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[k - db] = qc
            off = k - db
            for i, bc in enumerate(b):
                r[off + i] -= qc * bc
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return IntPoly._raw(_trim(q))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        return _render_poly(self)


def _prem(a, b):
    """Pseudo-remainder of ``a`` by ``b`` (coefficient lists, low first)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        off = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, bc in enumerate(b):
            r[off + i] -= c * bc
        r = list(_trim(r))
    return r


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in ``Z[t]`` with positive leading coefficient."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    if a.is_constant() or b.is_constant():
        return IntPoly._raw((1,))
    # strip common powers of t cheaply first
    k = min(a.low_degree(), b.low_degree())
    a = IntPoly._raw(a.coeffs[a.low_degree():]).primitive()
    b = IntPoly._raw(b.coeffs[b.low_degree():]).primitive()
    if a.degree < b.degree:
        a, b = b, a
    x, y = a.coeffs, b.coeffs
    while y:
        r = _prem(x, y)
        x = y
        y = IntPoly(r).primitive().coeffs if r else ()
    g = IntPoly._raw(x).primitive()
    return g.shift(k)


class RationalFunction:
    """Canonical quotient ``num/den`` of integer polynomials in ``t``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, Rational) and not isinstance(num, int):
            num, den0 = IntPoly(num.numerator), IntPoly(num.denominator)
            den = IntPoly(den) * den0 if not isinstance(den, IntPoly) else den * den0
        if not isinstance(num, IntPoly):
            num = IntPoly(num)
        if not isinstance(den, IntPoly):
            den = IntPoly(den)
        n, d = _canonical(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, int):
            return cls._raw(IntPoly(x), _ONE_POLY)
        if isinstance(x, IntPoly):
            return cls._raw(x, _ONE_POLY)
        if isinstance(x, Rational):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")

    @classmethod
    def t_power(cls, k, coeff=1):
        """``coeff * t**k`` for any integer ``k``."""
        c = Fraction(coeff)
        if k >= 0:
            return cls(IntPoly.monomial(c.numerator, k), IntPoly(c.denominator))
        return cls(IntPoly(c.numerator), IntPoly.monomial(c.denominator, -k))

    def is_zero(self):
        return not self.num.coeffs

    def is_one(self):
        return self.num.coeffs == (1,) and self.den.coeffs == (1,)

    def is_polynomial(self):
        return self.den.coeffs == (1,)

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = RationalFunction.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num.coeffs, self.den.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.num.coeffs)

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.coerce(other)
        if not other.num.coeffs:
            return self
        if not self.num.coeffs:
            return other
        if self.den.coeffs == (1,) and other.den.coeffs == (1,):
            return RationalFunction._raw(self.num + other.num, _ONE_POLY)
        if self.den.coeffs == other.den.coeffs:
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.coerce(other)
        if not self.num.coeffs or not other.num.coeffs:
            return ZERO
        if self.den.coeffs == (1,) and other.den.coeffs == (1,):
            return RationalFunction._raw(self.num * other.num, _ONE_POLY)
        return _make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.coerce(other)
        if not other.num.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if other.num.coeffs == (1,) and other.den.coeffs == (1,):
            return self
        return _make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self.num**k, self.den**k)

    def times_t(self, k=1):
        """Multiply by ``t**k``."""
        if k >= 0:
            return _make(self.num.shift(k), self.den)
        return _make(self.num, self.den.shift(-k))

    def __call__(self, x):
        return rf_eval(self, x)

    def truncate_t(self, order):
        """Laurent expansion in ``t`` kept through ``t**order``.

        A denominator ``t**k * d(t)`` with ``d(0) != 0`` is allowed; the
        result has denominator ``c * t**k`` for a positive integer ``c``.
        """
        if self.den.coeffs == (1,):
            return RationalFunction._raw(self.num.truncate(order), _ONE_POLY)
        k = self.den.low_degree()
        d = self.den.coeffs[k:]
        top = order + k
        if top < 0:
            return ZERO
        num = self.num.coeffs
        inv = [Fraction(0)] * (top + 1)
        inv[0] = Fraction(1, d[0])
        for n in range(1, top + 1):
            s = Fraction(0)
            for i in range(1, min(n, len(d) - 1) + 1):
                s += d[i] * inv[n - i]
            inv[n] = -s / d[0]
        out = [Fraction(0)] * (top + 1)
        for i, a in enumerate(num[: top + 1]):
            if a:
                for j in range(top + 1 - i):
                    out[i + j] += a * inv[j]
        common = 1
        for c in out:
            common = common * c.denominator // _igcd(common, c.denominator)
        return RationalFunction(
            IntPoly([int(c * common) for c in out]), IntPoly.monomial(common, k)
        )

    def __repr__(self):
        return f"RationalFunction({self.num.coeffs!r}, {self.den.coeffs!r})"

    def __str__(self):
        if self.den.coeffs == (1,):
            return f"({_render_poly(self.num)})"
        return f"({_render_poly(self.num)})/({_render_poly(self.den)})"

    @classmethod
    def parse(cls, text):
        """Inverse of ``str()`` on the canonical rendering."""
        text = text.strip()
        m = re.fullmatch(r"\(([^()]*)\)(?:/\(([^()]*)\))?", text)
        if not m:
            raise ValueError(f"not a canonical rational function: {text!r}")
        num = _parse_poly(m.group(1))
        den = _parse_poly(m.group(2)) if m.group(2) is not None else _ONE_POLY
        return cls(num, den)


def _canonical(num, den):
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return _ZERO_POLY, _ONE_POLY
    if den.coeffs == (1,):
        return num, den
    if den.is_constant():
        d = den.coeffs[0]
        g = _igcd(num.content(), d)
        if d < 0:
            g = -g
        if g == 1:
            return num, den
        return num.exact_div_int(g), IntPoly._raw((d // g,))
    g = poly_gcd(num, den)
    if not g.is_one():
        num = num.divexact(g)
        den = den.divexact(g)
    c = _igcd(num.content(), den.content())
    if den.lead < 0:
        c = -c
    if c != 1:
        num = num.exact_div_int(c)
        den = den.exact_div_int(c)
    return num, den


def _make(num, den):
    n, d = _canonical(num, den)
    return RationalFunction._raw(n, d)


def rf_reduce(num, den) -> RationalFunction:
    """Canonical form of ``num/den``; accepts IntPoly, ints or coefficient lists."""
    if not isinstance(num, IntPoly):
        num = IntPoly(num)
    if not isinstance(den, IntPoly):
        den = IntPoly(den)
    return _make(num, den)


def rf_eval(f: RationalFunction, point) -> Fraction:
    """Exact value of ``f`` at a rational point."""
    f = RationalFunction.coerce(f)
    x = Fraction(point)
    d = f.den(x)
    if d == 0:
        raise ZeroDivisionError("pole at evaluation point")
    return Fraction(f.num(x)) / d


_TERM_RE = re.compile(r"^([+-]?\d*)(\*?t(?:\^(\d+))?)?$")


def _render_poly(p):
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            mono = "t" if e == 1 else f"t^{e}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def _parse_poly(text):
    tokens = text.replace(" ", "")
    if not tokens:
        raise ValueError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", tokens)
    terms = []
    for piece in pieces:
        m = _TERM_RE.match(piece)
        if not m:
            raise ValueError(f"bad polynomial term {piece!r}")
        cs, mono, es = m.groups()
        if mono is None:
            terms.append((0, int(cs)))
            continue
        if cs in ("", "+"):
            c = 1
        elif cs == "-":
            c = -1
        else:
            c = int(cs)
        terms.append((int(es) if es else 1, c))
    return IntPoly.from_terms(terms)


_ONE_POLY = IntPoly._raw((1,))
_ZERO_POLY = IntPoly._raw(())
ONE = RationalFunction._raw(_ONE_POLY, _ONE_POLY)
ZERO = RationalFunction._raw(_ZERO_POLY, _ONE_POLY)
T = RationalFunction._raw(IntPoly._raw((0, 1)), _ONE_POLY)
