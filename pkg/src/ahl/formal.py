"""Truncated series in ``x0 = e^{-alpha_0}`` and ``x1 = e^{-alpha_1}``.

A ``ConeSeries`` stores coefficients of ``x0^m x1^n`` for ``0 <= m, n <= box``.
Box truncation is closed under products, so every stored coefficient is exact.
The imaginary root ``delta`` is ``x0*x1 = q``.
"""

from __future__ import annotations

import json

from .qseries import QSeries, poch_inf
from .ring import ONE, ZERO, T, RationalFunction

_rf = RationalFunction.coerce


class ConeSeries:
    __slots__ = ("terms", "box", "base")

    def __init__(self, terms=None, box=0, base=None):
        self.box = int(box)
        self.base = base
        self.terms = {}
        for (m, n), c in (terms or {}).items():
            if m < 0 or n < 0:
                raise ValueError(f"exponent ({m},{n}) lies outside the positive cone")
            c = _rf(c)
            if c and m <= box and n <= box:
                self.terms[(m, n)] = c

    @classmethod
    def _raw(cls, terms, box, base=None):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.box = box
        obj.base = base
        return obj

    @classmethod
    def one(cls, box):
        return cls._raw({(0, 0): ONE}, box)

    @classmethod
    def monomial(cls, c, m, n, box):
        return cls({(m, n): c}, box)

    def __getitem__(self, mn):
        m, n = mn
        if m > self.box or n > self.box:
            raise IndexError(f"({m},{n}) is outside box {self.box}")
        return self.terms.get((m, n), ZERO)

    def coeff(self, m, n):
        return self[(m, n)]

    def _check(self, other):
        if other.box != self.box:
            raise ValueError("box mismatch; restrict first")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return ConeSeries._raw(out, self.box, self.base)

    def __neg__(self):
        return ConeSeries._raw({k: -c for k, c in self.terms.items()}, self.box, self.base)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _rf(c)
        if not c:
            return ConeSeries._raw({}, self.box, self.base)
        return ConeSeries._raw({k: v * c for k, v in self.terms.items()}, self.box, self.base)

    def __mul__(self, other):
        if isinstance(other, ConeSeries):
            return cs_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ConeSeries):
            return cs_mul(self, cs_inv(other))
        return self.scale(ONE / _rf(other))

    def __eq__(self, other):
        if not isinstance(other, ConeSeries):
            return NotImplemented
        return self.box == other.box and self.terms == other.terms

    def shift(self, m, n):
        """Multiply by ``x0^m x1^n``."""
        b = self.box
        out = {}
        for (a, c), v in self.terms.items():
            a2, c2 = a + m, c + n
            if a2 < 0 or c2 < 0:
                raise ValueError("shift leaves the positive cone")
            if a2 <= b and c2 <= b:
                out[(a2, c2)] = v
        return ConeSeries._raw(out, b, self.base)

    def restrict(self, box):
        if box > self.box:
            raise ValueError("cannot enlarge the box of a truncated series")
        return ConeSeries._raw(
            {k: v for k, v in self.terms.items() if k[0] <= box and k[1] <= box}, box, self.base
        )

    def mul_linear(self, c0, c1, root):
        """Multiply by ``c0 + c1 * x^root``."""
        c0, c1 = _rf(c0), _rf(c1)
        a, b = root
        box = self.box
        out = {}
        if c0:
            for k, v in self.terms.items():
                out[k] = v if c0.is_one() else v * c0
        if c1:
            for (m, n), v in self.terms.items():
                k = (m + a, n + b)
                if k[0] > box or k[1] > box:
                    continue
                s = out.get(k)
                s = v * c1 if s is None else s + v * c1
                if s:
                    out[k] = s
                else:
                    del out[k]
        return ConeSeries._raw(out, box, self.base)

    def div_linear(self, c0, c1, root):
        """Divide by ``c0 + c1 * x^root`` with ``root != (0, 0)`` and ``c0 != 0``."""
        c0, c1 = _rf(c0), _rf(c1)
        a, b = root
        if (a, b) == (0, 0) or a < 0 or b < 0:
            raise ValueError("divisor must be 1 + (positive cone term)")
        if not c0:
            raise ZeroDivisionError("constant term of the divisor is zero")
        box = self.box
        inv0 = None if c0.is_one() else ONE / c0
        r = -c1 if inv0 is None else -c1 * inv0
        src = self.terms
        out = {}
        if a > box or b > box or not c1:
            return self if inv0 is None else self.scale(inv0)
        for m in range(box + 1):
            for n in range(box + 1):
                v = src.get((m, n))
                if inv0 is not None and v is not None:
                    v = v * inv0
                if m >= a and n >= b:
                    prev = out.get((m - a, n - b))
                    if prev is not None:
                        v = prev * r if v is None else v + prev * r
                if v:
                    out[(m, n)] = v
        return ConeSeries._raw(out, box, self.base)

    def hat(self):
        """Swap ``alpha_0`` and ``alpha_1``."""
        return ConeSeries._raw({(n, m): v for (m, n), v in self.terms.items()}, self.box, self.base)

    def subs_t(self, x):
        out = {}
        for k, v in self.terms.items():
            w = _rf(v(x))
            if w:
                out[k] = w
        return ConeSeries._raw(out, self.box, self.base)

    def map_coeffs(self, fn):
        out = {}
        for k, v in self.terms.items():
            w = fn(v)
            if w:
                out[k] = w
        return ConeSeries._raw(out, self.box, self.base)

    def ct(self):
        """Constant term in ``e^{alpha_1}``: the diagonal, as a series in ``q``."""
        return QSeries({2 * k: self.terms[(k, k)] for k in range(self.box + 1) if (k, k) in self.terms},
                       2 * self.box, "q")

    def principal_spec(self):
        """``e^{-alpha_i} -> v``: sum along antidiagonals, exact through ``v^box``."""
        out = {}
        for (m, n), c in self.terms.items():
            h = m + n
            if h <= self.box:
                out[2 * h] = out.get(2 * h, ZERO) + c
        return QSeries(out, 2 * self.box, "v")

    def first_mismatch(self, other, upto=None):
        """Smallest ``[m, n]`` (by height, then ``m``) where the two series differ."""
        self._check(other)
        box = self.box if upto is None else upto
        for h in range(2 * box + 1):
            for m in range(max(0, h - box), min(h, box) + 1):
                if self[(m, h - m)] != other[(m, h - m)]:
                    return [m, h - m]
        return None

    def to_dict(self):
        return {
            "base": self.base,
            "box": self.box,
            "terms": [[m, n, str(self.terms[(m, n)])] for (m, n) in sorted(self.terms)],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d):
        return cls({(m, n): RationalFunction.parse(s) for m, n, s in d["terms"]}, d["box"], d.get("base"))

    def __repr__(self):
        items = ", ".join(f"({m},{n}): {self.terms[(m, n)]}" for (m, n) in sorted(self.terms)[:8])
        more = ", ..." if len(self.terms) > 8 else ""
        return f"ConeSeries(box={self.box}; {{{items}{more}}})"


def cs_mul(a: ConeSeries, b: ConeSeries) -> ConeSeries:
    a._check(b)
    box = a.box
    out = {}
    for (m1, n1), c1 in a.terms.items():
        for (m2, n2), c2 in b.terms.items():
            m, n = m1 + m2, n1 + n2
            if m > box or n > box:
                continue
            k = (m, n)
            s = out.get(k)
            out[k] = c1 * c2 if s is None else s + c1 * c2
    return ConeSeries._raw({k: v for k, v in out.items() if v}, box)


def cs_inv(a: ConeSeries) -> ConeSeries:
    c0 = a.terms.get((0, 0))
    if not c0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    box = a.box
    inv0 = ONE / c0
    rest = [(k, v) for k, v in a.terms.items() if k != (0, 0)]
    out = {}
    for m in range(box + 1):
        for n in range(box + 1):
            s = ONE if (m, n) == (0, 0) else ZERO
            for (i, j), v in rest:
                if i <= m and j <= n:
                    prev = out.get((m - i, n - j))
                    if prev is not None:
                        s = s - v * prev
            if s:
                out[(m, n)] = s * inv0
    return ConeSeries._raw(out, box)


def from_qseries(qs: QSeries, box) -> ConeSeries:
    """Embed a series in ``q = x0*x1``."""
    if qs.trunc < 2 * box:
        raise ValueError("q-series is not known far enough for this box")
    out = {}
    for e2, c in qs.terms.items():
        if e2 % 2 or e2 < 0:
            raise ValueError("only nonnegative integral powers of q embed in the cone")
        k = e2 // 2
        if k <= box:
            out[(k, k)] = c
    return ConeSeries._raw(out, box)


def _roots(box, real=True, imaginary=True):
    from .affine import positive_roots

    return positive_roots(box, real, imaginary)


def _apply_factor(s: ConeSeries, roots, tnum, tden):
    """Multiply by ``prod (1 - tnum*y)/(1 - tden*y)`` over ``roots``."""
    for y in roots:
        s = s.mul_linear(ONE, -_rf(tnum), y)
        s = s.div_linear(ONE, -_rf(tden), y)
    return s


def delta_tilde(box, t=None):
    """``prod_{alpha>0} (1 - e^{-alpha}) / (1 - t e^{-alpha})`` with multiplicity one."""
    tt = T if t is None else _rf(t)
    return _apply_factor(ConeSeries.one(box), _roots(box), ONE, tt)


def delta_tilde_inv(box, t=None):
    tt = T if t is None else _rf(t)
    return _apply_factor(ConeSeries.one(box), _roots(box), tt, ONE)


def mu_kernel(box, t=None):
    """Real-root part of ``delta_tilde``."""
    tt = T if t is None else _rf(t)
    return _apply_factor(ConeSeries.one(box), _roots(box, imaginary=False), ONE, tt)


def delta_tilde_im(order, t=None):
    """Imaginary-root part ``(q;q)_inf / (tq;q)_inf`` as a series in ``q``."""
    tt = T if t is None else _rf(t)
    return poch_inf(1, ONE, 1, order) / poch_inf(1, tt, 1, order)


def _sum_monomials(gen, box):
    out = {}
    for m, n in gen:
        if 0 <= m <= box and 0 <= n <= box:
            out[(m, n)] = out.get((m, n), ZERO) + ONE
    return ConeSeries._raw({k: v for k, v in out.items() if v}, box)


def _jrange(box):
    j = 0
    while 2 * j * j - 2 * j <= 4 * box + 4:
        j += 1
    return range(-j - 1, j + 2)


def theta(kind, box):
    """Theta series in the cone.

    ``"1"``: ``sum_j x0^{j^2} x1^{j^2-j}`` (orbit of ``Lambda_0``);
    ``"R"``: ``sum_j x0^{j(j+1)/2} x1^{j(j-1)/2}``;
    ``"2"``: ``sum_j x0^{2j^2} x1^{2j^2-2j}`` (orbit of ``2 Lambda_0``);
    ``"2hat"``: the same with ``alpha_0`` and ``alpha_1`` exchanged;
    ``"4"``: orbit sum of ``3 Lambda_0 + Lambda_1``.
    """
    js = _jrange(box)
    if kind == "1":
        return _sum_monomials(((j * j, j * j - j) for j in js), box)
    if kind == "R":
        return _sum_monomials(((j * (j + 1) // 2, j * (j - 1) // 2) for j in js), box)
    if kind == "2":
        return _sum_monomials(((2 * j * j, 2 * j * j - 2 * j) for j in js), box)
    if kind == "2hat":
        return theta("2", box).hat()
    if kind == "4":
        from .affine import orbit_sum, weight

        return orbit_sum(weight(3, 1), box)
    raise ValueError(f"unknown theta series {kind!r}")
