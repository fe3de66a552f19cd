"""Truncated one-variable series over :class:`~ahl.ring.RationalFunction`.

Exponents live on the half-integer grid and are stored doubled, so
``q**(1/2)`` has key ``1`` and ``q`` has key ``2``.  A series knows its
truncation bound ``trunc`` (doubled, inclusive); coefficients above it are
unknown, never assumed zero.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction
from math import gcd, isqrt

from .report import IdentityReport
from .ring import ONE, ZERO, RationalFunction

__all__ = [
    "QSeries",
    "Monomial",
    "dbl",
    "qs_mul",
    "qs_inv",
    "qs_split_parity",
    "poch_inf",
    "poch_int",
    "poch_product",
    "bilateral_sum",
    "sum_F",
    "first_mismatch",
    "compare_series",
    "verify_1psi1",
    "verify_6psi6",
]

_rf = RationalFunction.coerce


def dbl(e) -> int:
    """Doubled exponent of a half-integer ``e``."""
    d = Fraction(e) * 2
    if d.denominator != 1:
        raise ValueError(f"exponent {e} is not on the half-integer grid")
    return int(d)


class QSeries:
    __slots__ = ("terms", "trunc", "var")

    def __init__(self, terms=None, trunc=0, var="q"):
        clean = {}
        if terms:
            for e, c in terms.items():
                if e > trunc:
                    continue
                c = _rf(c)
                if c:
                    clean[e] = c
        self.terms = clean
        self.trunc = trunc
        self.var = var

    @classmethod
    def _raw(cls, terms, trunc, var):
        obj = object.__new__(cls)
        obj.terms = terms
        obj.trunc = trunc
        obj.var = var
        return obj

    @classmethod
    def one(cls, trunc, var="q"):
        return cls._raw({0: ONE} if trunc >= 0 else {}, trunc, var)

    @classmethod
    def zero(cls, trunc, var="q"):
        return cls._raw({}, trunc, var)

    @classmethod
    def monomial(cls, coeff, e2, trunc, var="q"):
        return cls({e2: coeff}, trunc, var)

    @classmethod
    def from_coeffs(cls, coeffs, order, var="q"):
        """Integer-exponent series ``sum coeffs[k] q**k`` known through ``q**order``."""
        return cls({2 * k: c for k, c in enumerate(coeffs)}, 2 * order, var)

    @property
    def min_exp(self):
        return min(self.terms) if self.terms else None

    @property
    def val(self):
        """Doubled valuation; ``trunc + 1`` when nothing nonzero is known."""
        return min(self.terms) if self.terms else self.trunc + 1

    def c2(self, e2):
        if e2 > self.trunc:
            raise ValueError(f"coefficient at doubled exponent {e2} is beyond trunc {self.trunc}")
        return self.terms.get(e2, ZERO)

    def coeff(self, e):
        return self.c2(dbl(e))

    def is_integral(self):
        """True when every stored exponent is an integer."""
        return all(e % 2 == 0 for e in self.terms)

    def _check(self, other):
        if isinstance(other, QSeries) and other.var != self.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.monomial(other, 0, self.trunc, self.var)
        self._check(other)
        trunc = min(self.trunc, other.trunc)
        out = {e: c for e, c in self.terms.items() if e <= trunc}
        for e, c in other.terms.items():
            if e > trunc:
                continue
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return QSeries._raw(out, trunc, self.var)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw({e: -c for e, c in self.terms.items()}, self.trunc, self.var)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.monomial(other, 0, self.trunc, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _rf(c)
        if not c:
            return QSeries.zero(self.trunc, self.var)
        if c.is_one():
            return self
        return QSeries._raw({e: v * c for e, v in self.terms.items()}, self.trunc, self.var)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, qs_inv(other))
        return self.scale(_rf(other).inverse())

    def shift(self, k2):
        """Multiply by ``var**(k2/2)``."""
        if k2 == 0:
            return self
        return QSeries._raw({e + k2: c for e, c in self.terms.items()}, self.trunc + k2, self.var)

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise ValueError("cannot raise the truncation bound")
        return QSeries._raw({e: c for e, c in self.terms.items() if e <= trunc}, trunc, self.var)

    def mul_binomial(self, c, e2):
        """``self * (1 + c*var**(e2/2))``; a negative ``e2`` lowers ``trunc``."""
        c = _rf(c)
        if not c:
            return self
        if e2 == 0:
            return self.scale(ONE + c)
        trunc = self.trunc + min(0, e2)
        out = {e: v for e, v in self.terms.items() if e <= trunc}
        for e, v in self.terms.items():
            k = e + e2
            if k > trunc:
                continue
            s = out.get(k)
            s = v * c if s is None else s + v * c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QSeries._raw(out, trunc, self.var)

    def div_binomial(self, c, e2):
        """``self / (1 + c*var**(e2/2))`` expanded at ``var = 0``."""
        c = _rf(c)
        if not c:
            return self
        if e2 == 0:
            d = ONE + c
            if not d:
                raise ZeroDivisionError("non-unit series")
            return self.scale(d.inverse())
        if e2 < 0:
            # 1 + c v^e = c v^e (1 + c^-1 v^-e)
            ci = c.inverse()
            return self.shift(-e2).scale(ci).div_binomial(ci, -e2)
        out = dict(self.terms)
        if not out:
            return QSeries._raw(out, self.trunc, self.var)
        lo = min(out)
        step = 0
        for e in out:
            step = gcd(step, e - lo)
        step = gcd(step, e2)
        mc = -c
        for k in range(lo + e2, self.trunc + 1, step):
            prev = out.get(k - e2)
            if prev is None:
                continue
            s = out.get(k)
            s = prev * mc if s is None else s + prev * mc
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QSeries._raw(out, self.trunc, self.var)

    def subs_t(self, x):
        """Coefficientwise substitution ``t = x``."""
        out = {}
        for e, c in self.terms.items():
            v = c(x)
            if v:
                out[e] = RationalFunction(v)
        return QSeries._raw(out, self.trunc, self.var)

    def truncate_t(self, order):
        """Expand every coefficient t-adically through ``t**order``."""
        out = {}
        for e, c in self.terms.items():
            v = c.truncate_t(order)
            if v:
                out[e] = v
        return QSeries._raw(out, self.trunc, self.var)

    def rescale(self, k):
        """Substitute ``var -> var**k`` for a positive integer ``k``."""
        return QSeries._raw({e * k: c for e, c in self.terms.items()}, self.trunc * k, self.var)

    def halve(self):
        """Substitute ``var -> var**(1/2)``; every doubled exponent must be even."""
        if any(e % 2 for e in self.terms) or self.trunc % 2:
            raise ValueError("halving needs even doubled exponents")
        return QSeries._raw({e // 2: c for e, c in self.terms.items()}, self.trunc // 2, self.var)

    def with_var(self, var):
        return QSeries._raw(self.terms, self.trunc, var)

    def items(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.var == other.var and self.trunc == other.trunc and self.terms == other.terms

    def __repr__(self):
        shown = ", ".join(f"{Fraction(e, 2)}: {c}" for e, c in self.items()[:6])
        more = ", ..." if len(self.terms) > 6 else ""
        return f"QSeries({self.var}; {{{shown}{more}}}; trunc={Fraction(self.trunc, 2)})"

    def to_dict(self):
        return {
            "var": self.var,
            "grid": 2,
            "terms": [[e, str(c)] for e, c in self.items()],
            "trunc": self.trunc,
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d):
        return cls(
            {int(e): RationalFunction.parse(s) for e, s in d["terms"]},
            int(d["trunc"]),
            d.get("var", "q"),
        )


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Truncated Cauchy product."""
    a._check(b)
    trunc = min(a.trunc + b.val, b.trunc + a.val)
    out = {}
    bt = sorted(b.terms.items())
    for i, x in a.terms.items():
        for j, y in bt:
            k = i + j
            if k > trunc:
                break
            s = out.get(k)
            s = x * y if s is None else s + x * y
            out[k] = s
    return QSeries._raw({k: v for k, v in out.items() if v}, trunc, a.var)


def qs_inv(a: QSeries) -> QSeries:
    """Multiplicative inverse of a series with a known nonzero lowest term."""
    if not a.terms:
        raise ZeroDivisionError("non-unit series")
    e0 = min(a.terms)
    c0 = a.terms[e0]
    rel = a.trunc - e0
    step = 0
    for e in a.terms:
        step = gcd(step, e - e0)
    step = step or 2
    ic0 = c0.inverse()
    rest = sorted((e - e0, c * ic0) for e, c in a.terms.items() if e != e0)
    b = {0: ONE}
    for r in range(step, rel + 1, step):
        s = ZERO
        for k, ak in rest:
            if k > r:
                break
            bk = b.get(r - k)
            if bk is not None:
                s = s + ak * bk
        if s:
            b[r] = -s
    out = {r - e0: v * ic0 for r, v in b.items()}
    return QSeries._raw(out, rel - e0, a.var)


def qs_split_parity(a: QSeries):
    """``(even, odd)``: integer-exponent part and strictly half-integer part."""
    even = {e: c for e, c in a.terms.items() if e % 2 == 0}
    odd = {e: c for e, c in a.terms.items() if e % 2}
    return QSeries._raw(even, a.trunc, a.var), QSeries._raw(odd, a.trunc, a.var)


def poch_inf(exp_a, coef_a, step, order, var="q", step_coef=1) -> QSeries:
    """``(coef_a*q**exp_a; step_coef*q**step)_inf`` through ``q**order``."""
    ea, st = dbl(exp_a), dbl(step)
    if ea <= 0:
        raise ValueError("non-formal Pochhammer argument")
    if st <= 0:
        raise ValueError("Pochhammer step must have positive exponent")
    trunc = dbl(order)
    c = -_rf(coef_a)
    sc = _rf(step_coef)
    out = QSeries.one(trunc, var)
    e = ea
    while e <= trunc:
        out = out.mul_binomial(c, e)
        e += st
        c = c * sc
    return out


def poch_int(exp_a, coef_a, step, j, order, var="q", step_coef=1) -> QSeries:
    """``(a; w)_j`` for any integer ``j`` with ``a = coef_a*q**exp_a``, ``w = step_coef*q**step``.

    Negative ``j`` gives ``1/prod_{i=1}^{|j|} (1 - a w**-i)``, expanded as a
    Laurent series at ``q = 0`` and known through ``q**order``.
    """
    ea, st = dbl(exp_a), dbl(step)
    trunc = dbl(order)
    c = _rf(coef_a)
    sc = _rf(step_coef)
    if j >= 0:
        out = QSeries.one(trunc, var)
        for i in range(j):
            out = out.mul_binomial(-c * sc**i, ea + i * st)
        return out
    factors = [(-c * sc ** (-i), ea - i * st) for i in range(1, -j + 1)]
    # each factor 1/(1 + c v^e) with e < 0 raises trunc by |e|; start low enough
    lift = sum(-e for _, e in factors if e < 0)
    out = QSeries.one(trunc - lift, var)
    for cf, e in factors:
        if e == 0 and not (ONE + cf):
            raise ZeroDivisionError("non-invertible Pochhammer factor")
        out = out.div_binomial(cf, e)
    return out.truncate(trunc)


class Monomial:
    """``coef * t**t_exp * v**(v2/2)`` with a rational coefficient."""

    __slots__ = ("coef", "t_exp", "v2")

    def __init__(self, coef=1, t_exp=0, v_exp=0, *, v2=None):
        self.coef = Fraction(coef)
        self.t_exp = int(t_exp)
        self.v2 = dbl(v_exp) if v2 is None else int(v2)
        if self.coef == 0:
            raise ValueError("zero monomial")

    def rf(self):
        return RationalFunction.t_power(self.t_exp, self.coef)

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return Monomial(self.coef * Fraction(other), self.t_exp, v2=self.v2)
        return Monomial(self.coef * other.coef, self.t_exp + other.t_exp, v2=self.v2 + other.v2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Monomial):
            other = Monomial(other)
        return Monomial(self.coef / other.coef, self.t_exp - other.t_exp, v2=self.v2 - other.v2)

    def __rtruediv__(self, other):
        return Monomial(other) / self

    def __pow__(self, k):
        return Monomial(self.coef**k, self.t_exp * k, v2=self.v2 * k)

    def __neg__(self):
        return Monomial(-self.coef, self.t_exp, v2=self.v2)

    def sqrt(self):
        c = self.coef
        rn, rd = isqrt(c.numerator) if c > 0 else -1, isqrt(c.denominator)
        if c <= 0 or rn * rn != c.numerator or rd * rd != c.denominator:
            raise ValueError(f"{self} has no monomial square root")
        if self.t_exp % 2 or self.v2 % 2:
            raise ValueError(f"{self} has no monomial square root on the half-integer grid")
        return Monomial(Fraction(rn, rd), self.t_exp // 2, v2=self.v2 // 2)

    def is_one(self):
        return self.coef == 1 and self.t_exp == 0 and self.v2 == 0

    def degree2(self, t_weight):
        """Doubled degree with ``v`` of weight 1 and ``t`` of weight ``t_weight``."""
        return self.v2 + 2 * t_weight * self.t_exp

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and (self.coef, self.t_exp, self.v2) == (other.coef, other.t_exp, other.v2)
        )

    def __hash__(self):
        return hash((self.coef, self.t_exp, self.v2))

    def __repr__(self):
        return f"Monomial({self.coef}, t^{self.t_exp}, v^{Fraction(self.v2, 2)})"


def _key(m):
    return (m.coef, m.t_exp, m.v2)


def _cancel_common(num, den):
    num, den = list(num), list(den)
    for m in list(num):
        for i, d in enumerate(den):
            if d == m:
                num.remove(m)
                del den[i]
                break
    return num, den


def poch_product(num_args, den_args, w, v_order, t_order=None, var="v"):
    """``prod (x; w)_inf over num_args / prod (x; w)_inf over den_args``.

    Identical symbols in numerator and denominator cancel first.  Arguments of
    ``v``-exponent zero contribute their first factor as a scalar.  Raises
    ``ValueError`` naming the offending argument if an infinite product is
    not formal in ``v`` (or, with ``t_order``, in the combined t/v grading).
    """
    num_args, den_args = _cancel_common(num_args, den_args)
    wt = 0 if t_order is None else 1
    if w.v2 <= 0:
        raise ValueError(f"non-formal Pochhammer base {w!r}")
    trunc = dbl(v_order)
    out = QSeries.one(trunc, var)
    for args, invert in ((num_args, False), (den_args, True)):
        for x in args:
            if x.v2 < 0:
                raise ValueError(f"non-formal Pochhammer argument {x!r}")
            cur = x
            if cur.v2 == 0:
                scalar = ONE - cur.rf()
                if not scalar:
                    if invert:
                        raise ZeroDivisionError(f"Pochhammer ({x!r}; w) vanishes in a denominator")
                    return QSeries.zero(trunc, var)
                out = out.scale(scalar.inverse() if invert else scalar)
                cur = cur * w
            if invert and cur.degree2(wt) <= 0:
                raise ValueError(f"non-formal Pochhammer argument {x!r} in the t-adic grading")
            while cur.v2 <= trunc:
                if invert:
                    out = out.div_binomial(-cur.rf(), cur.v2)
                else:
                    out = out.mul_binomial(-cur.rf(), cur.v2)
                cur = cur * w
    return out


def _step_factors(upper, lower, w, n, sign):
    """Raw factors added when passing from term ``sign*(n-1)`` to ``sign*n``.

    Returns ``(numerator monomials, denominator monomials)`` in the sense of
    ``prod (1 - m)``.
    """
    if sign > 0:
        wn = w ** (n - 1)
        return [a * wn for a in upper], [b * wn for b in lower]
    wn = w ** (-n)
    return [b * wn for b in lower], [a * wn for a in upper]


def _factor_val(m, t_weight):
    # exact doubled valuation of (1 - m) in the chosen grading, plus a zero flag
    if m.v2 == 0 and m.t_exp == 0:
        return 0, m.coef == 1
    return min(0, m.degree2(t_weight)), False


def bilateral_sum(upper, lower, w, z, v_order, t_order=None, quad=0, var="v", max_terms=100000):
    """``sum_j v**(quad*C(j,2)) z**j prod (upper; w)_j / prod (lower; w)_j``.

    ``upper``/``lower``/``w``/``z`` are :class:`Monomial` values and ``quad`` a
    nonnegative half-integer.  Terms are kept while their exact valuation can
    reach ``v**v_order`` (with ``t_order``: the combined degree can reach
    ``v_order + t_order``, and every coefficient is then expanded t-adically
    through ``t**t_order``).  Each direction stops only once the valuation
    exceeds the bound and increments are provably nondecreasing and positive.
    """
    wt = 0 if t_order is None else 1
    quad2 = dbl(quad)
    if quad2 < 0:
        raise ValueError("quadratic exponent must be nonnegative")
    if w.degree2(wt) <= 0 or w.v2 <= 0:
        raise ValueError(f"non-formal base {w!r}")
    bound = dbl(v_order) + (dbl(t_order) if t_order is not None else 0)
    trunc = dbl(v_order)
    total = QSeries.zero(trunc, var)
    plan = {}
    kept = 0
    for sign in (1, -1):
        lc = 0  # combined valuation
        lv = 0  # v valuation
        steps = []
        n = 0
        while True:
            n += 1
            if n > max_terms:
                raise ValueError("bilateral sum does not terminate formally")
            nums, dens = _step_factors(upper, lower, w, n, sign)
            j = sign * n
            # z**j and v**(quad*C(j,2)) increments
            zc = z if sign > 0 else 1 / z
            dq = quad2 * (n - 1) if sign > 0 else quad2 * n
            dlc = zc.degree2(wt) + dq
            dlv = zc.v2 + dq
            zero = False
            for m in nums:
                vc, zf = _factor_val(m, wt)
                zero = zero or zf
                dlc += vc
                dlv += min(0, m.v2)
            for m in dens:
                vc, zf = _factor_val(m, wt)
                if zf:
                    raise ZeroDivisionError(f"pole: factor (1 - {m!r}) vanishes at j={j}")
                if m.v2 > 0 and m.degree2(wt) < 0:
                    raise ValueError(f"non-formal denominator factor (1 - {m!r})")
                dlc -= vc
                dlv -= min(0, m.v2)
            if zero:
                break
            lc += dlc
            lv += dlv
            nxt_n, nxt_d = _step_factors(upper, lower, w, n + 1, sign)
            stable = all(
                (m.v2 > 0 and m.degree2(wt) >= 0) if sign > 0 else (m.v2 < 0 and m.degree2(wt) <= 0)
                for m in nxt_n + nxt_d
            )
            if stable:
                # in the stable regime increments are affine in n with this slope
                nz = z if sign > 0 else 1 / z
                inc = nz.degree2(wt) + (quad2 * n if sign > 0 else quad2 * (n + 1))
                slope = quad2
                if sign < 0:
                    inc += sum(m.degree2(wt) for m in nxt_n) - sum(m.degree2(wt) for m in nxt_d)
                    slope += (len(upper) - len(lower)) * w.degree2(wt)
                if slope < 0 or (slope == 0 and inc <= 0):
                    raise ValueError(
                        f"bilateral sum does not converge formally as j -> {'+' if sign > 0 else '-'}inf"
                    )
                if lc > bound and inc > 0:
                    break
            steps.append((nums, dens, lv, lc))
        plan[sign] = steps
    for sign, steps in plan.items():
        if not steps:
            continue
        min_lv = min(0, min(s[2] for s in steps))
        cur = QSeries.one(trunc - min_lv, var)
        for n, (nums, dens, lv, lc) in enumerate(steps, start=1):
            zc = z if sign > 0 else 1 / z
            dq = quad2 * (n - 1) if sign > 0 else quad2 * n
            cur = cur.shift(zc.v2 + dq).scale(RationalFunction.t_power(zc.t_exp, zc.coef))
            for m in dens:
                cur = cur.div_binomial(-m.rf(), m.v2)
            for m in nums:
                cur = cur.mul_binomial(-m.rf(), m.v2)
            if lc <= bound:
                total = total + cur.truncate(trunc)
                kept += 1
    total = total + QSeries.one(trunc, var)
    if t_order is not None:
        total = total.truncate_t(t_order)
    return total


def sum_F(l, p, v_order, t_order=None, symmetrized=False) -> QSeries:
    """Principal-specialized Weyl sum ``F^l_p`` as a series in ``v``.

    ``sum_j v**(p*j + l*C(j,2)) t**j (t^-1 v; v^2)_j / (t v; v^2)_j``.
    Level 0 needs ``t_order``; its coefficients are t-adic and truncated
    at ``t**t_order``.
    """
    if not 0 <= p <= l:
        raise ValueError(f"p={p} outside 0..{l}")
    if l == 0 and t_order is None:
        raise ValueError("level 0 needs t_order (coefficients are t-adic)")
    if l > 0:
        t_order = None
    a = Monomial(1, -1, 1)
    b = Monomial(1, 1, 1)
    w = Monomial(1, 0, 2)
    if not symmetrized:
        return bilateral_sum([a], [b], w, Monomial(1, 1, p), v_order, t_order, quad=l)
    # (1 + v^((l-2p) j))/2 splits into the p and l-p sums
    s1 = bilateral_sum([a], [b], w, Monomial(1, 1, p), v_order, t_order, quad=l)
    s2 = bilateral_sum([a], [b], w, Monomial(1, 1, l - p), v_order, t_order, quad=l)
    return (s1 + s2).scale(RationalFunction(1, 2))


def first_mismatch(a: QSeries, b: QSeries, upto2: int):
    """Lowest doubled exponent ``<= upto2`` where ``a`` and ``b`` differ, else None."""
    if a.trunc < upto2 or b.trunc < upto2:
        raise ValueError(
            f"comparison to {upto2} needs both series known that far "
            f"(have {a.trunc} and {b.trunc})"
        )
    keys = sorted(k for k in set(a.terms) | set(b.terms) if k <= upto2)
    for k in keys:
        if a.terms.get(k, ZERO) != b.terms.get(k, ZERO):
            return k
    return None


def compare_series(ident, lhs, rhs, order, started=None):
    """Build an :class:`IdentityReport` comparing two series through ``q**order``."""
    mm = first_mismatch(lhs, rhs, dbl(order))
    elapsed = time.perf_counter() - started if started is not None else 0.0
    return IdentityReport(ident, order, "pass" if mm is None else "fail", mm, elapsed)


def _psi1_rhs_args(a, b, w, z):
    return [w, b / a, a * z, w / (a * z)], [b, w / a, z, b / (a * z)]


def verify_1psi1(a, b, w, z, v_order, t_order=None, mutate_rhs=None, ident="APP_1PSI1"):
    """Check Ramanujan's bilateral sum at monomial parameters."""
    started = time.perf_counter()
    num, den = _psi1_rhs_args(a, b, w, z)
    if mutate_rhs is not None:
        num, den = mutate_rhs(num, den)
    rhs = poch_product(num, den, w, v_order, t_order)
    lhs = bilateral_sum([a], [b], w, z, v_order, t_order)
    if t_order is not None:
        rhs = rhs.truncate_t(t_order)
    return compare_series(ident, lhs, rhs, v_order, started)


def _psi6_params(a, b, c, d, e, w):
    ra = a.sqrt()
    upper = [w * ra, -(w * ra), b, c, d, e]
    aw = a * w
    lower = [ra, -ra, aw / b, aw / c, aw / d, aw / e]
    z = w * a * a / (b * c * d * e)
    num = [aw, aw / (b * c), aw / (b * d), aw / (c * d), aw / (b * e), aw / (c * e), aw / (d * e), w, w / a]
    den = [aw / b, aw / c, aw / d, aw / e, w / b, w / c, w / d, w / e, z]
    return upper, lower, z, num, den


def verify_6psi6(a, b, c, d, e, w, v_order, mutate_lhs=None, ident="APP_6PSI6"):
    """Check Bailey's very-well-poised bilateral sum at monomial parameters."""
    started = time.perf_counter()
    upper, lower, z, num, den = _psi6_params(a, b, c, d, e, w)
    if z.v2 <= 0:
        raise ValueError(f"non-formal argument w a^2/(bcde) = {z!r}")
    if mutate_lhs is not None:
        upper, lower = mutate_lhs(upper, lower)
    rhs = poch_product(num, den, w, v_order)
    lhs = bilateral_sum(upper, lower, w, z, v_order)
    return compare_series(ident, lhs, rhs, v_order, started)
