"""Hall-Littlewood functions, characters, Kostka-Foulkes tables and t-string functions.

Everything is normalized by ``e^{-lambda}``, so series live in the cone of
``x0 = e^{-alpha_0}``, ``x1 = e^{-alpha_1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .affine import (
    DominantWeight,
    RootVector,
    act_word,
    dominant_below,
    j_bound,
    positive_roots,
    stabilizer_poincare,
    weyl_act,
    weyl_S,
    weyl_word,
)
from .formal import ConeSeries
from .qseries import QSeries
from .ring import ONE, ZERO, T, RationalFunction, rf_eval

_rf = RationalFunction.coerce


def _t(t):
    return T if t is None else _rf(t)


def _poincare(lam, t):
    w = stabilizer_poincare(lam)
    if t is None:
        return w
    return _rf(rf_eval(w, t))


def _in_box(off, box):
    return off[0] <= box and off[1] <= box


def _times_delta_inv(s: ConeSeries, tt):
    """Multiply by ``prod_{alpha>0} (1 - t e^{-alpha})/(1 - e^{-alpha})``."""
    for y in positive_roots(s.box):
        s = s.mul_linear(ONE, -tt, y).div_linear(ONE, -ONE, y)
    return s


def hl_pi_route(lam: DominantWeight, box, t=None) -> ConeSeries:
    """``e^{-lambda} P_lambda`` as a sum over the Weyl group of ``pi(w)`` factors."""
    if lam.level == 0:
        raise ValueError("level-0 Hall-Littlewood not supported; use ct/specialization routes")
    tt = _t(t)
    total = ConeSeries.one(box)
    jb = j_bound(lam.level, box)
    for sign in (1, -1):
        pi = ConeSeries.one(box)
        for n in range(1, jb + 1):
            y = (n, n - 1) if sign > 0 else (n - 1, n)
            pi = pi.mul_linear(tt, -ONE, y).div_linear(ONE, -tt, y)
            off = weyl_act(sign * n, lam)
            if _in_box(off, box):
                total = total + pi.shift(*off)
    total = _times_delta_inv(total, tt)
    return total.scale(ONE / _poincare(lam, t))


def _weyl_numerator_term(j, lam, box, tt, t_order):
    """``(-1)^|j| e^{w(lambda+rho)-(lambda+rho)} prod_{S(w)} (1 - t e^gamma)`` restricted to the box."""
    off = act_word(weyl_word(j), lam.level + 2, lam.p + 1)
    gammas = weyl_S(j)
    rem = [0, 0]
    for g in gammas:
        rem[0] += g[0]
        rem[1] += g[1]
    terms = {off: ONE if j % 2 == 0 else -ONE}
    for g in gammas:
        rem[0] -= g[0]
        rem[1] -= g[1]
        nxt = {}
        for (m, n), c in terms.items():
            for (mm, nn), cc in (((m, n), c), ((m - g[0], n - g[1]), -tt * c)):
                if not cc or mm - rem[0] > box or nn - rem[1] > box:
                    continue
                if t_order is not None:
                    cc = cc.truncate_t(t_order)
                    if not cc:
                        continue
                s = nxt.get((mm, nn))
                s = cc if s is None else s + cc
                if s:
                    nxt[(mm, nn)] = s
                else:
                    nxt.pop((mm, nn), None)
        terms = nxt
    for (m, n) in terms:
        if m < 0 or n < 0:
            raise AssertionError("Weyl numerator term left the positive cone")
    s = ConeSeries(terms, box)
    for g in gammas:
        s = s.div_linear(ONE, -tt, g)
    return s


def hl_weyl_route(lam: DominantWeight, box, t=None, t_order=None) -> ConeSeries:
    """``e^{-lambda} P_lambda`` from the Weyl-Kac style formula with the ``lambda + rho`` numerator.

    At level 0 and symbolic ``t`` the sum over ``W`` is infinite; ``t_order``
    must be given and the result is a ``t``-adic truncation.
    """
    tt = _t(t)
    if t is not None and not tt:
        jb = j_bound(lam.level + 2, box)
    elif lam.level > 0:
        jb = j_bound(lam.level, box)
    else:
        if t_order is None:
            raise ValueError("level-0 Weyl route needs a t-adic order")
        jb = t_order + 2 * box
    total = ConeSeries(None, box)
    for j in range(-jb, jb + 1):
        total = total + _weyl_numerator_term(j, lam, box, tt, t_order)
    total = _times_delta_inv(total, tt)
    total = total.scale(ONE / _poincare(lam, t))
    if t_order is not None:
        total = total.map_coeffs(lambda c: c.truncate_t(t_order))
    return total


def character(lam: DominantWeight, box) -> ConeSeries:
    """``e^{-lambda} chi_lambda``: the Weyl route at ``t = 0``."""
    return hl_weyl_route(lam, box, t=0)


def delta_character(lam: DominantWeight, box, t=None) -> ConeSeries:
    """``e^{-lambda} Delta~ chi_lambda`` straight from the Weyl-Kac numerator."""
    tt = _t(t)
    jb = j_bound(lam.level + 2, box)
    terms = {}
    for j in range(-jb, jb + 1):
        off = act_word(weyl_word(j), lam.level + 2, lam.p + 1)
        if _in_box(off, box):
            terms[off] = terms.get(off, ZERO) + (ONE if j % 2 == 0 else -ONE)
    s = ConeSeries(terms, box)
    for y in positive_roots(box):
        s = s.div_linear(ONE, -tt, y)
    return s


class FreudenthalTable:
    """Weight multiplicities of ``L(lambda)`` by Freudenthal's recursion."""

    def __init__(self, lam: DominantWeight):
        self.lam = lam
        self.cache = {(0, 0): 1}
        self.height = 0

    def _compute(self, m, n):
        lam = self.lam
        l, p = lam.level, lam.p
        denom = 2 * (m * (p + 1) + n * (l - p + 1)) - 2 * (m - n) ** 2
        rhs = 0
        for a, b in positive_roots(max(m, n)):
            if a > m or b > n:
                continue
            k = 1
            while m - k * a >= 0 and n - k * b >= 0:
                g0, g1 = m - k * a, n - k * b
                mult = self.cache.get((g0, g1), 0)
                if mult:
                    rhs += mult * (a * p + b * (l - p) - 2 * (g0 - g1) * (a - b))
                k += 1
        rhs *= 2
        if denom == 0:
            if rhs:
                raise ArithmeticError("Freudenthal degeneracy")
            return 0
        if rhs % denom:
            raise ArithmeticError("Freudenthal recursion produced a non-integer multiplicity")
        return rhs // denom

    def mult(self, m, n):
        if m < 0 or n < 0:
            raise ValueError("offset must lie in the positive cone")
        while self.height < m + n:
            self.height += 1
            h = self.height
            for a in range(h + 1):
                v = self._compute(a, h - a)
                if v:
                    self.cache[(a, h - a)] = v
        return self.cache.get((m, n), 0)


_FREUDENTHAL = {}


def freudenthal_mult(lam: DominantWeight, offset) -> int:
    """``dim L(lambda)_{lambda - offset}``."""
    key = (lam.level, lam.p)
    tab = _FREUDENTHAL.get(key)
    if tab is None:
        tab = _FREUDENTHAL[key] = FreudenthalTable(DominantWeight(lam.level, lam.p))
    return tab.mult(*offset)


@dataclass
class KostkaTable:
    lam: DominantWeight
    depth: int
    entries: dict = field(default_factory=dict)
    offsets: dict = field(default_factory=dict)
    residual: ConeSeries = None

    def rows(self):
        """``(offset, weight, K)`` in solve order."""
        return [(self.offsets[mu], mu, k) for mu, k in self.entries.items()]

    def negative_coefficients(self):
        """Entries with a negative coefficient (none are expected)."""
        return [mu for mu, k in self.entries.items() if any(c < 0 for _, c in k.num.terms())]


def kostka_table(lam: DominantWeight, depth, box=None) -> KostkaTable:
    """Solve ``chi_lambda = sum K_{lambda mu}(t) P_mu`` over dominant ``mu`` down to ``depth``."""
    if not isinstance(lam, DominantWeight):
        raise TypeError("kostka_table needs a DominantWeight")
    if lam.level == 0:
        raise ValueError("level-0 Hall-Littlewood not supported; use ct/specialization routes")
    box = depth if box is None else box
    if box < depth:
        raise ValueError("box must be at least the depth")
    resid = character(lam, box)
    hl_cache = {}
    table = KostkaTable(lam, depth)
    for entry in dominant_below(lam, depth):
        off = entry.offset
        k = resid[off]
        mu = entry.weight
        if not k.is_polynomial():
            raise AssertionError(f"Kostka entry at {off} is not a polynomial: {k}")
        table.entries[mu] = k
        table.offsets[mu] = off
        if not k:
            continue
        pm = hl_cache.get(mu.p)
        if pm is None:
            pm = hl_cache[mu.p] = hl_pi_route(DominantWeight(lam.level, mu.p), box)
        resid = resid - pm.shift(*off).scale(k)
    table.residual = resid
    return table


def _check_max(lam, off):
    m, n = off
    if m < 0 or n < 0 or (m and n):
        raise ValueError(f"offset {tuple(off)} is not in Max(lambda)")
    if lam.p - 2 * m + 2 * n < 0 or lam.level - lam.p + 2 * m - 2 * n < 0:
        raise ValueError(f"offset {tuple(off)} is not in Max(lambda): weight is not dominant")


def t_string(lam: DominantWeight, mu_offset, order, t=None) -> QSeries:
    """``a^lambda_mu(t, q) = ct(e^{-mu} Delta~ chi_lambda)`` through ``q^order``."""
    off = RootVector(*mu_offset)
    _check_max(lam, off)
    box = order + max(off)
    d = delta_character(lam, box, t)
    return QSeries({2 * k: d[(k + off.m, k + off.n)] for k in range(order + 1)}, 2 * order, "q")


def t_string_kostka(lam: DominantWeight, mu_offset, order) -> QSeries:
    """The same generating function read off a Kostka table."""
    off = RootVector(*mu_offset)
    _check_max(lam, off)
    tab = kostka_table(lam, order * 2 + off.m + off.n)
    by_off = {o: k for mu, k in tab.entries.items() for o in [tab.offsets[mu]]}
    return QSeries({2 * k: by_off.get((off.m + k, off.n + k), ZERO) for k in range(order + 1)}, 2 * order, "q")
