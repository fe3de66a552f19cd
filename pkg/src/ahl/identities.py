"""Catalog of identities checked to finite order.

Each entry builds both sides exactly.  Series in ``q`` or ``v`` are compared
through ``order`` and a mismatch is reported as a doubled exponent; series in
the cone are compared on the box ``order`` and a mismatch is reported as ``[m, n]``.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from fractions import Fraction

from .affine import DominantWeight, weight
from .formal import ConeSeries, delta_tilde, from_qseries, mu_kernel, theta
from .hall import character, hl_pi_route, t_string
from .qseries import (
    Monomial,
    QSeries,
    first_mismatch,
    poch_inf,
    qs_inv,
    qs_split_parity,
    sum_F,
    verify_1psi1,
    verify_6psi6,
)
from .report import IdentityReport
from .ring import ONE, T, RationalFunction

HALF = Fraction(1, 2)
_HALF_RF = RationalFunction(HALF)


def _P(exp, coef, order, step=1, var="q"):
    return poch_inf(exp, coef, step, order, var)


def _qmono(e2, order):
    return QSeries.monomial(ONE, e2, 2 * order)


# ---- q-series identities -------------------------------------------------


def _cher_ct_1(n):
    lhs = mu_kernel(n).ct()
    tq = _P(1, T, n)
    rhs = tq * tq / (_P(1, T * T, n) * _P(1, ONE, n))
    return lhs, rhs


def _cher_ct_2(n):
    lhs = (mu_kernel(n) * theta("1", n)).ct()
    return lhs, _P(1, T, n) / _P(1, T * T, n)


def _macd_l0(n):
    return delta_tilde(n).ct(), _P(1, T, n) / _P(1, T * T, n)


def _mm_l1(n):
    return t_string(weight(1), (0, 0), n), qs_inv(_P(1, T * T, n))


def _thm2(n):
    return t_string(weight(1, 1), (0, 0), n), qs_inv(_P(1, T, n) * _P(1, T * T, n, step=2))


def _cor_theta_r(n):
    lhs = (mu_kernel(n) * theta("R", n)).ct()
    return lhs, _P(1, ONE, n, step=2) / _P(1, T * T, n, step=2)


def _xi(n, sign_t, tpow=1):
    """``(sign * t^tpow * q^{1/2}; q)_inf``."""
    c = T**tpow if sign_t > 0 else -(T**tpow)
    return _P(HALF, c, n)


def _eta(n, sign):
    return _P(HALF, ONE if sign > 0 else -ONE, n)


def thm3_closed_forms(n):
    """Both level-2 string functions of ``2 Lambda_0`` from the half-grid closed forms."""
    m = n + 1
    xm, xp = _xi(m, -1), _xi(m, 1)
    p2 = _P(1, T * T, m)
    a1 = ((xm + xp).scale(_HALF_RF) / p2).truncate(2 * n)
    a2 = ((xm - xp).scale(_HALF_RF) / p2).shift(-1).truncate(2 * n)
    return a1, a2


def _thm3(part):
    def build(n):
        lam = weight(2)
        lhs = t_string(lam, (0, 0) if part == 1 else (1, 0), n)
        return lhs, thm3_closed_forms(n)[part - 1]

    return build


def _ctlev2_lhs(n, part):
    th = theta("2", n)
    if part == 2:
        th = th.shift(0, 1)
    return (mu_kernel(n) * th).ct()


def _ctlev2_printed(part):
    """Closed forms exactly as printed for ``ct(mu Theta_2)`` and ``ct(mu Theta_2 e^{-alpha_1})``."""

    def build(n):
        m = n + 2
        e, o = qs_split_parity(_xi(m, -1))
        e_eta, o_eta = qs_split_parity(_eta(m, -1))
        pre = _P(1, T, m) / _P(1, T * T, m)
        inv_1mq = qs_inv(QSeries({0: ONE, 2: -ONE}, 2 * m))
        if part == 1:
            rhs = _qmono(2, m) * inv_1mq * pre * ((o.shift(-1) - e) / e_eta)
        else:
            rhs = inv_1mq * pre * ((e - o.shift(1)) / o_eta.shift(-1))
        return _ctlev2_lhs(n, part), rhs.truncate(2 * n)

    return build


def ctlev2_solved_forms(n):
    """``ct(mu Theta_2)`` and ``ct(mu Theta_2 e^{-alpha_1})`` from the linear system
    relating them to the ``2 Lambda_0`` string functions at ``t`` and ``t = 1``."""
    m = n + 1
    e, o = qs_split_parity(_xi(m, -1))
    e_eta, o_eta = qs_split_parity(_eta(m, -1))
    pre = _P(1, T, m) / _P(1, T * T, m)
    q_q2 = _eta(m, 1) * _eta(m, -1)
    x = pre * ((e * e_eta - o * o_eta) / q_q2)
    y = pre * ((e_eta * o - o_eta * e).shift(1) / q_q2)
    return x.truncate(2 * n), y.truncate(2 * n)


def _ctlev2_solved(part):
    def build(n):
        return _ctlev2_lhs(n, part), ctlev2_solved_forms(n)[part - 1]

    return build


def _thm4(part):
    def build(n):
        off = (0, 0) if part == 1 else (1, 0)
        lhs = t_string(weight(3, 1), off, n)
        rhs = _P(1, -T, n) * t_string(weight(2), off, n)
        return lhs, rhs

    return build


def _ctlev4(part):
    def build(n):
        th4, th2 = theta("4", n), theta("2", n)
        if part == 2:
            th4, th2 = th4.shift(0, 1), th2.shift(0, 1)
        mu = mu_kernel(n)
        lhs = (mu * th4).ct()
        rhs = _P(1, -T, n) / _P(1, -ONE, n) * (mu * th2).ct()
        return lhs, rhs

    return build


def _hat_sys(n):
    d = delta_tilde(n)
    th2, th2h = theta("2", n), theta("2hat", n)
    pairs = [
        ((d * th2).ct(), (d * th2h).ct()),
        ((d * th2h.shift(1, 0)).ct(), (d * th2.shift(0, 1)).ct()),
    ]
    return _stack(pairs, n, "q")


# ---- cone identities ------------------------------------------------------


def hl_l1l1_closed_form(box):
    """``(-e^{-alpha_1}, -q e^{alpha_1}, -q, tq; q)_inf (t^2 q; q^2)_inf`` in the cone."""
    s = ConeSeries.one(box)
    for k in range(box + 1):
        s = s.mul_linear(ONE, ONE, (k, k + 1))
        s = s.mul_linear(ONE, ONE, (k + 1, k))
        s = s.mul_linear(ONE, ONE, (k + 1, k + 1))
        s = s.mul_linear(ONE, -T, (k + 1, k + 1))
        if 2 * k + 1 <= box:
            s = s.mul_linear(ONE, -T * T, (2 * k + 1, 2 * k + 1))
    return s


def _hl_l1l1(n):
    return hl_pi_route(weight(1, 1), n), hl_l1l1_closed_form(n)


def hl_2l0_coefficients(n):
    """The coefficients of ``Theta_2`` and ``e^{-alpha_0} hat Theta_2`` in ``e^{-2 Lambda_0} P_{2 Lambda_0}``."""
    m = n + 1
    f_plus = _eta(m, -1) / _xi(m, -1)
    f_minus = _eta(m, 1) / _xi(m, 1)
    tail = _P(1, T * T, m) / _P(1, ONE, m)
    alpha = ((f_plus + f_minus).scale(_HALF_RF) * tail).truncate(2 * n)
    beta = ((f_plus - f_minus).scale(_HALF_RF) * tail).shift(-1).truncate(2 * n)
    return alpha, beta


def _hl_2l0(n):
    alpha, beta = hl_2l0_coefficients(n)
    rhs = from_qseries(alpha, n) * theta("2", n) + from_qseries(beta, n) * theta("2hat", n).shift(1, 0)
    return hl_pi_route(weight(2), n), rhs


# ---- principal specializations ------------------------------------------


def _F_prefactor(n):
    v = "v"
    num = _P(1, T, n, 2, v) * _P(1, T, n, 2, v) * _P(2, T, n, 2, v)
    den = _P(1, ONE, n, 2, v) * _P(1, ONE, n, 2, v) * _P(2, ONE, n, 2, v)
    return num / den


def ps_from_sum(level, p, n, t_order=None):
    """``F(e^{-lambda} P_lambda)`` from the bilateral sum ``F^l_p``."""
    lam = DominantWeight(level, p)
    from .affine import stabilizer_poincare

    w = stabilizer_poincare(lam)
    out = (_F_prefactor(n) * sum_F(level, p, n, t_order)).scale(ONE / w)
    if t_order is not None:
        out = out.truncate_t(t_order)
    return out


def _ps_closed(level, p, n):
    v = "v"
    if (level, p) == (0, 0):
        return _P(2, T * T, n, 2, v) / _P(2, T, n, 2, v)
    if (level, p) == (1, 0):
        return _P(2, T * T, n, 2, v) / _P(1, ONE, n, 2, v)
    if (level, p) == (2, 1):
        num = _P(2, T, n, 2, v) * _P(2, T * T, n, 4, v)
        return num / (_P(1, ONE, n, 2, v) * _P(1, ONE, n, 2, v) * _P(2, -ONE, n, 2, v))
    if (level, p) == (2, 0):
        num = _P(1, T, n, 1, v) * _P(2, -T, n, 2, v)
        return num / (_P(1, ONE, n, 2, v) * _P(1, ONE, n, 2, v) * _P(1, -ONE, n, 2, v))
    if (level, p) == (4, 1):
        return _P(1, T, n, 1, v) / (_P(1, ONE, n, 2, v) * _P(1, ONE, n, 2, v))
    raise ValueError(f"no product formula for (l, p) = ({level}, {p})")


def _ps_eq(level, p, t_adic=False):
    def build(n):
        if t_adic:
            lhs = ps_from_sum(level, p, n, t_order=n)
            return lhs, _ps_closed(level, p, n).truncate_t(n)
        return ps_from_sum(level, p, n), _ps_closed(level, p, n)

    return build


PS_WEIGHTS = [weight(1), weight(1, 1), weight(2), weight(3), weight(3, 1)]


def character_ps_closed(lam, n):
    l, p = lam.level, lam.p
    v = "v"
    num = _P(p + 1, ONE, n, l + 2, v) * _P(l - p + 1, ONE, n, l + 2, v) * _P(l + 2, ONE, n, l + 2, v)
    return num / (_P(1, ONE, n, 2, v) * _P(1, ONE, n, 2, v) * _P(2, ONE, n, 2, v))


def _neg_poch(e, step, n):
    """``(-v^e; v^step)_inf``, allowing ``e = 0``."""
    if e == 0:
        return _P(step, -ONE, n, step, "v").scale(2)
    return _P(e, -ONE, n, step, "v")


def orbit_ps_closed(lam, n):
    l, p = lam.level, lam.p
    size = 2 if p in (0, l) else 1
    prod = _neg_poch(p, l, n) * _neg_poch(l - p, l, n) * _P(l, ONE, n, l, "v")
    return prod.scale(RationalFunction(Fraction(1, size)))


def _stack(pairs, n, var="v"):
    """Concatenate several comparisons into one pair of series."""
    width = 2 * n + 2
    lt, rt = {}, {}
    for i, (a, b) in enumerate(pairs):
        for e, c in a.terms.items():
            if e <= 2 * n:
                lt[e + i * width] = c
        for e, c in b.terms.items():
            if e <= 2 * n:
                rt[e + i * width] = c
    upto = (len(pairs) - 1) * width + 2 * n
    return QSeries(lt, upto, var), QSeries(rt, upto, var), upto


def _ps_eq14(n):
    pairs = [(character(lam, n).principal_spec(), character_ps_closed(lam, n)) for lam in PS_WEIGHTS]
    return _stack(pairs, n)


def _ps_eq15(n):
    from .affine import orbit_sum

    pairs = [(orbit_sum(lam, n).principal_spec(), orbit_ps_closed(lam, n)) for lam in PS_WEIGHTS]
    return _stack(pairs, n)


def _ps_2lops(n):
    lam = weight(2)
    ratio = character_ps_closed(lam, n) / _ps_closed(2, 0, n)
    # parity in v: halve the grid so that odd powers of v land on q^{1/2}
    even, odd = (part.rescale(2) for part in qs_split_parity(ratio.halve()))
    a1, a2 = (t_string(lam, off, n // 2 + 1) for off in ((0, 0), (1, 0)))
    rhs_even = a1.rescale(2).with_var("v").truncate(2 * n)
    rhs_odd = a2.rescale(2).with_var("v").shift(2).truncate(2 * n)
    return _stack([(even, rhs_even), (odd, rhs_odd)], n)


# ---- bilateral sums -----------------------------------------------------

M = Monomial

PSI1_CASES = [
    # the substitution that gives F^0_0
    dict(a=M(1, -1, 1), b=M(1, 1, 1), w=M(1, 0, 2), z=M(1, 1, 0), t_adic=True),
    dict(a=M(2, 1, 1), b=M(-1, 0, 3), w=M(1, 0, 2), z=M(1, 1, 1), t_adic=False),
]

PSI6_CASES = [
    dict(a=M(1, 0, 2), b=M(1, 0, 1), c=M(1, 0, 1), d=M(1, 0, 2), e=M(1, 0, 3), w=M(1, 0, 4)),
    dict(a=M(1, 0, 2), b=M(1, 0, 1), c=M(1, 0, 1), d=M(1, 0, 1), e=M(1, 0, 2), w=M(1, 0, 3)),
]


def _app_1psi1(n, mutate=None):
    for case in PSI1_CASES:
        r = verify_1psi1(case["a"], case["b"], case["w"], case["z"], n, n if case["t_adic"] else None, mutate)
        if not r.passed:
            return r.first_mismatch
    return None


def _app_6psi6(n, mutate=None):
    for case in PSI6_CASES:
        r = verify_6psi6(case["a"], case["b"], case["c"], case["d"], case["e"], case["w"], n, mutate)
        if not r.passed:
            return r.first_mismatch
    return None


# ---- registry -----------------------------------------------------------

BUILDERS = {
    "CHER_CT_1": _cher_ct_1,
    "CHER_CT_2": _cher_ct_2,
    "MACD_L0": _macd_l0,
    "MM_L1": _mm_l1,
    "THM2": _thm2,
    "COR_THETA_R": _cor_theta_r,
    "COR_HL_L1L1": _hl_l1l1,
    "THM3_1": _thm3(1),
    "THM3_2": _thm3(2),
    "COR_CTLEV2_1": _ctlev2_printed(1),
    "COR_CTLEV2_2": _ctlev2_printed(2),
    "CTLEV2_1_SOLVED": _ctlev2_solved(1),
    "CTLEV2_2_SOLVED": _ctlev2_solved(2),
    "COR_HL_2L0": _hl_2l0,
    "THM4_1": _thm4(1),
    "THM4_2": _thm4(2),
    "COR_CTLEV4_1": _ctlev4(1),
    "COR_CTLEV4_2": _ctlev4(2),
    "PS_EQ9": _ps_eq(0, 0, t_adic=True),
    "PS_EQ10": _ps_eq(1, 0),
    "PS_EQ11": _ps_eq(2, 1),
    "PS_EQ12": _ps_eq(2, 0),
    "PS_EQ13": _ps_eq(4, 1),
    "PS_EQ14": _ps_eq14,
    "PS_EQ15": _ps_eq15,
    "PS_2LOPS": _ps_2lops,
    "HAT_SYS": _hat_sys,
    "APP_1PSI1": _app_1psi1,
    "APP_6PSI6": _app_6psi6,
}

CATALOG = list(BUILDERS)

_OVERRIDES = {}


@contextmanager
def override(ident, mutate):
    """Temporarily replace the right side of ``ident`` by ``mutate(rhs)``."""
    if ident not in BUILDERS:
        raise KeyError(ident)
    old = _OVERRIDES.get(ident)
    _OVERRIDES[ident] = mutate
    try:
        yield
    finally:
        if old is None:
            _OVERRIDES.pop(ident, None)
        else:
            _OVERRIDES[ident] = old


def _compare(lhs, rhs, upto2):
    if isinstance(lhs, ConeSeries):
        return lhs.first_mismatch(rhs)
    return first_mismatch(lhs, rhs, upto2)


def verify_identity(ident, order, mutate=None) -> IdentityReport:
    """Check one catalog identity through ``order``.

    ``mutate`` (or an active :func:`override`) transforms the right side
    before comparison.  For the bilateral sums it receives and returns the
    ``(numerator, denominator)`` parameter lists of the sum or product side.
    """
    if ident not in BUILDERS:
        raise KeyError(f"unknown identity {ident!r}; valid: {', '.join(CATALOG)}")
    if order < 0:
        raise ValueError("order must be nonnegative")
    mutate = mutate or _OVERRIDES.get(ident)
    started = time.perf_counter()
    build = BUILDERS[ident]
    if ident.startswith("APP_"):
        mm = build(order, mutate)
    else:
        out = build(order)
        lhs, rhs = out[0], out[1]
        upto2 = out[2] if len(out) > 2 else 2 * order
        if mutate is not None:
            rhs = mutate(rhs)
        mm = _compare(lhs, rhs, upto2)
    elapsed = time.perf_counter() - started
    return IdentityReport(ident, order, "pass" if mm is None else "fail", mm, elapsed)


def verify_all(order, ids=None, threads=1):
    """Reports for the whole catalog (or ``ids``), in catalog order."""
    ids = CATALOG if ids is None else list(ids)
    if threads <= 1 or len(ids) <= 1:
        return [verify_identity(i, order) for i in ids]
    import multiprocessing as mp
    from concurrent.futures import ProcessPoolExecutor

    try:
        ctx = mp.get_context("fork")
    except ValueError:
        return [verify_identity(i, order) for i in ids]
    with ProcessPoolExecutor(max_workers=threads, mp_context=ctx) as pool:
        return list(pool.map(verify_identity, ids, [order] * len(ids)))
