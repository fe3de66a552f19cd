import pytest
import sympy as sp

from oracle import coeffs, poch, product, q, t, to_rf
from ahl.qseries import (
    Monomial as M,
    QSeries,
    bilateral_sum,
    first_mismatch,
    poch_inf,
    poch_int,
    qs_inv,
    qs_split_parity,
    sum_F,
    verify_1psi1,
    verify_6psi6,
)
from ahl.ring import ONE, T


def series(d, order, var="q"):
    return QSeries({int(2 * k): c for k, c in d.items()}, 2 * order, var)


def oracle_series(expr, order):
    return QSeries.from_coeffs([to_rf(c) for c in coeffs(expr, order)], order)


def test_mul_truncates():
    a = series({0: 1, 1: 1}, 2)
    b = series({0: 1, 1: -1}, 2)
    assert a * b == series({0: 1, 2: -1}, 2)


def test_half_grid_square():
    a = series({0: ONE, 0.5: T}, 1)
    assert a * a == series({0: ONE, 0.5: 2 * T, 1: T * T}, 1)


def test_variable_mismatch():
    with pytest.raises(ValueError, match="variable mismatch"):
        QSeries.one(4, "q") + QSeries.one(4, "v")


def test_inverse_geometric():
    assert qs_inv(series({0: 1, 1: -1}, 3)) == series({k: 1 for k in range(4)}, 3)
    assert qs_inv(series({0: ONE, 1: -T}, 2)) == series({0: ONE, 1: T, 2: T * T}, 2)
    with pytest.raises(ZeroDivisionError, match="non-unit series"):
        qs_inv(QSeries.zero(6))
    # a nonzero lowest term away from q^0 gives a Laurent inverse
    assert qs_inv(series({1: 1}, 3)) == series({-1: 1}, 1)


def test_poch_inf_examples():
    assert poch_inf(1, T, 1, 2) == series({0: ONE, 1: -T, 2: -T}, 2)
    assert poch_inf(1, -1, 1, 3) == series({0: 1, 1: 1, 2: 1, 3: 2}, 3)
    assert poch_inf(1, T * T, 2, 2) == series({0: ONE, 1: -T * T}, 2)
    with pytest.raises(ValueError, match="non-formal Pochhammer argument"):
        poch_inf(0, T, 1, 3)


@pytest.mark.parametrize("order", [6, 10])
def test_poch_inf_matches_oracle(order):
    ours = poch_inf(1, T, 1, order) * qs_inv(poch_inf(2, -T, 2, order))
    expr = product(poch(t * q, q, order) + poch(-t * q**2, q**2, order, inverse=True), order)
    assert ours == oracle_series(expr, order)


def test_poch_int():
    assert poch_int(1, T, 1, 0, 4) == QSeries.one(8)
    assert poch_int(1, T, 1, 2, 4) == series({0: ONE, 1: -T, 2: -T, 3: T * T}, 4)
    assert poch_int(2, T, 1, -1, 4) == qs_inv(series({0: ONE, 1: -T}, 4))


def test_split_parity():
    e, o = qs_split_parity(series({0: 1, 0.5: 1, 1: 1}, 2))
    assert e == series({0: 1, 1: 1}, 2) and o == series({0.5: 1}, 2)
    x = poch_inf(0.5, -T, 1, 6)
    e, o = qs_split_parity(x)
    assert e + o == x
    assert qs_split_parity(e)[0] == e and not qs_split_parity(e)[1].terms


def test_first_mismatch_reports_doubled_exponent():
    a = series({0: 1, 1: 2}, 3)
    b = series({0: 1, 1: 3}, 3)
    assert first_mismatch(a, b, 6) == 2
    assert first_mismatch(a, a, 6) is None
    with pytest.raises(ValueError):
        first_mismatch(a, b, 8)


def test_bilateral_j0_term():
    # with z of high valuation only j = 0 survives
    s = bilateral_sum([M(1, 0, 1)], [M(1, 0, 2)], M(1, 0, 2), M(1, 0, 50), 10)
    assert s == QSeries.one(20, "v")


def test_sum_F_p_range():
    with pytest.raises(ValueError):
        sum_F(2, 3, 5)
    with pytest.raises(ValueError):
        sum_F(0, 0, 5)


def test_sum_F_level2_direct_expansion():
    # for l=2, p=1 the j and -j terms coincide, so
    # F = 1 + 2 sum_{j>0} v^(j^2) t^j prod_{i<j} (1 - v^(2i+1)/t)/(1 - t v^(2i+1))
    n = 12
    expr = sp.Integer(1)
    j = 1
    while j * j <= n:
        fs = []
        for i in range(j):
            fs += [(q ** (2 * i + 1) / t, False), (t * q ** (2 * i + 1), True)]
        expr += 2 * q ** (j * j) * t**j * product(fs, n - j * j)
        j += 1
    assert sum_F(2, 1, n).with_var("q") == oracle_series(expr, n)


def test_1psi1_substitution_and_unilateral():
    assert verify_1psi1(M(1, -1, 1), M(1, 1, 1), M(1, 0, 2), M(1, 1, 0), 12, 12).passed
    assert verify_1psi1(M(1, 0, 1), M(1, 0, 2), M(1, 0, 2), M(1, 0, 3), 12).passed


def test_1psi1_mutated_rhs_fails():
    def mutate(num, den):
        num = list(num)
        num[2] = num[2] * M(1, -1, 1)  # az -> a^2 z
        return num, den

    r = verify_1psi1(M(1, -1, 1), M(1, 1, 1), M(1, 0, 2), M(1, 1, 0), 12, 12, mutate_rhs=mutate)
    assert r.status == "fail" and r.first_mismatch == 2


PSI6 = dict(a=M(1, 0, 2), b=M(1, 0, 1), c=M(1, 0, 1), d=M(1, 0, 2), e=M(1, 0, 3), w=M(1, 0, 4))


def test_6psi6_admissible_cases():
    assert verify_6psi6(**PSI6, v_order=20).passed
    alt = dict(a=M(1, 0, 2), b=M(1, 0, 1), c=M(1, 0, 1), d=M(1, 0, 1), e=M(1, 0, 2), w=M(1, 0, 3))
    assert verify_6psi6(**alt, v_order=20).passed


def test_6psi6_symmetric_in_bcde():
    base = dict(a=M(1, 0, 2), w=M(1, 0, 4))
    vals = [M(1, 0, 1), M(1, 0, 1), M(1, 0, 2), M(1, 0, 3)]
    r1 = verify_6psi6(b=vals[0], c=vals[1], d=vals[2], e=vals[3], **base, v_order=16)
    r2 = verify_6psi6(b=vals[3], c=vals[2], d=vals[1], e=vals[0], **base, v_order=16)
    assert (r1.status, r1.first_mismatch) == (r2.status, r2.first_mismatch) == ("pass", None)


def test_6psi6_dropping_a_parameter_fails():
    r = verify_6psi6(**PSI6, v_order=20, mutate_lhs=lambda u, l: (u[:1] + u[2:], l))
    assert r.status == "fail" and r.first_mismatch == 12


def test_6psi6_documented_example_is_not_formal():
    with pytest.raises(ValueError, match="non-formal"):
        verify_6psi6(M(1, 0, 4), M(1, 0, 1), M(1, 0, 2), M(1, 0, 3), M(1, 0, 3), M(1, 0, 2), 10)
