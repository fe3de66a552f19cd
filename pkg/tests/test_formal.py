import json

import pytest

from ahl.affine import RHO, weyl_act
from ahl.formal import (
    ConeSeries,
    cs_inv,
    delta_tilde,
    delta_tilde_im,
    delta_tilde_inv,
    from_qseries,
    mu_kernel,
    theta,
)
from ahl.qseries import QSeries
from ahl.ring import ONE, T, ZERO


def test_geometric_inverse():
    a = ConeSeries({(0, 0): ONE, (1, 0): -T}, 4)
    inv = cs_inv(a)
    assert inv == ConeSeries({(k, 0): T**k for k in range(5)}, 4)
    assert a * inv == ConeSeries.one(4)
    with pytest.raises(ZeroDivisionError):
        cs_inv(ConeSeries({(1, 0): ONE}, 3))


def test_box_bounds():
    s = ConeSeries.one(3)
    assert s[(3, 3)] == ZERO
    with pytest.raises(IndexError):
        s[(4, 0)]
    with pytest.raises(ValueError):
        ConeSeries({(-1, 0): ONE}, 3)
    with pytest.raises(ValueError):
        s + ConeSeries.one(4)


def test_delta_tilde_specializations():
    box = 6
    assert delta_tilde(box, t=1) == ConeSeries.one(box)
    # at t = 0 it is the affine Weyl denominator: an alternating sum over the orbit of rho
    weyl = {}
    for j in range(-6, 7):
        off = weyl_act(j, RHO)
        if off.m <= box and off.n <= box:
            weyl[off] = ONE if j % 2 == 0 else -ONE
    assert delta_tilde(box, t=0) == ConeSeries(weyl, box)


def test_delta_tilde_factorization():
    box = 5
    assert delta_tilde(box) == mu_kernel(box) * from_qseries(delta_tilde_im(box), box)
    assert delta_tilde(box) * delta_tilde_inv(box) == ConeSeries.one(box)


def test_theta_relations():
    box = 8
    t1, t2 = theta("1", box), theta("2", box)
    doubled = {(2 * m, 2 * n): c for (m, n), c in t1.terms.items() if 2 * m <= box and 2 * n <= box}
    assert t2 == ConeSeries(doubled, box)
    assert theta("2hat", box) == t2.hat()
    # Theta_R has one term per triangular pair
    assert set(theta("R", box).terms) == {(j * (j + 1) // 2, j * (j - 1) // 2) for j in range(-5, 6)
                                          if abs(j) * (abs(j) + 1) // 2 <= box}
    with pytest.raises(ValueError):
        theta("9", box)


def test_ct_and_principal_spec():
    s = ConeSeries({(0, 0): ONE, (1, 1): T, (2, 0): ONE, (1, 0): 2}, 3)
    assert s.ct() == QSeries({0: ONE, 2: T}, 6)
    assert s.principal_spec() == QSeries({0: ONE, 2: 2, 4: ONE + T}, 6, "v")


def test_from_qseries_rejects_half_powers():
    with pytest.raises(ValueError):
        from_qseries(QSeries({1: ONE}, 8), 4)
    with pytest.raises(ValueError):
        from_qseries(QSeries({0: ONE}, 2), 4)


def test_json_round_trip():
    s = delta_tilde(3)
    doc = json.loads(s.to_json())
    assert ConeSeries.from_dict(doc) == s
    assert json.dumps(ConeSeries.from_dict(doc).to_dict()) == s.to_json()


def test_first_mismatch_order():
    a = ConeSeries.one(3)
    b = ConeSeries({(0, 0): ONE, (2, 0): ONE, (1, 0): ONE}, 3)
    assert a.first_mismatch(b) == [1, 0]
    assert a.first_mismatch(a) is None
