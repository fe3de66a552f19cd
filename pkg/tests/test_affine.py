import pytest

from ahl.affine import (
    DominantWeight,
    RootVector,
    dominant_below,
    j_bound,
    orbit_offsets,
    positive_roots,
    stabilizer_by_enumeration,
    stabilizer_poincare,
    weight,
    weyl_act,
    weyl_compose,
    weyl_S,
    weyl_word,
)
from ahl.ring import ONE, T


def test_weight_coordinates():
    lam = weight(3, 1)
    assert (lam.level, lam.p, lam.q) == (4, 3, 1)
    assert lam.pair((1, 0)) == 3 and lam.pair((0, 1)) == 1
    with pytest.raises(ValueError):
        DominantWeight(2, 3)


def test_minus():
    lam = weight(2)
    mu = lam.minus((1, 0))
    assert (mu.level, mu.p, mu.dshift) == (2, 0, 1)
    assert lam.minus((1, 1)) == DominantWeight(2, 2, 1)


def test_inversion_sets():
    assert weyl_S(0) == []
    assert weyl_S(2) == [(1, 0), (2, 1)]
    assert weyl_S(-1) == [(0, 1)]


def test_words():
    assert weyl_word(0) == []
    assert weyl_word(3) == [0, 1, 0]
    assert weyl_word(-2) == [1, 0]


def test_action_examples():
    assert weyl_act(0, weight(1)) == (0, 0)
    # r0 Lambda_0 = Lambda_0 - alpha_0
    assert weyl_act(1, weight(1)) == (1, 0)
    assert weyl_act(-1, weight(1)) == (0, 0)
    # w_2 Lambda_0 = Lambda_0 - 2 alpha_0 - alpha_1 ... up to level scaling
    assert weyl_act(2, weight(1)) == (1, 0)
    assert weyl_act(3, weight(1)) == (4, 2)


def test_height_lower_bound_used_by_j_bound():
    for lam in [weight(1), weight(1, 1), weight(2), weight(3, 1), weight(0, 4)]:
        for j in range(-8, 9):
            off = weyl_act(j, lam)
            assert off.ht >= lam.level * abs(j) * (abs(j) - 1) // 2
    assert j_bound(1, 0) == 1
    with pytest.raises(ValueError):
        j_bound(0, 3)


def test_compose():
    assert weyl_compose(1, 1) == 0
    assert weyl_compose(1, -1) == 2
    assert weyl_compose(-1, 2) == -3
    assert weyl_compose(2, -2) == 0
    assert weyl_compose(2, 2) == 4


@pytest.mark.parametrize(
    "lam, expected",
    [(weight(1, 1), ONE), (weight(2), ONE + T), (DominantWeight(0, 0), (ONE + T) / (ONE - T))],
)
def test_stabilizer(lam, expected):
    assert stabilizer_poincare(lam) == expected


def test_stabilizer_enumeration():
    assert stabilizer_by_enumeration(weight(2), 3) == ONE + T
    assert stabilizer_by_enumeration(DominantWeight(0, 0), 3) == 1 + 2 * T + 2 * T**2 + 2 * T**3
    assert stabilizer_poincare(DominantWeight(0, 0), 3) == 1 + 2 * T + 2 * T**2 + 2 * T**3


def test_orbit_of_zero():
    assert orbit_offsets(DominantWeight(0, 0), 5) == [(0, 0)]


def test_dominant_below_order_and_max():
    rows = dominant_below(weight(2), 4)
    assert [tuple(e.offset) for e in rows] == [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]
    assert [e.is_max for e in rows] == [True, True, False, False, False]
    assert all(e.weight.p >= 0 and e.weight.q >= 0 for e in rows)


def test_positive_roots():
    roots = positive_roots(2)
    assert set(roots) == {(1, 0), (0, 1), (2, 1), (1, 2), (1, 1), (2, 2)}
    assert RootVector(2, 1).form((2, 1)) == 2 and RootVector(1, 1).form((1, 0)) == 0


@pytest.mark.parametrize(
    "lam, expected",
    [(weight(1, 1), [(0, 0)]), (weight(2), [(0, 0), (1, 0)]), (weight(3, 1), [(0, 0), (1, 0)])],
    ids=str,
)
def test_max_sets(lam, expected):
    assert [tuple(e.offset) for e in dominant_below(lam, 10) if e.is_max] == expected


def test_rho_orbit_offsets():
    # rho - w_j rho = j alpha_0 + C(j, 2) delta for j >= 0, and the alpha_1 analogue for j < 0
    for j in range(0, 3):
        c = j * (j - 1) // 2
        assert weyl_act(j, weight(1, 1)) == (j + c, c)
    for j in range(-2, 0):
        k = -j
        c = k * (k - 1) // 2
        assert weyl_act(j, weight(1, 1)) == (c, k + c)
