"""The root system of A_1^(1): weights, the infinite dihedral Weyl group, orbits.

A dominant weight is carried as ``(level, p, dshift)`` with ``p = (lambda, alpha_0)``
and ``level - p = (lambda, alpha_1)``; everything here only needs these
pairings and offsets ``lambda - mu = m*alpha_0 + n*alpha_1`` in the root lattice.
The form is normalized so ``(alpha_i, alpha_i) = 2`` and ``(alpha_0, alpha_1) = -2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .ring import ONE, T, RationalFunction

__all__ = [
    "RootVector",
    "DominantWeight",
    "weight",
    "RHO",
    "weyl_word",
    "weyl_S",
    "weyl_act",
    "weyl_compose",
    "orbit_offsets",
    "orbit_sum",
    "stabilizer_poincare",
    "dominant_below",
    "positive_roots",
]


class RootVector(NamedTuple):
    m: int
    n: int

    @property
    def ht(self):
        return self.m + self.n

    def form(self, other):
        """Bilinear form on the root lattice."""
        return 2 * (self.m - self.n) * (other[0] - other[1])

    def __str__(self):
        return f"({self.m},{self.n})"


DELTA = RootVector(1, 1)


@dataclass(frozen=True)
class DominantWeight:
    level: int
    p: int
    dshift: int = 0

    def __post_init__(self):
        if self.level < 0 or not 0 <= self.p <= self.level:
            raise ValueError(f"weight (level={self.level}, p={self.p}) is not dominant")

    @property
    def q(self):
        """``(lambda, alpha_1)``."""
        return self.level - self.p

    def pair(self, root):
        """``(lambda, m*alpha_0 + n*alpha_1)``."""
        return root[0] * self.p + root[1] * self.q

    def __add__(self, other):
        return DominantWeight(self.level + other.level, self.p + other.p, self.dshift + other.dshift)

    def minus(self, offset):
        """``lambda - m*alpha_0 - n*alpha_1`` (must be dominant)."""
        m, n = offset
        return DominantWeight(self.level, self.p - 2 * m + 2 * n, self.dshift + m)

    def __str__(self):
        return f"{self.p}Λ0+{self.q}Λ1 (l={self.level}, p={self.p}, dshift={self.dshift})"


def weight(a0, a1=0, dshift=0):
    """``a0*Lambda_0 + a1*Lambda_1 - dshift*delta``."""
    return DominantWeight(a0 + a1, a0, dshift)


RHO = weight(1, 1)
ZERO_WEIGHT = DominantWeight(0, 0)


def weyl_word(j):
    """Reduced word of ``w_j`` as reflection indices, leftmost letter first."""
    first = 0 if j > 0 else 1
    return [(first + i) % 2 for i in range(abs(j))]


def weyl_S(j):
    """Inversion set ``S(w_j)`` as root vectors."""
    if j > 0:
        return [RootVector(k + 1, k) for k in range(j)]
    return [RootVector(k, k + 1) for k in range(-j)]


def _reflect(i, level, p, offset):
    m, n = offset
    if i == 0:
        return RootVector(m + p - 2 * m + 2 * n, n)
    return RootVector(m, n + (level - p) + 2 * m - 2 * n)


def act_word(word, level, p, offset=(0, 0)):
    """Offset ``lambda - w(lambda - offset)`` for ``w`` given by ``word``."""
    off = RootVector(*offset)
    for i in reversed(word):
        off = _reflect(i, level, p, off)
    return off


def weyl_act(j, lam: DominantWeight) -> RootVector:
    """``lambda - w_j(lambda)`` as a root vector."""
    return act_word(weyl_word(j), lam.level, lam.p)


def _reduce_word(word):
    out = []
    for i in word:
        if out and out[-1] == i:
            out.pop()
        else:
            out.append(i)
    return out


def weyl_compose(k, j):
    """Index of ``w_k w_j``."""
    word = _reduce_word(weyl_word(k) + weyl_word(j))
    if not word:
        return 0
    return len(word) if word[0] == 0 else -len(word)


def j_bound(level, box):
    """Largest ``|j|`` with ``lambda - w_j(lambda)`` possibly inside the box.

    The height of that offset is ``sum (lambda, gamma)`` over the inversion set
    of ``w_j^{-1}``, which is at least ``level * C(|j|, 2)``.
    """
    if level == 0:
        raise ValueError("every w_j fixes a level-0 weight")
    n = 0
    while level * (n + 1) * n // 2 <= 2 * box:
        n += 1
    return n


def _j_range(lam: DominantWeight, box):
    if lam.level == 0:
        return [0]
    b = j_bound(lam.level, box)
    return list(range(-b, b + 1))


def orbit_offsets(lam: DominantWeight, box):
    """Distinct offsets ``lambda - w(lambda)`` with both coordinates ``<= box``."""
    seen = set()
    for j in _j_range(lam, box):
        off = weyl_act(j, lam)
        if off.m <= box and off.n <= box:
            seen.add(off)
    return sorted(seen)


def orbit_sum(lam: DominantWeight, box):
    """``e^{-lambda} m_lambda`` on the box."""
    from .formal import ConeSeries

    return ConeSeries({off: ONE for off in orbit_offsets(lam, box)}, box)


def stabilizer_poincare(lam: DominantWeight, t_order=None):
    """Poincare series ``sum_{w in W_lambda} t^len(w)``."""
    if lam.level == 0:
        f = (ONE + T) / (ONE - T)
    elif lam.p == 0 or lam.q == 0:
        f = ONE + T
    else:
        f = ONE
    if t_order is not None:
        return f.truncate_t(t_order)
    return f


def stabilizer_by_enumeration(lam: DominantWeight, max_len):
    """Same series, summed over ``w_j`` with ``|j| <= max_len`` fixing ``lambda``."""
    coeffs = [0] * (max_len + 1)
    for j in range(-max_len, max_len + 1):
        if weyl_act(j, lam) == (0, 0):
            coeffs[abs(j)] += 1
    from .ring import IntPoly

    return RationalFunction(IntPoly(coeffs))


@dataclass(frozen=True)
class BelowEntry:
    weight: DominantWeight
    offset: RootVector
    is_max: bool


def dominant_below(lam: DominantWeight, depth):
    """Dominant ``mu = lambda - m*alpha_0 - n*alpha_1`` with ``m + n <= depth``.

    Sorted by height of the offset, then by ``m``.  ``is_max`` marks
    membership in ``Max(lambda)``: ``mu + delta`` is not below ``lambda``.
    """
    out = []
    for h in range(depth + 1):
        for m in range(h + 1):
            n = h - m
            if lam.p - 2 * m + 2 * n < 0 or lam.q + 2 * m - 2 * n < 0:
                continue
            off = RootVector(m, n)
            out.append(BelowEntry(lam.minus(off), off, m == 0 or n == 0))
    return out


def positive_roots(box, real=True, imaginary=True):
    """Positive roots ``(m, n)`` with both coordinates ``<= box``."""
    out = []
    for k in range(box + 1):
        if real:
            if k + 1 <= box:
                out.append(RootVector(k + 1, k))
                out.append(RootVector(k, k + 1))
        if imaginary and k >= 1:
            out.append(RootVector(k, k))
    return out
