"""Exact computations with affine Hall-Littlewood functions of type A_1^(1)."""

from .ring import IntPoly, RationalFunction, rf_reduce, rf_eval
from .qseries import QSeries, poch_inf, poch_int, bilateral_sum, sum_F
from .report import IdentityReport

__all__ = [
    "IntPoly",
    "RationalFunction",
    "rf_reduce",
    "rf_eval",
    "QSeries",
    "poch_inf",
    "poch_int",
    "bilateral_sum",
    "sum_F",
    "IdentityReport",
]

__version__ = "0.1.0"
