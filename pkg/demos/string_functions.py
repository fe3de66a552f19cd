"""t-string functions as q-series, and the same coefficients read off a Kostka table.

    python3 demos/string_functions.py
"""

from ahl.affine import weight
from ahl.hall import t_string, t_string_kostka

for lam, off in [(weight(1), (0, 0)), (weight(1, 1), (0, 0)), (weight(2), (0, 0)), (weight(2), (1, 0))]:
    s = t_string(lam, off, 6)
    print(f"{lam}, mu offset {off}")
    for e, c in s.items():
        print(f"    q^{e // 2}: {c}")
    print("    agrees with the Kostka route:", s == t_string_kostka(lam, off, 6))
