"""Kostka-Foulkes polynomials for 2*Lambda_0 and a check against weight multiplicities.

    python3 demos/kostka_tour.py
"""

from ahl.affine import weight
from ahl.hall import freudenthal_mult, kostka_table

lam = weight(2)
table = kostka_table(lam, 8)
print(f"lambda = {lam}")
print(f"{'offset':>8}  {'K(t)':<40} K(1)  mult")
for off, mu, k in table.rows():
    print(f"{str(off):>8}  {str(k):<40} {str(k(1)):>4}  {freudenthal_mult(lam, off):>4}")
print("negative coefficients:", table.negative_coefficients() or "none")
