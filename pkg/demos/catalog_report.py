"""Check every catalog identity at a given order and print a table.

    python3 demos/catalog_report.py [order]
"""

import sys

from ahl.identities import verify_all

order = int(sys.argv[1]) if len(sys.argv) > 1 else 10
reports = verify_all(order)
for r in reports:
    where = "" if r.passed else f"  (first mismatch {r.first_mismatch})"
    print(f"{r.id:<16} {r.status}  {r.elapsed * 1000:7.1f} ms{where}")
print(f"{sum(r.passed for r in reports)}/{len(reports)} pass at order {order}")
