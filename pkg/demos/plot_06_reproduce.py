"""
Reproduction table
==================

Every quoted number recomputed in one go. Same table as
``susy-hbs reproduce``.
"""
from susy_hbs.reproduce import reproduce_all

rows = reproduce_all()
for r in rows:
    print(r.format())
print(f"{sum(r.passed for r in rows)}/{len(rows)} rows pass")
