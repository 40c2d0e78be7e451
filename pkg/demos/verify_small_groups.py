"""
Exhaustive verification sweep
=============================

Run every suite on a few desk-sized groups and print the summary line
of each report.
"""

from altperm import GroupParams
from altperm.oracle import run_suite

for r, n in [(2, 3), (6, 2), (6, 3), (10, 2)]:
    report = run_suite(GroupParams(r, n), ["all"])
    last = report.render().splitlines()[-1].strip()
    print(f"{str(report.params):14} {last}")
