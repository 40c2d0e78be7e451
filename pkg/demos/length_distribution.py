"""
Length distributions in A(r, n)
===============================

Compare the product formulas with brute-force enumeration and look at
how the length splits over the covering A(r, n) -> G(r/2, n).
"""

import numpy as np

from altperm import GroupParams, enumerate_alternating, length_LA
from altperm.covering import fibral_length, length_g, project
from altperm.qseries import STATISTICS, genfun_bruteforce, genfun_formula

params = GroupParams(6, 3)

for stat in STATISTICS:
    formula = genfun_formula(params, stat)
    match = formula == genfun_bruteforce(params, stat)
    print(f"{stat:7} {'MATCH' if match else 'MISMATCH'}  {formula}")

# every length is a base length downstairs plus an even fibral part
rows = np.array([
    (length_LA(pi), length_g(project(pi)), fibral_length(pi))
    for pi in enumerate_alternating(params)
])
assert (rows[:, 0] == rows[:, 1] + rows[:, 2]).all()
print("max length", rows[:, 0].max(), " max fibral part", rows[:, 2].max())
print("fibral parts seen:", sorted(set(rows[:, 2].tolist())))
