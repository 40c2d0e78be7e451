"""
Canonical words for one element of A(6, 5)
==========================================

Follow a single element through the S-word, the pair translation into
the alternating generators, and the structured factorization.
"""

from altperm import (
    canonical_a_word,
    canonical_s_word,
    eval_a_word,
    length_LA,
    ordered_target,
    parse_window,
    structured_decomposition,
)
from altperm.oracle import bfs_lengths

pi = parse_window("1 2^2 4 5^1 3^3", 6)
print("element        ", pi)

# sorting the colored values in the length order gives the ordering target
print("ordered target ", ordered_target(pi))

# coloring part, then the ordering part
s_word = canonical_s_word(pi)
print(f"S-word ({len(s_word)} letters):", s_word)

# consecutive pairs of S-letters become alternating generators
a_word = canonical_a_word(pi)
print(f"A-word ({len(a_word)} letters):", a_word)
assert eval_a_word(pi.params, a_word) == pi

dec = structured_decomposition(pi)
for g in dec.gammas:
    print(f"  gamma_{g.index}: {g}  [{g.branch}]")
for o in reversed(dec.orderings):
    print(f"  o_{o.index}^-1: {o.word.inverse() or '1'}")

# the closed form agrees with breadth-first search over all 466560 elements
print("L_A =", length_LA(pi), " BFS distance =", bfs_lengths(pi.params).distance(pi))
