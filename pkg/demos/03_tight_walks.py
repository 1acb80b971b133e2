"""Closed tight walks: detection, counting, extension, and the mod-3 obstruction.

A closed tight walk of length L is a cyclic vertex sequence whose every
window of 3 consecutive vertices is an edge -- the same thing as a
homomorphic image of the length-L tight cycle.  Detection runs a dynamic
program over the digraph of ordered vertex pairs.
"""

from tightcycle import (
    complete_hypergraph,
    count_closed_tight_walks,
    extend_by_three,
    find_closed_tight_walk,
    is_closed_tight_walk,
    repeat_walk,
    z3_construction,
)

k4 = complete_hypergraph(4)
print("On the complete 4-vertex hypergraph:")
print(f"  least closed 4-walk:  {find_closed_tight_walk(k4, 4)}")
print(f"  rooted 4-walks total: {count_closed_tight_walks(k4, 4)} (= 4!)")
w11 = find_closed_tight_walk(k4, 11)
print(f"  a length-11 walk revisits vertices: {w11}")

print("\nWalks extend by +3 (re-walking the first three vertices) and by x t:")
w4 = find_closed_tight_walk(k4, 4)
w7 = extend_by_three(k4, w4)
w8 = repeat_walk(k4, w4, 2)
print(f"  {w4} -> +3 -> {w7}")
print(f"  {w4} -> x2 -> {w8}")
assert is_closed_tight_walk(k4, w7) and is_closed_tight_walk(k4, w8)

print("\nThe mod-3 construction blocks every length not divisible by 3:")
z9, _ = z3_construction(9)
for length in range(4, 13):
    walk = find_closed_tight_walk(z9, length)
    status = "walk " + str(walk) if walk else "none"
    print(f"  length {length:2d} (mod 3 = {length % 3}): {status}")
