"""K4-minus copies, the apex digraph D, and the base graph B.

A K4-minus is a 4-vertex configuration carrying the three edges through one
vertex, its apex.  Every copy orients arcs from its other vertices to the
apex (digraph D) and links those other vertices pairwise (graph B).  When
the minimum codegree exceeds n/3, every edge must sit inside such a copy
with both of its arcs pointing at a common apex.
"""

from tightcycle import (
    apex_digraph,
    base_graph,
    check_edge_claim,
    check_no_2cycles,
    complete_hypergraph,
    enumerate_k4minus,
    k4_minus_fixture,
    k4minus_at_edge,
)

h = k4_minus_fixture()
print(f"The minimal example {h.edges} has exactly one copy:")
for copy in enumerate_k4minus(h):
    print(f"  apex {copy.apex}, other vertices {copy.base}")

d = apex_digraph(h)
b = base_graph(h)
print(f"its arcs all point at the apex: {d.arcs()}")
print(f"and its base pairs avoid the apex: {b.edges()}")

print("\nOn the complete hypergraph every labeling works:")
k5 = complete_hypergraph(5)
print(f"  n=5 complete has {sum(1 for _ in enumerate_k4minus(k5))} copies"
      f" (5 four-sets x 4 apex choices)")
print(f"  copies through the edge (0,1,2): {len(k4minus_at_edge(k5, (0, 1, 2)))}")

print("\nStructural claims as violation lists (empty = claim holds):")
print(f"  edges without an indegree-2 apex in n=5 complete: {check_edge_claim(k5)}")
two_cycles = check_no_2cycles(apex_digraph(k5))
print(f"  2-cycles in D of n=5 complete: {len(two_cycles)} pairs"
      " (expected: all of them, by symmetry)")
print(f"  2-cycles in D of the single-copy example: {check_no_2cycles(d)}")
