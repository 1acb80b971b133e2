"""Build 3-uniform hypergraphs, query codegrees, and round-trip the .h3 format.

The codegree of a vertex pair counts the edges through it; the minimum
codegree over all pairs is the quantity everything else in this library
pivots on.
"""

from tightcycle import Hypergraph3, complete_hypergraph, parse_h3, serialize_h3

print("A hypergraph is built edge by edge on a fixed vertex range:")
h = Hypergraph3(5)
for edge in [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4)]:
    h.add_edge(*edge)
print(f"  {h}: edges {h.edges}")

print("\nCodegree of a pair = number of vertices completing it to an edge:")
for u, v in [(1, 2), (0, 3), (0, 4)]:
    print(f"  d({u},{v}) = {h.codegree(u, v)}")
print(f"  minimum codegree over all pairs: {h.min_codegree()}")

print("\nThe complete hypergraph maximizes every codegree:")
k5 = complete_hypergraph(5)
print(f"  n=5 complete: {k5.num_edges} edges, min codegree {k5.min_codegree()} = n-2")

print("\nThe .h3 text format is canonical: ascending triples, sorted lines.")
text = serialize_h3(h)
print("  " + "\n  ".join(text.splitlines()))
assert parse_h3(text) == h
print("parse(serialize(h)) == h holds.")
