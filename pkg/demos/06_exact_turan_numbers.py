"""Exact codegree Turan numbers at small n by pruned exhaustive search.

ex2(n, L) is the largest minimum codegree an n-vertex hypergraph can have
while containing no closed tight walk of length L.  The search is complete
over all edge subsets, pruned by codegree potential and by walks already
present among included edges.  For L = 11 the finite threshold theorem pins
the answer inside [floor(n/3) - 1, floor(n/3)].
"""

from tightcycle import (
    SearchConfig,
    density_profile,
    ex2_exact,
    serialize_h3,
    z3_construction,
)

print("Exact values for the forbidden length 11 (takes a few seconds):")
for n in (4, 5, 6):
    result = ex2_exact(SearchConfig(n=n, length=11))
    z, _ = z3_construction(n)
    print(f"  ex2({n}, hom-C11) = {result.value}"
          f"   bracket [{z.min_codegree()}, {n // 3}]"
          f"   ({result.stats.nodes} nodes, {result.stats.prunings} prunes)")

print("\nThe n=5 witness is the star of one vertex:")
w = ex2_exact(SearchConfig(n=5, length=11)).witness
print("  " + "\n  ".join(serialize_h3(w).splitlines()))

print("\nForbidding a length divisible by 3 collapses the value:")
rows = density_profile(6, [4, 5])
for row in rows:
    print(f"  ex2({row.n}, hom-C6) = {row.value}   value/n = {row.ratio:.3f}")

print("\nInjective mode: a cycle longer than n cannot embed, so nothing is")
print("forbidden and the complete hypergraph wins:")
result = ex2_exact(SearchConfig(n=5, length=11, mode="injective"))
print(f"  ex2(5, injective C11) = {result.value} = n - 2")
