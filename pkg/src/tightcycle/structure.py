"""K4-minus structure of a 3-uniform hypergraph: apex arcs and base pairs.

A K4-minus is four vertices carrying the three edges through one of them
(the apex); the fourth possible triple may or may not also be present.  Every
copy induces arcs from its non-apex vertices to the apex (collected in the
digraph D) and makes each pair of non-apex vertices a base pair (collected in
the graph B).  The claim checkers at the bottom test the structural facts
that drive the refutation side of the witness pipeline:

* every edge of a hypergraph with 3*delta2 > n sits in a K4-minus whose apex
  receives both arcs from the other two edge vertices;
* D has no 2-cycles and the base/out/in degree implications hold whenever,
  in addition, no closed tight 11-walk exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .hypergraph import Hypergraph3, iter_bits


@dataclass(frozen=True)
class K4MinusCopy:
    """Four vertices with a designated apex; the 3 triples through the apex are edges."""

    apex: int
    base: tuple[int, int, int]  # the non-apex vertices, ascending

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return tuple(sorted((self.apex,) + self.base))

    def apex_triples(self) -> list[tuple[int, int, int]]:
        p, q, r = self.base
        return [
            tuple(sorted((self.apex, p, q))),
            tuple(sorted((self.apex, p, r))),
            tuple(sorted((self.apex, q, r))),
        ]

    def is_valid_in(self, h: Hypergraph3) -> bool:
        if len(set(self.vertices)) != 4:
            return False
        return all(h.has_edge(*t) for t in self.apex_triples())


@dataclass
class ApexDigraph:
    """Digraph D of apex arcs: u -> v when some K4-minus contains both with apex v."""

    n: int
    out_bits: list[int]
    in_bits: list[int]

    def has_arc(self, u: int, v: int) -> bool:
        return (self.out_bits[u] >> v) & 1 == 1

    def out_degree(self, v: int) -> int:
        return self.out_bits[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_bits[v].bit_count()

    @property
    def arc_count(self) -> int:
        return sum(x.bit_count() for x in self.out_bits)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out_bits[u])]


@dataclass
class BaseGraph:
    """Graph B of base pairs: {u, v} in some K4-minus with neither as apex."""

    n: int
    adj_bits: list[int]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_bits[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj_bits[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(x.bit_count() for x in self.adj_bits) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj_bits[u]) if u < v]


# -- enumeration --------------------------------------------------------------


def k4minus_at_edge(h: Hypergraph3, edge: tuple[int, int, int]) -> list[K4MinusCopy]:
    """All K4-minus copies of h on a 4-set containing `edge`, any apex.

    Sorted by (apex, fourth vertex) and free of duplicates: for an in-edge
    apex x the fourth vertex w ranges over N(xy) & N(xz); the apex can also be
    the fourth vertex itself, which requires w common to all three pair
    neighborhoods of the edge.
    """
    e = tuple(sorted(edge))
    if not h.has_edge(*e):
        raise ValueError(f"{e} is not an edge")
    x0, y0, z0 = e
    emask = (1 << x0) | (1 << y0) | (1 << z0)
    copies = []
    for x in e:
        y, z = (v for v in e if v != x)
        for w in iter_bits(h.pair_bits(x, y) & h.pair_bits(x, z) & ~emask):
            copies.append(K4MinusCopy(apex=x, base=tuple(sorted((y, z, w)))))
    outside = h.pair_bits(x0, y0) & h.pair_bits(x0, z0) & h.pair_bits(y0, z0) & ~emask
    for w in iter_bits(outside):
        copies.append(K4MinusCopy(apex=w, base=e))
    eset = set(e)
    copies.sort(key=lambda c: (c.apex, next(iter(set(c.vertices) - eset))))
    return copies


def enumerate_k4minus(h: Hypergraph3) -> Iterator[K4MinusCopy]:
    """Every K4-minus copy of h exactly once, keyed by (apex, non-apex triple).

    A copy with apex x is a triangle in the link graph of x; each triangle is
    reported from its lexicographically least pair, so no deduplication set is
    needed.
    """
    for a, b, c in h.edges:
        for x, p, q in ((a, b, c), (b, a, c), (c, a, b)):
            third = h.pair_bits(x, p) & h.pair_bits(x, q) & ~((1 << (q + 1)) - 1)
            for r in iter_bits(third):
                yield K4MinusCopy(apex=x, base=(p, q, r))


def count_k4minus(h: Hypergraph3) -> int:
    """Number of K4-minus copies, by popcount instead of materializing them."""
    total = 0
    for a, b, c in h.edges:
        for x, p, q in ((a, b, c), (b, a, c), (c, a, b)):
            total += (h.pair_bits(x, p) & h.pair_bits(x, q) & ~((1 << (q + 1)) - 1)).bit_count()
    return total


def least_apex_copy(h: Hypergraph3, apex: int, mate: int) -> K4MinusCopy | None:
    """Least K4-minus containing {apex, mate} with the given apex, or None.

    The copy is {apex, mate, a, b} with a in N(apex,mate) and
    b in N(apex,mate) & N(apex,a); (a, b) is minimized lexicographically.
    """
    nb = h.pair_bits(apex, mate)
    for a in iter_bits(nb):
        rest = nb & h.pair_bits(apex, a)
        if rest:
            b = (rest & -rest).bit_length() - 1
            return K4MinusCopy(apex=apex, base=tuple(sorted((mate, a, b))))
    return None


def least_base_copy(h: Hypergraph3, u: int, v: int) -> K4MinusCopy | None:
    """Least K4-minus containing {u, v} with neither u nor v as apex, or None.

    The copy is {u, v, c, d} with apex c in N(uv) and d in N(cu) & N(cv);
    (c, d) is minimized lexicographically.
    """
    for c in iter_bits(h.pair_bits(u, v)):
        rest = h.pair_bits(c, u) & h.pair_bits(c, v)
        if rest:
            d = (rest & -rest).bit_length() - 1
            return K4MinusCopy(apex=c, base=tuple(sorted((u, v, d))))
    return None


def apex_digraph(h: Hypergraph3) -> ApexDigraph:
    """Build D by testing each ordered pair directly against the pair bitsets."""
    n = h.n
    out_bits = [0] * n
    in_bits = [0] * n
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            nb = h.pair_bits(u, v)
            for a in iter_bits(nb):
                if nb & h.pair_bits(v, a):
                    out_bits[u] |= 1 << v
                    in_bits[v] |= 1 << u
                    break
    return ApexDigraph(n=n, out_bits=out_bits, in_bits=in_bits)


def base_graph(h: Hypergraph3) -> BaseGraph:
    """Build B by testing each unordered pair directly against the pair bitsets."""
    n = h.n
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            for x in iter_bits(h.pair_bits(u, v)):
                if h.pair_bits(x, u) & h.pair_bits(x, v):
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                    break
    return BaseGraph(n=n, adj_bits=adj)


# -- claim checkers -----------------------------------------------------------


def check_edge_claim(
    h: Hypergraph3,
    d: ApexDigraph | None = None,
    b: BaseGraph | None = None,
    strict: bool = False,
) -> list[tuple[int, int, int]]:
    """Edges with no apex labeling; empty whenever 3*min_codegree > n.

    Default mode: an edge {x, y, z} passes if some vertex receives arcs from
    both others inside the triple.  Strict mode additionally requires, for
    some labeling, that those two arcs are the *only* arcs of D restricted to
    the triple and that B restricted to the triple has exactly the edge
    between the two non-apex vertices (which needs the no-hom-C11 hypothesis,
    so strict violations are reports, not errors).
    """
    if d is None:
        d = apex_digraph(h)
    if strict and b is None:
        b = base_graph(h)
    violations = []
    for edge in h.edges:
        ok = False
        for x in edge:
            y, z = (v for v in edge if v != x)
            if not (d.has_arc(y, x) and d.has_arc(z, x)):
                continue
            if not strict:
                ok = True
                break
            arcs_in_triple = sum(
                1 for p in edge for q in edge if p != q and d.has_arc(p, q)
            )
            base_in_triple = [
                (p, q) for p, q in ((edge[0], edge[1]), (edge[0], edge[2]), (edge[1], edge[2]))
                if b.has_edge(p, q)
            ]
            if arcs_in_triple == 2 and base_in_triple == [tuple(sorted((y, z)))]:
                ok = True
                break
        if not ok:
            violations.append(edge)
    return violations


def check_no_2cycles(d: ApexDigraph) -> list[tuple[int, int]]:
    """Unordered pairs {u, v} with both u -> v and v -> u in D."""
    return [
        (u, v)
        for u in range(d.n)
        for v in iter_bits(d.out_bits[u])
        if u < v and d.has_arc(v, u)
    ]


class DegreeViolation(NamedTuple):
    vertex: int
    rule: str  # "base_implies_out" | "out_implies_base" | "in_implies_in"
    degree: int
    threshold: int


def check_degree_implications(
    h: Hypergraph3, d: ApexDigraph, b: BaseGraph, threshold: int
) -> list[DegreeViolation]:
    """Vertices violating the base/out/in degree implications at `threshold`.

    The implications: positive base degree forces out-degree >= threshold;
    positive out-degree forces base degree >= threshold; positive in-degree
    forces in-degree >= threshold.
    """
    violations = []
    for v in range(h.n):
        db = b.degree(v)
        dout = d.out_degree(v)
        din = d.in_degree(v)
        if db > 0 and dout < threshold:
            violations.append(DegreeViolation(v, "base_implies_out", dout, threshold))
        if dout > 0 and db < threshold:
            violations.append(DegreeViolation(v, "out_implies_base", db, threshold))
        if din > 0 and din < threshold:
            violations.append(DegreeViolation(v, "in_implies_in", din, threshold))
    return violations
