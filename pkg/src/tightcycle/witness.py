"""Walk and refutation certificates for the homomorphic-C11 decision.

find_hom_c11 runs the constructive pipeline: first look for a pair that is
simultaneously an apex pair and a base pair, then for an edge whose arcs
chain through it; either pattern assembles an explicit 11-walk from two
K4-minus gadgets.  A generic pair-digraph search is the third stage.  When
all three fail, the outcome is a refutation certificate recording the
minimum codegree against the floor(n/3) bound and, when one exists, a
conflict vertex whose base/out/in neighborhoods are pairwise disjoint --
the configuration whose counting is impossible above the bound.

Certificates serialize to JSON with fixed field order and re-verify from
scratch: walks are re-validated window by window (and gadget routes re-run
their constructor on the stored labels), refutations re-derive the apex
digraph and base graph, and full audit mode re-runs the length-11 search.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

from .hypergraph import Hypergraph3, iter_bits
from .structure import (
    ApexDigraph,
    BaseGraph,
    K4MinusCopy,
    apex_digraph,
    base_graph,
    least_apex_copy,
    least_base_copy,
)
from .walks import (
    Walk,
    find_closed_tight_walk,
    first_bad_window,
    walk_from_apex_base,
    walk_from_arc_chain,
)

HOM_CYCLE_LENGTH = 11


@dataclass(frozen=True)
class Premise:
    """The codegree hypothesis in its finite form.

    Every counting step needs only 3*delta2 > n (three codegrees summing past
    n; three disjoint neighborhoods of size delta2 not fitting in n
    vertices), so the strict threshold carries the whole hypothesis and
    `surplus` records how far above it the instance sits.
    """

    n: int
    delta2: int

    @property
    def strict_threshold(self) -> bool:
        return 3 * self.delta2 > self.n

    @property
    def surplus(self) -> int:
        return 3 * self.delta2 - self.n

    @classmethod
    def of(cls, h: Hypergraph3) -> "Premise":
        return cls(n=h.n, delta2=h.min_codegree())


@dataclass(frozen=True)
class Gadgets:
    """Labels and copies from which a gadget-route walk is reproducible."""

    x: int
    y: int
    z: int | None
    k1: K4MinusCopy
    k2: K4MinusCopy


@dataclass(frozen=True)
class WalkCertificate:
    walk: Walk
    route: str  # "apex_base" | "arc_chain" | "generic_dp"
    gadgets: Gadgets | None = None


@dataclass(frozen=True)
class RefutationCertificate:
    delta2: int
    bound: int  # floor(n/3)
    conflict_vertex: int | None
    nb_base: tuple[int, ...]
    nd_out: tuple[int, ...]
    nd_in: tuple[int, ...]
    degree_summary: tuple[tuple[int, int, int], ...] | None = None


Certificate = WalkCertificate | RefutationCertificate


def find_conflict_vertex(h: Hypergraph3, d: ApexDigraph, b: BaseGraph) -> int | None:
    """Least vertex with positive base degree, out-degree and in-degree."""
    for v in range(h.n):
        if b.adj_bits[v] and d.out_bits[v] and d.in_bits[v]:
            return v
    return None


def _stage_apex_base(h: Hypergraph3, d: ApexDigraph, b: BaseGraph) -> WalkCertificate | None:
    for u in range(h.n):
        both = b.adj_bits[u] & (d.out_bits[u] | d.in_bits[u])
        for v in iter_bits(both):
            if v < u:
                continue
            # {u, v} is an apex pair and a base pair; prefer the smaller apex
            x, y = (u, v) if d.has_arc(v, u) else (v, u)
            k1 = least_apex_copy(h, apex=x, mate=y)
            k2 = least_base_copy(h, u, v)
            if k1 is None or k2 is None:
                raise AssertionError("arc or base edge without a witnessing copy")
            walk = walk_from_apex_base(h, x, y, k1, k2)
            return WalkCertificate(
                walk=walk,
                route="apex_base",
                gadgets=Gadgets(x=x, y=y, z=None, k1=k1, k2=k2),
            )
    return None


def _stage_arc_chain(h: Hypergraph3, d: ApexDigraph) -> WalkCertificate | None:
    for edge in h.edges:
        for x, y, z in permutations(edge):
            if d.has_arc(y, x) and d.has_arc(z, y):
                k1 = least_apex_copy(h, apex=x, mate=y)
                k2 = least_apex_copy(h, apex=y, mate=z)
                if k1 is None or k2 is None:
                    raise AssertionError("arc without a witnessing copy")
                walk = walk_from_arc_chain(h, x, y, z, k1, k2)
                return WalkCertificate(
                    walk=walk,
                    route="arc_chain",
                    gadgets=Gadgets(x=x, y=y, z=z, k1=k1, k2=k2),
                )
    return None


def _refutation(h: Hypergraph3, d: ApexDigraph, b: BaseGraph) -> RefutationCertificate:
    v = find_conflict_vertex(h, d, b)
    if v is None:
        summary = tuple(
            (b.degree(w), d.out_degree(w), d.in_degree(w)) for w in range(h.n)
        )
        return RefutationCertificate(
            delta2=h.min_codegree(),
            bound=h.n // 3,
            conflict_vertex=None,
            nb_base=(),
            nd_out=(),
            nd_in=(),
            degree_summary=summary,
        )
    return RefutationCertificate(
        delta2=h.min_codegree(),
        bound=h.n // 3,
        conflict_vertex=v,
        nb_base=tuple(iter_bits(b.adj_bits[v])),
        nd_out=tuple(iter_bits(d.out_bits[v])),
        nd_in=tuple(iter_bits(d.in_bits[v])),
    )


def find_hom_c11(h: Hypergraph3, stages: str = "all") -> Certificate | None:
    """Walk certificate for a homomorphic C11, else a refutation certificate.

    Stage order: apex+base pair gadget, arc-chain gadget, generic pair-digraph
    search, refutation.  With stages="gadget" only the first two run and an
    inconclusive outcome is None.  A refutation is reachable only when
    3 * min_codegree <= n.
    """
    if stages not in ("all", "gadget"):
        raise ValueError(f"stages must be 'all' or 'gadget', got {stages!r}")
    d = apex_digraph(h)
    b = base_graph(h)
    cert = _stage_apex_base(h, d, b)
    if cert is not None:
        return cert
    cert = _stage_arc_chain(h, d)
    if cert is not None:
        return cert
    if stages == "gadget":
        return None
    walk = find_closed_tight_walk(h, HOM_CYCLE_LENGTH)
    if walk is not None:
        return WalkCertificate(walk=walk, route="generic_dp", gadgets=None)
    return _refutation(h, d, b)


# -- verification ---------------------------------------------------------------


def verify_certificate(
    h: Hypergraph3, cert: Certificate, full: bool = True
) -> tuple[bool, str]:
    """(ok, diagnostic).  Full mode re-runs the length-11 search for refutations."""
    if isinstance(cert, WalkCertificate):
        return _verify_walk(h, cert)
    if isinstance(cert, RefutationCertificate):
        return _verify_refutation(h, cert, full)
    return False, f"unknown certificate type {type(cert).__name__}"


def _verify_walk(h: Hypergraph3, cert: WalkCertificate) -> tuple[bool, str]:
    if len(cert.walk) != HOM_CYCLE_LENGTH:
        return False, f"walk has length {len(cert.walk)}, expected {HOM_CYCLE_LENGTH}"
    bad = first_bad_window(h, cert.walk)
    if bad is not None:
        return False, f"window {bad} is not an edge"
    if cert.route == "generic_dp":
        if cert.gadgets is not None:
            return False, "generic_dp route must not carry gadgets"
        return True, "valid walk"
    if cert.gadgets is None:
        return False, f"route {cert.route} requires gadget data"
    g = cert.gadgets
    try:
        if cert.route == "apex_base":
            rebuilt = walk_from_apex_base(h, g.x, g.y, g.k1, g.k2)
        elif cert.route == "arc_chain":
            if g.z is None:
                return False, "arc_chain route requires a third label"
            rebuilt = walk_from_arc_chain(h, g.x, g.y, g.z, g.k1, g.k2)
        else:
            return False, f"unknown route {cert.route!r}"
    except (ValueError, AssertionError) as exc:
        return False, f"gadget reproduction failed: {exc}"
    if rebuilt != cert.walk:
        return False, "gadget reproduction does not match the stored walk"
    return True, "valid walk"


def _verify_refutation(
    h: Hypergraph3, cert: RefutationCertificate, full: bool
) -> tuple[bool, str]:
    delta2 = h.min_codegree()
    if cert.delta2 != delta2:
        return False, f"stored delta2 {cert.delta2} differs from actual {delta2}"
    if cert.bound != h.n // 3:
        return False, f"stored bound {cert.bound} differs from floor(n/3) = {h.n // 3}"
    if cert.delta2 > cert.bound:
        return False, f"delta2 {cert.delta2} exceeds the bound {cert.bound}"
    d = apex_digraph(h)
    b = base_graph(h)
    v = cert.conflict_vertex
    if v is None:
        actual = find_conflict_vertex(h, d, b)
        if actual is not None:
            return False, f"certificate claims no conflict vertex, but {actual} qualifies"
    else:
        if not 0 <= v < h.n:
            return False, f"conflict vertex {v} out of range"
        expected = (
            tuple(iter_bits(b.adj_bits[v])),
            tuple(iter_bits(d.out_bits[v])),
            tuple(iter_bits(d.in_bits[v])),
        )
        stored = (cert.nb_base, cert.nd_out, cert.nd_in)
        names = ("base", "out", "in")
        for name, exp, got in zip(names, expected, stored):
            if tuple(got) != exp:
                return False, f"{name}-neighborhood of {v} differs from the hypergraph's"
        if not all(stored):
            return False, f"conflict vertex {v} must have three nonempty neighborhoods"
        sets = [set(s) for s in stored]
        for i in range(3):
            for j in range(i + 1, 3):
                if sets[i] & sets[j]:
                    return False, f"{names[i]}- and {names[j]}-neighborhoods intersect"
    if full:
        walk = find_closed_tight_walk(h, HOM_CYCLE_LENGTH)
        if walk is not None:
            return False, f"hypergraph contains the walk {walk}"
    return True, "valid refutation"


# -- JSON ------------------------------------------------------------------------


def _copy_to_obj(copy: K4MinusCopy) -> dict:
    return {"apex": copy.apex, "vertices": list(copy.vertices)}


def _copy_from_obj(obj: dict) -> K4MinusCopy:
    apex = obj["apex"]
    vertices = obj["vertices"]
    if not isinstance(vertices, list) or len(vertices) != 4 or apex not in vertices:
        raise ValueError(f"malformed copy object {obj!r}")
    base = tuple(sorted(v for v in vertices if v != apex))
    if len(base) != 3:
        raise ValueError(f"malformed copy object {obj!r}")
    return K4MinusCopy(apex=apex, base=base)


def certificate_to_obj(cert: Certificate) -> dict:
    """Plain dict with the fixed field order of the wire format."""
    if isinstance(cert, WalkCertificate):
        gadgets = None
        if cert.gadgets is not None:
            g = cert.gadgets
            gadgets = {
                "x": g.x,
                "y": g.y,
                "z": g.z,
                "k1": _copy_to_obj(g.k1),
                "k2": _copy_to_obj(g.k2),
            }
        return {
            "type": "walk",
            "length": len(cert.walk),
            "route": cert.route,
            "sequence": list(cert.walk),
            "gadgets": gadgets,
        }
    obj = {
        "type": "refutation",
        "delta2": cert.delta2,
        "bound": cert.bound,
        "conflict_vertex": cert.conflict_vertex,
        "nb_base": list(cert.nb_base),
        "nd_out": list(cert.nd_out),
        "nd_in": list(cert.nd_in),
    }
    if cert.degree_summary is not None:
        obj["degree_summary"] = [list(row) for row in cert.degree_summary]
    return obj


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_obj(cert), indent=2) + "\n"


def certificate_from_obj(obj: dict) -> Certificate:
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("certificate object must be a dict with a 'type' field")
    kind = obj["type"]
    if kind == "walk":
        walk = tuple(obj["sequence"])
        route = obj["route"]
        gadgets = None
        if obj.get("gadgets") is not None:
            g = obj["gadgets"]
            gadgets = Gadgets(
                x=g["x"],
                y=g["y"],
                z=g.get("z"),
                k1=_copy_from_obj(g["k1"]),
                k2=_copy_from_obj(g["k2"]),
            )
        return WalkCertificate(walk=walk, route=route, gadgets=gadgets)
    if kind == "refutation":
        summary = obj.get("degree_summary")
        return RefutationCertificate(
            delta2=obj["delta2"],
            bound=obj["bound"],
            conflict_vertex=obj["conflict_vertex"],
            nb_base=tuple(obj["nb_base"]),
            nd_out=tuple(obj["nd_out"]),
            nd_in=tuple(obj["nd_in"]),
            degree_summary=None if summary is None else tuple(tuple(r) for r in summary),
        )
    raise ValueError(f"unknown certificate type {kind!r}")


def certificate_from_json(text: str) -> Certificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed certificate JSON: {exc}") from None
    return certificate_from_obj(obj)
