"""Shared fixtures: canonical gadget instantiations and the random corpus."""

from __future__ import annotations

import random
from itertools import combinations

from tightcycle.hypergraph import Hypergraph3
from tightcycle.structure import K4MinusCopy


def apex_base_fixture() -> tuple[Hypergraph3, K4MinusCopy, K4MinusCopy]:
    """Six labeled vertices x,y,a,b,c,d = 0..5: {0,1} is an apex pair (apex 0
    via {0,1,2,3}) and a base pair (apex 4 via {0,1,4,5})."""
    k1 = K4MinusCopy(apex=0, base=(1, 2, 3))
    k2 = K4MinusCopy(apex=4, base=(0, 1, 5))
    h = Hypergraph3(6)
    for copy in (k1, k2):
        for t in copy.apex_triples():
            h.add_edge(*t)
    return h, k1, k2


def arc_chain_fixture() -> tuple[Hypergraph3, K4MinusCopy, K4MinusCopy]:
    """Seven labeled vertices x,y,z,a,b,c,d = 0..6: edge {0,1,2} with arcs
    1 -> 0 (apex 0 via {0,1,3,4}) and 2 -> 1 (apex 1 via {1,2,5,6})."""
    k1 = K4MinusCopy(apex=0, base=(1, 3, 4))
    k2 = K4MinusCopy(apex=1, base=(2, 5, 6))
    h = Hypergraph3(7)
    h.add_edge(0, 1, 2)
    for copy in (k1, k2):
        for t in copy.apex_triples():
            h.add_edge(*t)
    return h, k1, k2


def random_subset_hypergraph(n: int, rng: random.Random) -> Hypergraph3:
    """Uniformly random edge subset on n vertices."""
    h = Hypergraph3(n)
    for t in combinations(range(n), 3):
        if rng.random() < 0.5:
            h.add_edge(*t)
    return h


def dense_corpus_edges(n: int, seed: int) -> list[tuple[int, int, int]]:
    """Edges of a random hypergraph conditioned on 3 * delta2 > n.

    One seeded shuffled pass over the complete edge list, deleting an edge
    whenever all three of its pair codegrees stay at or above floor(n/3)+1.
    """
    rng = random.Random(seed)
    edges = list(combinations(range(n), 3))
    rng.shuffle(edges)
    cod: dict[tuple[int, int], int] = {}
    for u, v, w in edges:
        for p in ((u, v), (u, w), (v, w)):
            cod[p] = cod.get(p, 0) + 1
    floor_t = n // 3 + 1
    kept = []
    for u, v, w in edges:
        ps = ((u, v), (u, w), (v, w))
        if all(cod[p] > floor_t for p in ps):
            for p in ps:
                cod[p] -= 1
        else:
            kept.append((u, v, w))
    return kept


def dense_corpus_instance(n: int, seed: int) -> Hypergraph3:
    return Hypergraph3.from_edges(n, dense_corpus_edges(n, seed))


def push_below_threshold(n: int, seed: int, floor: int) -> Hypergraph3:
    """Continue the seeded deletion pass down to codegree floor `floor`.

    Starting from the corpus instance for (n, seed), deletes further edges
    (same shuffled order, fresh pass) while every touched pair stays at or
    above `floor`; the result has 3 * delta2 <= n once floor <= n // 3.
    """
    rng = random.Random(seed)
    edges = list(combinations(range(n), 3))
    rng.shuffle(edges)
    cod: dict[tuple[int, int], int] = {}
    for u, v, w in edges:
        for p in ((u, v), (u, w), (v, w)):
            cod[p] = cod.get(p, 0) + 1
    kept = set(edges)
    for stage_floor in (n // 3 + 1, floor):
        for e in edges:
            if e not in kept:
                continue
            u, v, w = e
            ps = ((u, v), (u, w), (v, w))
            if all(cod[p] > stage_floor for p in ps):
                for p in ps:
                    cod[p] -= 1
                kept.discard(e)
    return Hypergraph3.from_edges(n, sorted(kept))
