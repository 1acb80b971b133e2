"""Generators: the mod-3 lower-bound construction and standard fixtures.

The Z3 construction colors the vertices with three near-equal classes and
keeps exactly the triples whose color sum is 1 mod 3.  Along any tight walk
the colors repeat with period 3 (two consecutive windows share two vertices),
so a closed walk of length not divisible by 3 would be monochromatic and its
windows would sum to 0 mod 3 -- hence the construction has no closed tight
walk of any such length, while its minimum codegree is floor(n/3) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .hypergraph import Hypergraph3


@dataclass(frozen=True)
class Coloring:
    """Assignment of {0, 1, 2} to every vertex, classes in index order."""

    colors: tuple[int, ...]

    @property
    def class_sizes(self) -> tuple[int, int, int]:
        return (
            self.colors.count(0),
            self.colors.count(1),
            self.colors.count(2),
        )

    def color_of(self, v: int) -> int:
        return self.colors[v]

    def vertices_of_color(self, c: int) -> list[int]:
        return [v for v, col in enumerate(self.colors) if col == c]

    def comment_lines(self) -> list[str]:
        """`color <v> <c>` lines for embedding in .h3 files."""
        return [f"color {v} {c}" for v, c in enumerate(self.colors)]


def balanced_coloring(n: int) -> Coloring:
    """Class sizes differing by at most 1, remainder to the lower color indices."""
    q, r = divmod(n, 3)
    sizes = [q + (1 if i < r else 0) for i in range(3)]
    colors = []
    for c, s in enumerate(sizes):
        colors.extend([c] * s)
    return Coloring(colors=tuple(colors))


def z3_construction(n: int) -> tuple[Hypergraph3, Coloring]:
    """Balanced coloring plus all triples whose color sum is 1 mod 3.

    min_codegree is floor(n/3) - 1, and there is no closed tight walk of any
    length not divisible by 3.
    """
    if n < 3:
        raise ValueError(f"construction needs n >= 3, got {n}")
    coloring = balanced_coloring(n)
    h = Hypergraph3(n)
    classes = [coloring.vertices_of_color(c) for c in range(3)]
    # color multisets with sum 1 mod 3 and not all equal: {0,0,1}, {1,1,2}, {2,2,0}
    for twice, once in ((0, 1), (1, 2), (2, 0)):
        for u, v in combinations(classes[twice], 2):
            for w in classes[once]:
                h.add_edge(u, v, w)
    return h, coloring


def complete_hypergraph(n: int) -> Hypergraph3:
    """All C(n, 3) triples."""
    if n < 3:
        raise ValueError(f"complete hypergraph needs n >= 3, got {n}")
    h = Hypergraph3(n)
    for u, v, w in combinations(range(n), 3):
        h.add_edge(u, v, w)
    return h


def k4_minus_fixture() -> Hypergraph3:
    """Vertices {0,1,2,3}, edges {012, 013, 023}: one K4-minus with apex 0."""
    return Hypergraph3.from_edges(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])


def tight_cycle_hypergraph(length: int) -> Hypergraph3:
    """The tight cycle itself as a hypergraph: edges {i, i+1, i+2} mod length."""
    if length < 4:
        raise ValueError(f"tight cycle needs length >= 4, got {length}")
    h = Hypergraph3(length)
    for i in range(length):
        h.add_edge(i, (i + 1) % length, (i + 2) % length)
    return h
