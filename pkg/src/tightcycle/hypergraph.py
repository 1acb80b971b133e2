"""3-uniform hypergraphs with bitset pair neighborhoods.

A hypergraph on n vertices (dense 0-indexed integers) stores, for every
unordered vertex pair {u, v}, the set N(uv) = {w : {u,v,w} is an edge} as a
Python int used as a bitmask.  All downstream structure analysis (K4-minus
enumeration, tight-walk detection, extremal search) reduces to word-parallel
AND/OR/popcount on these masks, which is why they are the primary
representation and the edge set is secondary.

The codegree of a pair is |N(uv)|; the minimum codegree over all pairs is the
quantity the rest of the library pivots on.

File format (`.h3`): line 1 is ``h3 <n> <m>``, followed by m lines
``<u> <v> <w>``.  Lines starting with ``#`` are comments and are ignored on
input; output is canonical (each triple ascending, lines sorted
lexicographically, single spaces, trailing newline).
"""

from __future__ import annotations

import warnings
from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a nonnegative int, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_mask(positions: Iterable[int]) -> int:
    """Inverse of iter_bits."""
    out = 0
    for p in positions:
        out |= 1 << p
    return out


class Hypergraph3:
    """A 3-uniform hypergraph on vertices 0..n-1.

    The vertex count is fixed at construction (pair tables are sized once).
    Edges are added during a single-owner build phase; after `freeze()` the
    instance rejects further mutation and is safe to share across workers.
    """

    __slots__ = ("n", "_edges", "_nb", "_frozen")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self._edges: set[tuple[int, int, int]] = set()
        self._nb: list[int] = [0] * (n * (n - 1) // 2)
        self._frozen = False

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph3":
        h = cls(n)
        for e in edges:
            h.add_edge(*e)
        return h

    # -- indexing ---------------------------------------------------------

    def _pair_index(self, u: int, v: int) -> int:
        # triangular index for the unordered pair, u < v after normalization
        if u > v:
            u, v = v, u
        return u * (2 * self.n - u - 1) // 2 + (v - u - 1)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- mutation ---------------------------------------------------------

    def add_edge(self, u: int, v: int, w: int) -> None:
        """Insert the edge {u, v, w}.  Idempotent; repeated vertices are an error."""
        if self._frozen:
            raise RuntimeError("hypergraph is frozen")
        if u == v or u == w or v == w:
            raise ValueError(f"edge ({u}, {v}, {w}) repeats a vertex")
        for x in (u, v, w):
            self._check_vertex(x)
        edge = tuple(sorted((u, v, w)))
        if edge in self._edges:
            return
        self._edges.add(edge)
        a, b, c = edge
        self._nb[self._pair_index(a, b)] |= 1 << c
        self._nb[self._pair_index(a, c)] |= 1 << b
        self._nb[self._pair_index(b, c)] |= 1 << a

    def freeze(self) -> "Hypergraph3":
        self._frozen = True
        return self

    # -- queries ----------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """Edges as ascending triples, lexicographically sorted."""
        return sorted(self._edges)

    def has_edge(self, u: int, v: int, w: int) -> bool:
        if u == v or u == w or v == w:
            return False
        return tuple(sorted((u, v, w))) in self._edges

    def pair_bits(self, u: int, v: int) -> int:
        """Bitmask of N(uv) = {w : {u,v,w} in E}.  Requires u != v, in range."""
        if u == v:
            raise ValueError(f"pair ({u}, {v}) repeats a vertex")
        self._check_vertex(u)
        self._check_vertex(v)
        return self._nb[self._pair_index(u, v)]

    def codegree(self, u: int, v: int) -> int:
        """Number of vertices completing {u, v} to an edge."""
        return self.pair_bits(u, v).bit_count()

    def min_codegree(self) -> int:
        """Minimum codegree over all unordered pairs; 0 for n < 2 by convention."""
        if self.n < 2:
            return 0
        return min(x.bit_count() for x in self._nb)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph3):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __repr__(self) -> str:
        return f"Hypergraph3(n={self.n}, m={self.num_edges})"


def new_hypergraph(n: int) -> Hypergraph3:
    """Empty hypergraph on n vertices (all codegrees zero)."""
    return Hypergraph3(n)


# -- .h3 text format --------------------------------------------------------


def parse_h3(text: str) -> Hypergraph3:
    """Parse the `.h3` text format.

    Duplicate edge lines are deduplicated with a warning; a repeated vertex
    inside a triple, an out-of-range vertex, or a malformed/missing header is
    a ValueError.
    """
    header: tuple[int, int] | None = None
    triples: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "h3":
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            header = (n, m)
            continue
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 3 vertices, got {line!r}")
        try:
            u, v, w = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {line!r}") from None
        triples.append((u, v, w))
    if header is None:
        raise ValueError("missing 'h3 <n> <m>' header")
    n, m = header
    if len(triples) != m:
        raise ValueError(f"header declares {m} edges but found {len(triples)} edge lines")
    h = Hypergraph3(n)
    seen: set[tuple[int, int, int]] = set()
    for u, v, w in triples:
        if u == v or u == w or v == w:
            raise ValueError(f"edge ({u}, {v}, {w}) repeats a vertex")
        for x in (u, v, w):
            if not 0 <= x < n:
                raise ValueError(f"vertex {x} out of range for n={n}")
        key = tuple(sorted((u, v, w)))
        if key in seen:
            warnings.warn(f"duplicate edge line {key}, deduplicated", stacklevel=2)
            continue
        seen.add(key)
        h.add_edge(u, v, w)
    return h


def serialize_h3(h: Hypergraph3, comments: Iterable[str] = ()) -> str:
    """Canonical `.h3` text: sorted ascending triples, trailing newline.

    `comments` are emitted right after the header, one per line, prefixed
    with '# '.  parse_h3(serialize_h3(h)) == h.
    """
    lines = [f"h3 {h.n} {h.num_edges}"]
    lines.extend(f"# {c}" for c in comments)
    lines.extend(f"{u} {v} {w}" for u, v, w in h.edges)
    return "\n".join(lines) + "\n"
