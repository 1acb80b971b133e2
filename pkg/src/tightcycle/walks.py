"""Closed tight walks: validation, detection, gadget constructions, extensions.

A closed tight walk of length L in a 3-uniform hypergraph is a cyclic vertex
sequence whose every window of 3 consecutive entries is an edge; it is the
same thing as a homomorphic copy of the tight cycle on L vertices.  Lengths
start at 4 (a length-4 walk traverses a complete 4-vertex hypergraph; shorter
cyclic sequences cannot keep their windows 3-distinct).

Detection reduces walks to closed walks in the pair digraph whose nodes are
ordered vertex pairs (u, v) and whose arcs (u, v) -> (v, w) exist when
{u, v, w} is an edge.  Reachability sets over pair nodes are Python-int
bitmasks indexed by u*n + v, so one detection step is a batch of word-wide
ORs.  Walk reconstruction is deterministic: least feasible start pair, then
least feasible next vertex at every step.

The two fixed-shape constructors build the 11-walks obtainable from a pair
that is simultaneously an apex pair and a base pair, and from an edge whose
arc pattern chains through it; both emit an exact canonical sequence.
"""

from __future__ import annotations

from .hypergraph import Hypergraph3, iter_bits
from .structure import K4MinusCopy

Walk = tuple[int, ...]


def first_bad_window(h: Hypergraph3, seq) -> int | None:
    """Index of the first cyclic 3-window that is not a 3-distinct edge, or None."""
    length = len(seq)
    if length < 4:
        return 0
    for v in seq:
        if not 0 <= v < h.n:
            return 0
    for i in range(length):
        a, b, c = seq[i], seq[(i + 1) % length], seq[(i + 2) % length]
        if a == b or a == c or b == c or not h.has_edge(a, b, c):
            return i
    return None


def is_closed_tight_walk(h: Hypergraph3, seq) -> bool:
    """True iff seq (length >= 4) is a closed tight walk of h."""
    return first_bad_window(h, seq) is None


# -- pair digraph detection ---------------------------------------------------


def _live_pair_nodes(h: Hypergraph3):
    """Pair nodes (u*n+v) with nonempty neighborhood, plus predecessor id lists.

    preds[q] for q = (v, w) lists node ids (u, v) over u in N(vw): exactly the
    nodes with an arc into q.
    """
    n = h.n
    live: list[int] = []
    preds: dict[int, list[int]] = {}
    nb_cache: dict[int, int] = {}
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            m = h.pair_bits(u, v)
            if m:
                q = u * n + v
                live.append(q)
                nb_cache[q] = m
                preds[q] = [a * n + u for a in iter_bits(m)]
    return live, preds, nb_cache


def closed_walk_start_pairs(h: Hypergraph3, length: int) -> list[int]:
    """Node ids (u*n + v) admitting a closed walk of exactly `length` steps.

    Runs reachability for all start nodes in lockstep: S[q] is the bitmask of
    start nodes that reach q in t steps; after `length` steps the answers are
    the diagonal hits.
    """
    if length < 4:
        raise ValueError(f"walk length must be >= 4, got {length}")
    n = h.n
    if n < 3 or h.num_edges == 0:
        return []
    live, preds, _ = _live_pair_nodes(h)
    size = n * n
    reach = [0] * size
    for q in live:
        reach[q] = 1 << q
    for _ in range(length):
        nxt = [0] * size
        any_live = False
        for q in live:
            acc = 0
            for p in preds[q]:
                acc |= reach[p]
            if acc:
                nxt[q] = acc
                any_live = True
        if not any_live:
            return []
        reach = nxt
    return [q for q in live if (reach[q] >> q) & 1]


def exists_closed_tight_walk(h: Hypergraph3, length: int) -> bool:
    return bool(closed_walk_start_pairs(h, length))


def find_closed_tight_walk(h: Hypergraph3, length: int) -> Walk | None:
    """Deterministic closed tight walk of exactly `length`, or None.

    Returns the lexicographically least walk: least start pair with a closed
    walk, then greedy least next vertex subject to staying on a path that can
    close up in the remaining steps.
    """
    starts = closed_walk_start_pairs(h, length)
    if not starts:
        return None
    n = h.n
    target = min(starts)
    live, _, nb_cache = _live_pair_nodes(h)
    full = (1 << n) - 1

    # towards[r] = bitmask over nodes that reach `target` in exactly r steps
    towards = [0] * (length + 1)
    towards[0] = 1 << target
    for r in range(1, length + 1):
        prev = towards[r - 1]
        cur = 0
        chunks = [(prev >> (v * n)) & full for v in range(n)]
        for q in live:
            u, v = divmod(q, n)
            if nb_cache[q] & chunks[v]:
                cur |= 1 << q
        towards[r] = cur

    u, v = divmod(target, n)
    seq = [u, v]
    cur_u, cur_v = u, v
    for step in range(1, length + 1):
        need = towards[length - step]
        options = nb_cache[cur_u * n + cur_v] & ((need >> (cur_v * n)) & full)
        if not options:
            raise AssertionError("reconstruction lost the walk")
        w = (options & -options).bit_length() - 1
        seq.append(w)
        cur_u, cur_v = cur_v, w
    if seq[length] != seq[0] or seq[length + 1] != seq[1]:
        raise AssertionError("reconstruction failed to close")
    return tuple(seq[:length])


def count_closed_tight_walks(h: Hypergraph3, length: int) -> int:
    """Exact number of rooted, oriented closed tight walks of `length`.

    The trace of the pair-digraph adjacency power, one integer vector pass per
    start node.  Exact (Python ints), intended for small instances.
    """
    if length < 4:
        raise ValueError(f"walk length must be >= 4, got {length}")
    n = h.n
    if n < 3 or h.num_edges == 0:
        return 0
    live, preds, _ = _live_pair_nodes(h)
    size = n * n
    total = 0
    for s in live:
        vec = [0] * size
        vec[s] = 1
        for _ in range(length):
            nxt = [0] * size
            for q in live:
                acc = 0
                for p in preds[q]:
                    acc += vec[p]
                if acc:
                    nxt[q] = acc
            vec = nxt
        total += vec[s]
    return total


def find_injective_tight_cycle(h: Hypergraph3, length: int) -> Walk | None:
    """Lexicographically least injective tight cycle of `length`, or None.

    Injective copies need `length` distinct vertices, so lengths above n are
    immediately absent.  Backtracking with the first vertex forced minimal.
    """
    if length < 4:
        raise ValueError(f"walk length must be >= 4, got {length}")
    n = h.n
    if length > n:
        return None

    seq: list[int] = []

    def extend() -> bool:
        if len(seq) == length:
            a, b = seq[-2], seq[-1]
            return h.has_edge(a, b, seq[0]) and h.has_edge(b, seq[0], seq[1])
        used = set(seq)
        for w in range(seq[0] + 1 if seq else 0, n):
            if w in used:
                continue
            if len(seq) >= 2 and not h.has_edge(seq[-2], seq[-1], w):
                continue
            seq.append(w)
            if extend():
                return True
            seq.pop()
        return False

    for start in range(n):
        seq = [start]
        if extend():
            return tuple(seq)
    return None


# -- extensions ---------------------------------------------------------------


def _require_valid(h: Hypergraph3, walk) -> Walk:
    bad = first_bad_window(h, walk)
    if bad is not None:
        raise ValueError(f"not a closed tight walk (window {bad})")
    return tuple(walk)


def extend_by_three(h: Hypergraph3, walk) -> Walk:
    """Valid walk of length L+3: append the first three vertices again."""
    w = _require_valid(h, walk)
    return w + w[:3]


def repeat_walk(h: Hypergraph3, walk, t: int) -> Walk:
    """Valid walk of length t*L: concatenate t copies."""
    if t < 1:
        raise ValueError(f"repeat count must be >= 1, got {t}")
    w = _require_valid(h, walk)
    return w * t


def canonical_walk(walk) -> Walk:
    """Least sequence over all rotations of the walk and of its reversal."""
    w = tuple(walk)
    length = len(w)
    rev = w[::-1]
    return min(
        min(w[i:] + w[:i] for i in range(length)),
        min(rev[i:] + rev[:i] for i in range(length)),
    )


# -- the two 11-walk gadgets ---------------------------------------------------


def _gadget_labels(copy: K4MinusCopy, pair: tuple[int, int], apex: int) -> tuple[int, int]:
    """The two vertices of `copy` outside `pair`, ascending; validates shape."""
    vs = set(copy.vertices)
    if copy.apex != apex:
        raise ValueError(f"copy apex is {copy.apex}, expected {apex}")
    if not set(pair) <= vs:
        raise ValueError(f"copy {sorted(vs)} does not contain the pair {pair}")
    rest = sorted(vs - set(pair))
    if len(rest) != 2:
        raise ValueError(f"copy {sorted(vs)} does not extend the pair {pair} by two vertices")
    return rest[0], rest[1]


def walk_from_apex_base(
    h: Hypergraph3, x: int, y: int, k1: K4MinusCopy, k2: K4MinusCopy
) -> Walk:
    """The 11-walk through a pair {x, y} that is both an apex pair and a base pair.

    k1 is {x, y, a, b} with apex x; k2 is {x, y, c, d} with apex c (so neither
    x nor y is its apex).  Emits exactly (x, c, d, y, c, x, y, b, x, a, y).
    """
    if x == y:
        raise ValueError("x and y must be distinct")
    for copy in (k1, k2):
        if not copy.is_valid_in(h):
            raise ValueError(f"copy {copy} is not a K4-minus of the hypergraph")
    a, b = _gadget_labels(k1, (x, y), apex=x)
    c = k2.apex
    if c in (x, y):
        raise ValueError(f"second copy must not have {x} or {y} as its apex")
    vs2 = set(k2.vertices)
    if not {x, y} <= vs2:
        raise ValueError(f"second copy {sorted(vs2)} does not contain the pair ({x}, {y})")
    (d,) = vs2 - {x, y, c}
    walk = (x, c, d, y, c, x, y, b, x, a, y)
    bad = first_bad_window(h, walk)
    if bad is not None:
        raise AssertionError(f"gadget produced an invalid window at {bad}")
    return walk


def walk_from_arc_chain(
    h: Hypergraph3, x: int, y: int, z: int, k1: K4MinusCopy, k2: K4MinusCopy
) -> Walk:
    """The 11-walk through an edge {x, y, z} whose arcs chain z -> y -> x.

    k1 is {x, y, a, b} with apex x (witnessing y -> x); k2 is {y, z, c, d}
    with apex y (witnessing z -> y).  Emits exactly
    (x, a, b, x, y, z, d, y, c, z, y).
    """
    if len({x, y, z}) != 3:
        raise ValueError("x, y, z must be distinct")
    if not h.has_edge(x, y, z):
        raise ValueError(f"({x}, {y}, {z}) is not an edge")
    for copy in (k1, k2):
        if not copy.is_valid_in(h):
            raise ValueError(f"copy {copy} is not a K4-minus of the hypergraph")
    a, b = _gadget_labels(k1, (x, y), apex=x)
    c, d = _gadget_labels(k2, (y, z), apex=y)
    walk = (x, a, b, x, y, z, d, y, c, z, y)
    bad = first_bad_window(h, walk)
    if bad is not None:
        raise AssertionError(f"gadget produced an invalid window at {bad}")
    return walk
