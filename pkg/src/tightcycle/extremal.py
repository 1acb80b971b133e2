"""Exact codegree Turan numbers at small n by pruned exhaustive search.

ex2_decision(cfg, d) answers: is there an n-vertex hypergraph with minimum
codegree >= d and no forbidden walk (a closed tight walk of the configured
length, or an injective one)?  The search branches on the lexicographic list
of all C(n, 3) triples, inclusion before exclusion.  Two sound prunes drive
it: a pair whose current codegree plus undecided incident triples falls
below d kills the branch, and a forbidden walk found among the already
included edges kills the branch (walks survive edge additions).  Walk checks
run at every leaf and each time `walk_check_stride` new edges accumulate.

Determinism across worker counts: the tree is always split at a fixed prefix
depth (a function of the instance only) into subtree tasks; every task runs
to completion (stopping only at its own first witness), the reported witness
is the first-found of the earliest witness-bearing subtree -- exactly the
serial DFS answer -- and node/pruning counts are sums over the same fixed
task set.  A node budget is divided evenly over the tasks, so "unknown"
outcomes are scheduling-independent too.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .constructions import complete_hypergraph
from .hypergraph import Hypergraph3
from .walks import exists_closed_tight_walk, find_injective_tight_cycle

_SPLIT_DEPTH = 5  # subtree decomposition depth; fixed so stats never depend on workers
_SPLIT_MIN_TRIPLES = 12


@dataclass
class SearchConfig:
    n: int
    length: int = 11
    mode: str = "hom"  # "hom" | "injective"
    symmetry: bool = False
    workers: int = 1
    walk_check_stride: int = 8
    node_budget: int | None = None

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"n must be >= 3, got {self.n}")
        if self.length < 4:
            raise ValueError(f"forbidden length must be >= 4, got {self.length}")
        if self.mode not in ("hom", "injective"):
            raise ValueError(f"mode must be 'hom' or 'injective', got {self.mode!r}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.walk_check_stride < 1:
            raise ValueError("walk_check_stride must be >= 1")


@dataclass
class SearchStats:
    nodes: int = 0
    prunings: int = 0

    def add(self, nodes: int, prunings: int) -> None:
        self.nodes += nodes
        self.prunings += prunings


@dataclass
class SearchResult:
    value: int | None
    witness: Hypergraph3 | None
    status: str  # "exact" | "unknown"
    stats: SearchStats = field(default_factory=SearchStats)


class SearchBudgetExceeded(Exception):
    """Raised when a decision search hits its node budget; carries the stats."""

    def __init__(self, stats: SearchStats):
        super().__init__(f"node budget exceeded after {stats.nodes} nodes")
        self.stats = stats


class _TaskAbort(Exception):
    pass


class _Decision:
    """One DFS over edge subsets for a fixed (n, length, mode, d)."""

    def __init__(self, n: int, length: int, mode: str, d: int, stride: int,
                 symmetry: bool, budget: int | None = None):
        self.n = n
        self.length = length
        self.mode = mode
        self.d = d
        self.stride = stride
        self.symmetry = symmetry
        self.budget = budget
        self.triples = list(combinations(range(n), 3))
        self.total = len(self.triples)
        pair_id = {}
        for u in range(n):
            for v in range(u + 1, n):
                pair_id[(u, v)] = len(pair_id)
        self.triple_pairs = [
            (pair_id[(u, v)], pair_id[(u, w)], pair_id[(v, w)])
            for u, v, w in self.triples
        ]
        self.cod = [0] * len(pair_id)
        self.undec = [n - 2] * len(pair_id)
        self.bits = [0] * self.total
        self.included: list[int] = []
        self.nodes = 0
        self.prunings = 0
        self.witness: list[int] | None = None
        self.collect_at: int | None = None
        self.tasks: list[tuple] = []
        if symmetry:
            index = {t: i for i, t in enumerate(self.triples)}
            swap = {0: 1, 1: 0}
            self.sigma = [
                index[tuple(sorted(swap.get(v, v) for v in t))] for t in self.triples
            ]
        else:
            self.sigma = None

    # -- helpers ----------------------------------------------------------

    def _forbidden(self) -> bool:
        h = Hypergraph3(self.n)
        for i in self.included:
            h.add_edge(*self.triples[i])
        if self.mode == "hom":
            return exists_closed_tight_walk(h, self.length)
        return find_injective_tight_cycle(h, self.length) is not None

    def _advance_sym(self, fp: int, satisfied: bool, decided: int):
        """Resolve the lex comparison vs the (0 1)-transposed assignment.

        Returns (fp, satisfied, feasible); feasible=False means the current
        branch is lexicographically smaller than its mirror and is skipped.
        """
        if self.sigma is None or satisfied:
            return fp, satisfied, True
        bits = self.bits
        sigma = self.sigma
        while fp < self.total:
            j = sigma[fp]
            if fp >= decided or j >= decided:
                return fp, False, True
            if bits[fp] != bits[j]:
                return (fp, True, True) if bits[fp] > bits[j] else (fp, False, False)
            fp += 1
        return fp, False, True

    def replay(self, prefix: tuple[int, ...]) -> None:
        for i, bit in enumerate(prefix):
            self.bits[i] = bit
            for p in self.triple_pairs[i]:
                self.undec[p] -= 1
                if bit:
                    self.cod[p] += 1
            if bit:
                self.included.append(i)

    # -- the DFS ----------------------------------------------------------

    def search(self, i: int, pending: int, fp: int, satisfied: bool) -> bool:
        if self.collect_at is not None and i == self.collect_at:
            self.tasks.append((tuple(self.bits[:i]), pending, fp, satisfied))
            return False
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _TaskAbort
        if i == self.total:
            if pending > 0 and self._forbidden():
                self.prunings += 1
                return False
            self.witness = list(self.included)
            return True
        pairs = self.triple_pairs[i]
        cod = self.cod
        undec = self.undec

        # include first
        self.bits[i] = 1
        for p in pairs:
            cod[p] += 1
            undec[p] -= 1
        self.included.append(i)
        nfp, nsat, feasible = self._advance_sym(fp, satisfied, i + 1)
        if feasible:
            npending = pending + 1
            descend = True
            if npending >= self.stride:
                if self._forbidden():
                    self.prunings += 1
                    descend = False
                else:
                    npending = 0
            if descend and self.search(i + 1, npending, nfp, nsat):
                return True
        else:
            self.prunings += 1
        self.included.pop()
        for p in pairs:
            cod[p] -= 1
            undec[p] += 1

        # then exclude
        self.bits[i] = 0
        for p in pairs:
            undec[p] -= 1
        if all(cod[p] + undec[p] >= self.d for p in pairs):
            nfp, nsat, feasible = self._advance_sym(fp, satisfied, i + 1)
            if feasible:
                if self.search(i + 1, pending, nfp, nsat):
                    return True
            else:
                self.prunings += 1
        else:
            self.prunings += 1
        for p in pairs:
            undec[p] += 1
        return False


def _execute_task(payload: tuple):
    (n, length, mode, d, stride, symmetry, prefix, pending, fp, satisfied, budget) = payload
    dec = _Decision(n, length, mode, d, stride, symmetry, budget=budget)
    dec.replay(prefix)
    try:
        found = dec.search(len(prefix), pending, fp, satisfied)
    except _TaskAbort:
        return None, dec.nodes, dec.prunings, True
    return (tuple(dec.witness) if found else None), dec.nodes, dec.prunings, False


def ex2_decision(
    cfg: SearchConfig, d: int, stats: SearchStats | None = None
) -> Hypergraph3 | None:
    """A hypergraph with min codegree >= d and no forbidden walk, or None.

    The returned witness is the first one in the deterministic DFS order,
    independent of cfg.workers.  Raises SearchBudgetExceeded when the node
    budget runs out before the answer is certain.
    """
    if not 0 <= d <= cfg.n - 2:
        raise ValueError(f"target codegree {d} outside [0, {cfg.n - 2}]")
    if stats is None:
        stats = SearchStats()
    if cfg.mode == "injective" and cfg.length > cfg.n:
        # injective copies need `length` distinct vertices: nothing is forbidden
        return complete_hypergraph(cfg.n)

    dec = _Decision(cfg.n, cfg.length, cfg.mode, d, cfg.walk_check_stride, cfg.symmetry)
    split = _SPLIT_DEPTH if dec.total >= _SPLIT_MIN_TRIPLES else 0
    if split:
        dec.collect_at = split
        dec.search(0, 0, 0, False)
        tasks = dec.tasks
    else:
        tasks = [((), 0, 0, False)]
    stats.add(dec.nodes, dec.prunings)

    budget_per_task = None
    if cfg.node_budget is not None:
        budget_per_task = max(1, cfg.node_budget // max(1, len(tasks)))
    payloads = [
        (cfg.n, cfg.length, cfg.mode, d, cfg.walk_check_stride, cfg.symmetry,
         prefix, pending, fp, satisfied, budget_per_task)
        for prefix, pending, fp, satisfied in tasks
    ]
    if cfg.workers > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_execute_task, payloads))
    else:
        results = [_execute_task(p) for p in payloads]

    witness_idx = None
    witness_triples: tuple[int, ...] | None = None
    first_abort = None
    for idx, (found, nodes, prunings, aborted) in enumerate(results):
        stats.add(nodes, prunings)
        if aborted and first_abort is None:
            first_abort = idx
        if found is not None and witness_idx is None:
            witness_idx = idx
            witness_triples = found
    if first_abort is not None and (witness_idx is None or first_abort < witness_idx):
        raise SearchBudgetExceeded(stats)
    if witness_triples is None:
        return None
    dec_triples = dec.triples
    return Hypergraph3.from_edges(cfg.n, (dec_triples[i] for i in witness_triples))


_EXACT_MAX_N = 7


def ex2_exact(cfg: SearchConfig) -> SearchResult:
    """Largest d admitting a decision witness, with the witness re-verified.

    Supported exact range: n <= 6 guaranteed, n = 7 best-effort (symmetry
    reduction recommended).  For the forbidden length 11 in hom mode the
    result is checked against the floor(n/3) ceiling; exceeding it would
    falsify the library and raises.
    """
    if cfg.n > _EXACT_MAX_N:
        raise ValueError(f"exact search supports n <= {_EXACT_MAX_N}, got {cfg.n}")
    stats = SearchStats()
    if cfg.mode == "injective" and cfg.length > cfg.n:
        witness = complete_hypergraph(cfg.n)
        return SearchResult(value=cfg.n - 2, witness=witness, status="exact", stats=stats)

    value: int | None = None
    witness: Hypergraph3 | None = None
    try:
        for d in range(0, cfg.n - 1):
            found = ex2_decision(cfg, d, stats)
            if found is None:
                break
            value, witness = d, found
    except SearchBudgetExceeded:
        return SearchResult(value=None, witness=None, status="unknown", stats=stats)

    if value is None or witness is None:
        raise AssertionError("the empty hypergraph satisfies d = 0; search is broken")
    if witness.min_codegree() != value:
        raise AssertionError("witness min codegree does not match the computed value")
    if cfg.mode == "hom":
        if exists_closed_tight_walk(witness, cfg.length):
            raise AssertionError("witness contains a forbidden closed tight walk")
        if cfg.length == 11 and value > cfg.n // 3:
            raise AssertionError(
                f"value {value} exceeds floor(n/3) = {cfg.n // 3}: theorem violation"
            )
    else:
        if find_injective_tight_cycle(witness, cfg.length) is not None:
            raise AssertionError("witness contains a forbidden injective tight cycle")
    return SearchResult(value=value, witness=witness, status="exact", stats=stats)


@dataclass(frozen=True)
class ProfileRow:
    n: int
    value: int | None
    ratio: float | None
    status: str


def density_profile(length: int, n_values, mode: str = "hom", workers: int = 1,
                    node_budget: int | None = None, symmetry: bool = False) -> list[ProfileRow]:
    """ex2(n)/n rows over a range of n; per-row budget overruns become 'unknown'."""
    rows = []
    for n in n_values:
        cfg = SearchConfig(n=n, length=length, mode=mode, workers=workers,
                           node_budget=node_budget, symmetry=symmetry)
        result = ex2_exact(cfg)
        ratio = None if result.value is None else result.value / n
        rows.append(ProfileRow(n=n, value=result.value, ratio=ratio, status=result.status))
    return rows
