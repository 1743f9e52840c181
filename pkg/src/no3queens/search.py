"""Exhaustive symmetry-reduced backtracking for minimum saturated placements.

Placements of a fixed size q are enumerated in (x, y)-lexicographic square
order.  Boards live in Python integers as bitboards: square (x, y) is bit
(x - 1) * n + (y - 1), every line carries a precomputed square mask, and a
running "covered" mask holds the union of all lines that have reached k - 1
queens.  That one mask drives both rules of the game: placing on a covered
square is illegal (it would complete k in a line), and a leaf is saturated
exactly when occupied | covered fills the board.

Symmetry reduction restricts the first (lexicographically least) queen to
the octant x <= y <= ceil(n / 2).  Every placement has a dihedral image
whose least queen lands there: take the image with lexicographically least
sorted square tuple; comparing it against its own mirror in x, mirror in y,
and transpose forces the least queen into that octant.  Existence results
are therefore exhaustive up to symmetry.

Work is split into independent subtree tasks at a fixed prefix depth of two
queens, which a pool of worker processes consumes from a shared queue.  The
reported minimum does not depend on the worker count.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from multiprocessing import get_context

from .geometry import BoardRangeError, Placement, Square

WORKER_COUNT_ENV = "NO3QUEENS_MAX_WORKERS"

# Forward-coverage pruning scans every line, so it only runs once at most
# this many queens remain; earlier it almost never fires.
_COVERAGE_GATE = 3

# Subtree tasks fix this many leading queens.
_SPLIT_DEPTH = 2


class InconclusiveSearchError(RuntimeError):
    """The node budget ran out before existence could be settled.

    Distinct from a nonexistence result: the search space was not exhausted.
    For minimum-size scans, ``bracket`` holds the best (lower, upper) bounds
    established before the budget ran out.
    """

    def __init__(self, message: str, *, n: int, q: int, nodes: int,
                 bracket: tuple[int, int] | None = None):
        super().__init__(message)
        self.n = n
        self.q = q
        self.nodes = nodes
        self.bracket = bracket


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the exhaustive search.

    ``coverage_prune`` controls the forward check that abandons a branch as
    soon as some already-passed square can never reach two attackers with
    the remaining budget.  It is sound but optional, so exhaustiveness can
    be cross-checked with it disabled.
    """

    k: int = 3
    worker_count: int = 1
    node_budget: int | None = None
    symmetry_reduction: bool = True
    coverage_prune: bool = True

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if self.worker_count < 1:
            raise ValueError(f"worker_count must be >= 1, got {self.worker_count}")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be positive when given")


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    coverage_prunes: int = 0
    symmetry_skipped_roots: int = 0
    tasks: int = 0
    workers: int = 1
    elapsed: float = 0.0

    def absorb(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.coverage_prunes += other.coverage_prunes
        self.symmetry_skipped_roots += other.symmetry_skipped_roots
        self.tasks += other.tasks
        self.elapsed += other.elapsed


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    minimum: int
    witness: Placement
    stats: SearchStats


def lower_bound(n: int) -> int:
    """Proven lower bound for the k = 3 minimum: n, or n - 1 when n = 4t + 3."""
    if n < 1:
        raise BoardRangeError(f"board side must be >= 1, got {n}")
    return n - 1 if n % 4 == 3 else n


def naive_lower_bound(n: int) -> int:
    """Covering bound ceil(n / 2): each queen attacks at most 4n - 4 squares."""
    if n < 1:
        raise BoardRangeError(f"board side must be >= 1, got {n}")
    return (n + 1) // 2


@lru_cache(maxsize=None)
def _board_tables(n: int) -> tuple[tuple[tuple[int, int, int, int], ...], tuple[int, ...]]:
    """Per-square line ids and per-line square masks, square index (x-1)*n + (y-1)."""
    num_lines = 6 * n - 2
    sq_lines = []
    for i in range(n * n):
        xm, ym = divmod(i, n)
        x, y = xm + 1, ym + 1
        sq_lines.append((
            x - 1,                          # V, ids [0, n)
            n + y - 1,                      # H, ids [n, 2n)
            2 * n + (x - y + n - 1),        # D, ids [2n, 4n-1)
            4 * n - 1 + (x + y - 2),        # A, ids [4n-1, 6n-2)
        ))
    masks = [0] * num_lines
    for i, lids in enumerate(sq_lines):
        for lid in lids:
            masks[lid] |= 1 << i
    return tuple(sq_lines), tuple(masks)


class _BudgetExceeded(Exception):
    pass


class _Engine:
    """Search state for one (n, q, k) problem, reusable across subtree tasks."""

    def __init__(self, n: int, q: int, k: int, coverage_prune: bool,
                 node_budget: int | None):
        self.n = n
        self.q = q
        self.threshold = k - 1
        self.sq_lines, self.masks = _board_tables(n)
        self.num_lines = len(self.masks)
        self.full = (1 << (n * n)) - 1
        self.counts = [0] * self.num_lines
        self.coverage_prune = coverage_prune
        self.node_budget = node_budget
        self.nodes = 0
        self.leaves = 0
        self.coverage_prunes = 0

    def run_prefix(self, prefix: tuple[int, ...]):
        """Exhaust all completions of a fixed queen prefix.

        Returns (witness_mask_or_None, nodes, leaves, prunes, budget_hit)
        where the counters are deltas for this task alone.
        """
        nodes0, leaves0, prunes0 = self.nodes, self.leaves, self.coverage_prunes
        witness = None
        budget_hit = False
        try:
            witness = self._search(prefix)
        except _BudgetExceeded:
            budget_hit = True
            # recursion unwound abnormally, so the counters are stale
            self.counts = [0] * self.num_lines
        return (witness, self.nodes - nodes0, self.leaves - leaves0,
                self.coverage_prunes - prunes0, budget_hit)

    def _search(self, prefix: tuple[int, ...]):
        counts = self.counts
        sq_lines = self.sq_lines
        masks = self.masks
        t = self.threshold
        q = self.q
        full = self.full
        num_lines = self.num_lines
        budget = self.node_budget
        prune = self.coverage_prune
        gate = _COVERAGE_GATE
        n = self.n
        base_nodes = self.nodes
        nodes = 0
        leaves = 0
        prunes = 0

        def rec(last, placed, occ, cov):
            nonlocal nodes, leaves, prunes
            nodes += 1
            if budget is not None and base_nodes + nodes > budget:
                raise _BudgetExceeded
            need = q - placed
            if need == 0:
                leaves += 1
                return occ if occ | cov == full else None
            high = full ^ ((1 << (last + 1)) - 1)
            cand = high & ~(cov | occ)
            if cand.bit_count() < need:
                return None
            # squares are taken in column-major order, so columns before the
            # frontier are closed; each open column holds at most t queens
            col0 = (last + 1) // n
            slack0 = t - counts[col0]
            if (slack0 if slack0 > 0 else 0) + t * (n - 1 - col0) < need:
                return None
            if prune and need <= gate:
                alive = 0
                shift = last + 1
                for lid in range(num_lines):
                    d = t - counts[lid]
                    if d <= 0 or d > need:
                        continue
                    m = masks[lid]
                    if (m >> shift).bit_count() >= d:
                        alive |= m
                # every already-passed empty square needs a live line
                if (full ^ high) & ~(occ | cov | alive):
                    prunes += 1
                    return None
                # future squares with no live line must all be occupied
                if (cand & ~alive).bit_count() > need:
                    prunes += 1
                    return None
            while cand:
                bit = cand & -cand
                cand ^= bit
                j = bit.bit_length() - 1
                newcov = cov
                lids = sq_lines[j]
                for lid in lids:
                    c = counts[lid] + 1
                    counts[lid] = c
                    if c == t:
                        newcov |= masks[lid]
                found = rec(j, placed + 1, occ | bit, newcov)
                for lid in lids:
                    counts[lid] -= 1
                if found is not None:
                    return found
            return None

        occ = 0
        cov = 0
        placed: list[int] = []
        last = -1
        valid = True
        for j in prefix:
            bit = 1 << j
            if j <= last or (cov | occ) & bit:
                valid = False
                break
            occ |= bit
            last = j
            for lid in sq_lines[j]:
                c = counts[lid] + 1
                counts[lid] = c
                if c == t:
                    cov |= masks[lid]
            placed.append(j)

        witness = None
        try:
            if valid:
                witness = rec(last, len(placed), occ, cov)
        finally:
            for j in reversed(placed):
                for lid in sq_lines[j]:
                    counts[lid] -= 1
            self.nodes += nodes
            self.leaves += leaves
            self.coverage_prunes += prunes
        return witness


def _octant_first_squares(n: int) -> list[int]:
    """Square indices allowed for the least queen under symmetry reduction.

    Any placement has a dihedral image whose lexicographically least queen
    (x, y) satisfies x <= y <= ceil(n / 2); see the module docstring.
    """
    m = (n + 1) // 2
    return [(x - 1) * n + (y - 1) for x in range(1, m + 1) for y in range(x, m + 1)]


def _task_prefixes(n: int, q: int, symmetry: bool) -> list[tuple[int, ...]]:
    nn = n * n
    firsts = _octant_first_squares(n) if symmetry else list(range(nn))
    if q == 0:
        return [()]
    if q < _SPLIT_DEPTH:
        return [(f,) for f in firsts]
    return [(f, s) for f in firsts for s in range(f + 1, nn)]


def resolve_worker_count(requested: int) -> int:
    """Apply the optional NO3QUEENS_MAX_WORKERS environment cap."""
    count = max(1, requested)
    raw = os.environ.get(WORKER_COUNT_ENV)
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            return count
        if cap >= 1:
            count = min(count, cap)
    return count


_worker_engine: _Engine | None = None


def _init_worker(n, q, k, coverage_prune, node_budget):
    global _worker_engine
    _worker_engine = _Engine(n, q, k, coverage_prune, node_budget)


def _run_worker_task(prefix):
    assert _worker_engine is not None
    return _worker_engine.run_prefix(prefix)


def _mask_to_placement(n: int, mask: int) -> Placement:
    squares = []
    while mask:
        bit = mask & -mask
        i = bit.bit_length() - 1
        mask ^= bit
        squares.append((i // n + 1, i % n + 1))
    return Placement(n, frozenset(squares))


def _exists_with_stats(n: int, q: int,
                       config: SearchConfig) -> tuple[Placement | None, SearchStats]:
    if n < 1:
        raise BoardRangeError(f"board side must be >= 1, got {n}")
    if q < 0 or q > n * n:
        raise BoardRangeError(f"queen count {q} out of range for B_{n}")
    start = time.perf_counter()
    workers = resolve_worker_count(config.worker_count)
    stats = SearchStats(workers=workers)
    # no k in a line caps every row at k - 1 queens
    if q > (config.k - 1) * n:
        stats.elapsed = time.perf_counter() - start
        return None, stats
    tasks = _task_prefixes(n, q, config.symmetry_reduction)
    stats.tasks = len(tasks)
    if config.symmetry_reduction:
        stats.symmetry_skipped_roots = n * n - len(_octant_first_squares(n))

    witness_mask = None
    budget_hit = False
    if workers == 1 or len(tasks) <= 1:
        engine = _Engine(n, q, config.k, config.coverage_prune, config.node_budget)
        for prefix in tasks:
            found, nodes, leaves, prunes, hit = engine.run_prefix(prefix)
            stats.nodes += nodes
            stats.leaves += leaves
            stats.coverage_prunes += prunes
            if found is not None:
                witness_mask = found
                break
            if hit:
                budget_hit = True
                break
    else:
        ctx = get_context()
        pool = ctx.Pool(
            processes=min(workers, len(tasks)),
            initializer=_init_worker,
            initargs=(n, q, config.k, config.coverage_prune, config.node_budget),
        )
        try:
            chunk = max(1, len(tasks) // (workers * 8))
            for found, nodes, leaves, prunes, hit in pool.imap_unordered(
                    _run_worker_task, tasks, chunk):
                stats.nodes += nodes
                stats.leaves += leaves
                stats.coverage_prunes += prunes
                if found is not None:
                    witness_mask = found
                    break
                if hit or (config.node_budget is not None
                           and stats.nodes > config.node_budget):
                    budget_hit = True
                    break
        finally:
            pool.terminate()
            pool.join()

    stats.elapsed = time.perf_counter() - start
    if witness_mask is None and budget_hit:
        raise InconclusiveSearchError(
            f"node budget {config.node_budget} exhausted on B_{n} at size {q} "
            f"after {stats.nodes} nodes; existence undecided",
            n=n, q=q, nodes=stats.nodes)
    if witness_mask is None:
        return None, stats
    return _mask_to_placement(n, witness_mask), stats


def exists_good_of_size(n: int, q: int,
                        config: SearchConfig | None = None) -> Placement | None:
    """A good placement of exactly q queens on B_n, or None if none exists.

    The search is exhaustive (up to dihedral symmetry when enabled), so a
    None answer is a proof of nonexistence.  A budget shortfall raises
    InconclusiveSearchError instead of returning None.
    """
    witness, _ = _exists_with_stats(n, q, config or SearchConfig())
    return witness


def greedy_good_placement(n: int, k: int = 3) -> Placement:
    """A good placement built by one lexicographic sweep; an upper bound
    witness for the minimum.

    Squares are taken in (x, y) order and occupied unless some line through
    them already holds k - 1 queens.  Counts only grow, so every skipped
    square stays blocked and the sweep ends maximal, hence good.
    """
    if n < 1:
        raise BoardRangeError(f"board side must be >= 1, got {n}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    sq_lines, masks = _board_tables(n)
    counts = [0] * len(masks)
    t = k - 1
    occ = 0
    cov = 0
    for i in range(n * n):
        if (cov >> i) & 1:
            continue
        occ |= 1 << i
        for lid in sq_lines[i]:
            c = counts[lid] + 1
            counts[lid] = c
            if c == t:
                cov |= masks[lid]
    return _mask_to_placement(n, occ)


def solve_min_good(n: int, config: SearchConfig | None = None) -> SearchResult:
    """Minimum size of a good placement on B_n, with a witness.

    For k = 3 the scan starts at the proven lower bound; for other k it
    starts at 1.  Budget exhaustion raises InconclusiveSearchError whose
    bracket pairs the first undecided size with a greedy upper bound.
    """
    config = config or SearchConfig()
    if n < 1:
        raise BoardRangeError(f"board side must be >= 1, got {n}")
    start_q = lower_bound(n) if config.k == 3 else 1
    total = SearchStats(workers=resolve_worker_count(config.worker_count))
    begin = time.perf_counter()
    for q in range(start_q, (config.k - 1) * n + 1):
        try:
            witness, stats = _exists_with_stats(n, q, config)
        except InconclusiveSearchError as exc:
            upper = greedy_good_placement(n, config.k).q
            raise InconclusiveSearchError(
                f"budget exhausted on B_{n}: minimum known to lie in "
                f"[{q}, {upper}]",
                n=n, q=q, nodes=total.nodes + exc.nodes,
                bracket=(q, upper)) from exc
        total.absorb(stats)
        if witness is not None:
            total.elapsed = time.perf_counter() - begin
            return SearchResult(n=n, k=config.k, minimum=q,
                                witness=witness, stats=total)
    raise RuntimeError(
        f"no saturated placement of any size up to {(config.k - 1) * n} on B_{n}; "
        "this should be impossible")
